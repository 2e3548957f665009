import pytest

from supersolve.groups import (
    cyclic_group,
    dihedral_group,
    klein_four,
    quaternion_group,
    two_element_lattice,
)


@pytest.fixture(scope="session")
def z2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def z3():
    return cyclic_group(3)


@pytest.fixture(scope="session")
def z4():
    return cyclic_group(4)


@pytest.fixture(scope="session")
def z6():
    return cyclic_group(6)


@pytest.fixture(scope="session")
def k4():
    return klein_four()


@pytest.fixture(scope="session")
def d4():
    return dihedral_group(4)


@pytest.fixture(scope="session")
def q8():
    return quaternion_group()


@pytest.fixture(scope="session")
def lattice():
    return two_element_lattice()


@pytest.fixture(scope="session")
def group_fixtures(z2, z3, z4, k4, z6, d4, q8):
    return [z2, z3, z4, k4, z6, d4, q8]
