import itertools
import random

import pytest

from supersolve.absorbing import (
    TableBudgetError,
    TabulatedFunction,
    absorbing_degree,
    component_moebius,
    component_recursive,
    decompose,
    is_absorbing_in,
    mask_indices,
    restrict_vector,
    subset_mask,
)

AND = TabulatedFunction(2, 2, 2, (0, 0, 0, 1))
XOR = TabulatedFunction(2, 2, 2, (0, 1, 1, 0))
ZERO3 = TabulatedFunction(2, 3, 2, (0,) * 8)


def all_points(size, n):
    return list(itertools.product(range(size), repeat=n))


def test_restrict_vector():
    assert restrict_vector((1, 2, 3), subset_mask([1, 3])) == (1, 0, 3)
    assert restrict_vector((1, 2, 3), 0) == (0, 0, 0)
    assert restrict_vector((1, 2, 3), 0b111) == (1, 2, 3)
    assert restrict_vector((1, 2), 0b01, zero=9) == (1, 9)


def test_mask_helpers():
    assert subset_mask([1, 3]) == 0b101
    assert mask_indices(0b101) == [1, 3]
    with pytest.raises(ValueError):
        subset_mask([0])


def test_component_recursive_and_examples():
    empty = component_recursive(AND, 0)
    assert empty.table == (0, 0, 0, 0)  # f(0,0) = 0
    first = component_recursive(AND, 0b01)
    assert first.table == (0, 0, 0, 0)  # f(a1, 0) - f(0,0) = 0
    both = component_recursive(AND, 0b11)
    assert both.table == AND.table  # all smaller components vanish


def test_component_moebius_examples():
    assert component_moebius(AND, 0b11, (1, 1)) == 1
    for a in all_points(2, 2):
        assert component_moebius(XOR, 0b11, a) == 0
    assert component_moebius(AND, 0, (1, 1)) == AND((0, 0))


def test_absorbing_degree_examples():
    assert absorbing_degree(ZERO3) == -1
    assert absorbing_degree(XOR) == 1
    assert absorbing_degree(AND) == 2


def test_is_absorbing_in_examples():
    assert is_absorbing_in(AND, 0b11)
    assert not is_absorbing_in(AND, 0b01)  # depends on coordinate 2
    const0 = TabulatedFunction(2, 2, 2, (0, 0, 0, 0))
    assert is_absorbing_in(const0, 0)
    const1 = TabulatedFunction(2, 2, 2, (1, 1, 1, 1))
    assert is_absorbing_in(const1, 0)
    assert not is_absorbing_in(const1, 0b01)  # does not vanish at a1 = 0


def test_mask_beyond_arity_rejected():
    with pytest.raises(ValueError, match="beyond arity"):
        component_recursive(AND, 0b100)
    with pytest.raises(ValueError, match="beyond arity"):
        component_moebius(AND, 0b1000, (1, 1))
    with pytest.raises(ValueError, match="beyond arity"):
        is_absorbing_in(AND, -1)


def _check_decomposition(f):
    dec = decompose(f)
    points = all_points(f.domain_size, f.arity)
    for mask, comp in dec.components.items():
        assert is_absorbing_in(comp, mask), (f.table, mask)
    for idx, a in enumerate(points):
        total = sum(comp.table[idx] for comp in dec.components.values()) % f.prime
        assert total == f.table[idx]
    # spot-check Moebius agreement on every component at a few points
    rng = random.Random(hash(f.table) & 0xFFFF)
    sample = rng.sample(points, min(4, len(points)))
    for mask, comp in dec.components.items():
        for a in sample:
            idx = 0
            for v in a:
                idx = idx * f.domain_size + v
            assert component_moebius(f, mask, a) == comp.table[idx]


def test_reconstruction_exhaustive_two_element_domain():
    for n in range(0, 4):
        for table in itertools.product(range(2), repeat=2**n):
            _check_decomposition(TabulatedFunction(2, n, 2, table))


def test_reconstruction_random_larger_domains():
    rng = random.Random(42)
    for size, n, p in [(3, 2, 2), (3, 3, 3), (2, 4, 2), (3, 4, 2), (3, 3, 5)]:
        for _ in range(25):
            table = tuple(rng.randrange(p) for _ in range(size**n))
            _check_decomposition(TabulatedFunction(size, n, p, table))


def test_uniqueness_perturbation_breaks_an_invariant():
    # Adding a nonzero I-respecting bump to one component keeps every
    # component absorbing but breaks the reconstruction sum, so no second
    # all-absorbing family can sum to f.
    f = TabulatedFunction(2, 2, 2, (0, 1, 1, 1))  # OR
    dec = decompose(f)
    target = 0b01
    bumped = {}
    points = all_points(2, 2)
    for mask, comp in dec.components.items():
        if mask != target:
            bumped[mask] = comp
            continue
        table = list(comp.table)
        for idx, a in enumerate(points):
            if a[0] != 0:  # bump the whole fiber over coordinate 1
                table[idx] = (table[idx] + 1) % 2
        bumped[mask] = TabulatedFunction(2, 2, 2, tuple(table))
    for mask, comp in bumped.items():
        assert is_absorbing_in(comp, mask)
    sums = [
        sum(comp.table[idx] for comp in bumped.values()) % 2
        for idx in range(len(f.table))
    ]
    assert tuple(sums) != f.table


def test_budget_refused():
    f = TabulatedFunction(2, 4, 2, (0,) * 16)
    with pytest.raises(TableBudgetError):
        decompose(f, max_points=8)
    with pytest.raises(TableBudgetError):
        component_recursive(f, 0b1, max_points=8)
    with pytest.raises(TableBudgetError):
        absorbing_degree(f, max_points=8)


def test_decomposition_golden_dump():
    dump = decompose(AND).to_json_dict()
    assert dump == {
        "domain_size": 2,
        "arity": 2,
        "prime": 2,
        "absorbing_degree": 2,
        "components": {
            "0": [0, 0, 0, 0],
            "1": [0, 0, 0, 0],
            "2": [0, 0, 0, 0],
            "3": [0, 0, 0, 1],
        },
    }


def test_validation():
    with pytest.raises(ValueError, match="not prime"):
        TabulatedFunction(2, 1, 4, (0, 0))
    with pytest.raises(ValueError, match="table length"):
        TabulatedFunction(2, 2, 2, (0, 0, 0))
    with pytest.raises(ValueError, match="not in"):
        TabulatedFunction(2, 1, 2, (0, 3))


def test_abelian_polynomials_have_degree_at_most_one(z4):
    # small version of the acceptance sweep: affine maps over Z4 composed
    # with the parity homomorphism have no components above singletons
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 3)
        c = rng.randrange(4)
        coeffs = [rng.randrange(4) for _ in range(n)]
        table = tuple(
            (c + sum(m * a for m, a in zip(coeffs, point))) % 4 % 2
            for point in all_points(4, n)
        )
        f = TabulatedFunction(4, n, 2, table)
        assert absorbing_degree(f) <= 1
