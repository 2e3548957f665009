"""Absorbing decompositions of tabulated functions A^n -> Z_p.

A function f is *absorbing in I* (a subset of coordinates) if it depends
only on the coordinates in I and vanishes whenever any coordinate in I is
the designated absorbing element 0.  Every f splits uniquely into a sum
of I-absorbing components f_I over all subsets I; the largest |I| with a
nonzero component is the absorbing degree (-1 for the zero function).

Subsets are bitmasks: bit j-1 stands for coordinate j (1-based).  The
absorbing element is fixed as index 0 of the domain; relabel before
tabulating if another element should absorb.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import is_prime

DEFAULT_POINT_BUDGET = 2**20


class TableBudgetError(ValueError):
    """Decomposition would materialize more table points than allowed."""


@dataclass(frozen=True)
class TabulatedFunction:
    domain_size: int
    arity: int
    prime: int
    table: tuple[int, ...]

    def __post_init__(self):
        if self.domain_size < 1:
            raise ValueError(f"domain_size must be >= 1, got {self.domain_size}")
        if self.arity < 0:
            raise ValueError(f"arity must be >= 0, got {self.arity}")
        if not is_prime(self.prime):
            raise ValueError(f"{self.prime} is not prime")
        expected = self.domain_size**self.arity
        if len(self.table) != expected:
            raise ValueError(
                f"table length {len(self.table)}, expected {expected}"
            )
        for j, v in enumerate(self.table):
            if not 0 <= v < self.prime:
                raise ValueError(f"table[{j}] value {v} not in [0, {self.prime})")

    @classmethod
    def from_callable(cls, domain_size, arity, prime, func) -> "TabulatedFunction":
        points = _points(domain_size, arity)
        return cls(domain_size, arity, prime, tuple(func(a) % prime for a in points))

    def __call__(self, args) -> int:
        idx = 0
        for a in args:
            idx = idx * self.domain_size + a
        return self.table[idx]

    def is_zero(self) -> bool:
        return not any(self.table)


def _points(size: int, arity: int):
    """All argument tuples in row-major (lexicographic) order."""
    out = [()]
    for _ in range(arity):
        out = [p + (a,) for p in out for a in range(size)]
    return out


def restrict_vector(a, mask: int, zero: int = 0) -> tuple[int, ...]:
    """Copy coordinates whose (1-based) position is in the mask; zero the rest."""
    return tuple(v if mask >> i & 1 else zero for i, v in enumerate(a))


def subset_mask(indices) -> int:
    """Bitmask of 1-based coordinate indices."""
    mask = 0
    for i in indices:
        if i < 1:
            raise ValueError(f"coordinate indices are 1-based, got {i}")
        mask |= 1 << (i - 1)
    return mask


def mask_indices(mask: int) -> list[int]:
    return [i + 1 for i in range(mask.bit_length()) if mask >> i & 1]


def _submasks(mask: int):
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _check_budget(f: TabulatedFunction, max_points: int):
    if len(f.table) > max_points:
        raise TableBudgetError(
            f"{f.domain_size}**{f.arity} = {len(f.table)} table points exceed "
            f"the budget of {max_points}"
        )


def _check_mask(f: TabulatedFunction, mask: int):
    if mask < 0 or mask >> f.arity:
        raise ValueError(f"mask {mask} names coordinates beyond arity {f.arity}")


def _components_upto(f: TabulatedFunction, top: int) -> dict[int, TabulatedFunction]:
    """Components f_J for every J <= top, by the size recursion
    f_I(a) = f(a restricted to I) - sum of f_J(a) over proper J < I."""
    points = _points(f.domain_size, f.arity)
    masks = sorted(_submasks(top), key=lambda m: (m.bit_count(), m))
    comps: dict[int, list[int]] = {}
    for mask in masks:
        table = []
        for idx, a in enumerate(points):
            value = f(restrict_vector(a, mask))
            for sub in _submasks(mask):
                if sub != mask:
                    value -= comps[sub][idx]
            table.append(value % f.prime)
        comps[mask] = table
    return {
        mask: TabulatedFunction(f.domain_size, f.arity, f.prime, tuple(t))
        for mask, t in comps.items()
    }


@dataclass(frozen=True)
class AbsorbingDecomposition:
    function: TabulatedFunction
    components: dict[int, TabulatedFunction]

    def degree(self) -> int:
        nonzero = [m.bit_count() for m, c in self.components.items() if not c.is_zero()]
        return max(nonzero, default=-1)

    def to_json_dict(self) -> dict:
        """Debug dump: subset bitmask (as string key) -> component table."""
        return {
            "domain_size": self.function.domain_size,
            "arity": self.function.arity,
            "prime": self.function.prime,
            "absorbing_degree": self.degree(),
            "components": {
                str(mask): list(self.components[mask].table)
                for mask in sorted(self.components)
            },
        }


def decompose(
    f: TabulatedFunction, max_points: int = DEFAULT_POINT_BUDGET
) -> AbsorbingDecomposition:
    """Full absorbing decomposition: one component per subset of [n]."""
    _check_budget(f, max_points)
    full = (1 << f.arity) - 1
    return AbsorbingDecomposition(f, _components_upto(f, full))


def component_recursive(
    f: TabulatedFunction, mask: int, max_points: int = DEFAULT_POINT_BUDGET
) -> TabulatedFunction:
    """The I-absorbing component of f, by the size recursion."""
    _check_budget(f, max_points)
    _check_mask(f, mask)
    return _components_upto(f, mask)[mask]


def component_moebius(f: TabulatedFunction, mask: int, a) -> int:
    """Alternating-sum value of the I-component at one point:
    sum over J <= I of (-1)**(|I| + |J|) * f(a restricted to J), mod p."""
    _check_mask(f, mask)
    total = 0
    bits = mask.bit_count()
    for sub in _submasks(mask):
        sign = -1 if (bits + sub.bit_count()) % 2 else 1
        total += sign * f(restrict_vector(a, sub))
    return total % f.prime


def absorbing_degree(
    f: TabulatedFunction, max_points: int = DEFAULT_POINT_BUDGET
) -> int:
    """max |J| with a nonzero component; -1 for the zero function."""
    return decompose(f, max_points).degree()


def is_absorbing_in(f: TabulatedFunction, mask: int) -> bool:
    """True iff f depends only on coordinates in the mask and vanishes
    whenever some masked coordinate is 0."""
    _check_mask(f, mask)
    size, n = f.domain_size, f.arity
    points = _points(size, n)
    # dependence: no coordinate outside the mask may matter
    for j in range(n):
        if mask >> j & 1:
            continue
        stride = size ** (n - 1 - j)
        for idx, a in enumerate(points):
            if a[j] != 0:
                continue
            base = f.table[idx]
            for v in range(1, size):
                if f.table[idx + v * stride] != base:
                    return False
    # absorption at each masked coordinate
    for idx, a in enumerate(points):
        if any(a[j] == 0 for j in range(n) if mask >> j & 1):
            if f.table[idx] != 0:
                return False
    return True
