"""Explicit search for the small witness sets behind the weight reduction.

Two existence statements drive the solver's correctness, and both are
checkable by brute force at desk scale:

* for any map phi from the size-<=-k subsets of [n] into Z_p^m there is a
  set U with |U| <= k*m*(p-1) whose subsets alone reproduce the total sum
  of phi;
* for functions f_1..f_m : A^n -> Z_p of absorbing degree <= k and any
  point a, there is such a U with f_i(a) = f_i(a restricted to U).

Both searches scan candidate sets in canonical order (size ascending,
then bitmask ascending) and raise TheoremViolation if the guaranteed
bound is exhausted -- which can only mean a coding bug, never input data.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .absorbing import TabulatedFunction, absorbing_degree, restrict_vector
from .bounds import is_prime


class TheoremViolation(RuntimeError):
    """A guaranteed witness was not found within its bound: implementation bug."""


class HypothesisViolation(ValueError):
    """Input data does not satisfy the hypothesis of the search."""


@dataclass(frozen=True)
class SubsetFunction:
    """A map from the subsets of [n] of size <= k (as bitmasks) to Z_p^m."""

    n: int
    k: int
    p: int
    m: int
    values: dict[int, tuple[int, ...]]

    def __post_init__(self):
        if self.n < 1 or self.k < 0 or self.m < 1:
            raise ValueError("need n >= 1, k >= 0, m >= 1")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        expected = set(_masks_upto(self.n, self.k))
        if set(self.values) != expected:
            raise ValueError(
                f"values must cover exactly the {len(expected)} subsets of "
                f"size <= {self.k}"
            )
        for mask, vec in self.values.items():
            if len(vec) != self.m or any(not 0 <= v < self.p for v in vec):
                raise ValueError(f"value at mask {mask} is not a vector in Z_{self.p}^{self.m}")


def _masks_upto(n: int, k: int) -> list[int]:
    out = []
    for size in range(min(k, n) + 1):
        for idxs in combinations(range(n), size):
            out.append(sum(1 << i for i in idxs))
    return out


def _candidates(n: int, max_size: int):
    """Subsets of [n] with |U| <= max_size: size ascending, then mask ascending."""
    by_size: list[list[int]] = [[] for _ in range(max_size + 1)]
    for idxs_size in range(max_size + 1):
        for idxs in combinations(range(n), idxs_size):
            by_size[idxs_size].append(sum(1 << i for i in idxs))
    for group in by_size:
        group.sort()
        yield from group


def _vec_add(a, b, p):
    return tuple((x + y) % p for x, y in zip(a, b))


def ks_find_u(phi: SubsetFunction) -> int:
    """First U (canonical order) whose subsets reproduce phi's total sum.

    Guaranteed to exist with |U| <= k*m*(p-1); returns the bitmask.
    """
    p = phi.p
    total = (0,) * phi.m
    for vec in phi.values.values():
        total = _vec_add(total, vec, p)
    bound = min(phi.n, phi.k * phi.m * (p - 1))
    items = list(phi.values.items())
    for u in _candidates(phi.n, bound):
        partial = (0,) * phi.m
        for mask, vec in items:
            if mask & ~u == 0:
                partial = _vec_add(partial, vec, p)
        if partial == total:
            return u
    raise TheoremViolation(
        f"no witness of size <= {bound} for n={phi.n}, k={phi.k}, p={p}, m={phi.m}"
    )


def redweight_find_u(fs: list[TabulatedFunction], k: int, a) -> int:
    """First U (canonical order) with f_i(a) = f_i(a restricted to U) for all i.

    Every f_i must have absorbing degree <= k (HypothesisViolation
    otherwise); the witness is guaranteed with |U| <= k*len(fs)*(p-1).
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if not fs:
        return 0
    n = fs[0].arity
    p = fs[0].prime
    for f in fs:
        if f.arity != n or f.prime != p or f.domain_size != fs[0].domain_size:
            raise ValueError("all functions must share domain size, arity, and prime")
    for i, f in enumerate(fs):
        deg = absorbing_degree(f)
        if deg > k:
            raise HypothesisViolation(
                f"function {i} has absorbing degree {deg} > k = {k}"
            )
    a = tuple(a)
    if len(a) != n:
        raise ValueError(f"point has length {len(a)}, expected {n}")
    targets = [f(a) for f in fs]
    bound = min(n, k * len(fs) * (p - 1))
    for u in _candidates(n, bound):
        restricted = restrict_vector(a, u)
        if all(f(restricted) == t for f, t in zip(fs, targets)):
            return u
    raise TheoremViolation(
        f"no witness of size <= {bound} for m={len(fs)} functions, k={k}, p={p}"
    )
