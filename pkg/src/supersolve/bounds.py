"""Weight bounds for the bounded-weight solver.

For an algebra of cardinality |A| = prod p_i^alpha_i whose operations have
arity at most mu, a solvable system of s equations has a solution whose
weight (number of coordinates differing from the chosen base element) is
at most the *tight* bound

    s * sum_i k_i * alpha_i * (p_i - 1),   k_i = (mu * (p_i^alpha_i - 1))**(alpha_i - 1),

which in turn is at most the *loose* closed form s * |A|**(log2(mu) +
log2(|A|) + 1).  The solver searches up to the tight bound; the loose form
and e = loose + 1 are reported for complexity accounting.  All bounds
assume the algebra is supernilpotent; for other algebras the report is
meaningless.
"""

from __future__ import annotations

from dataclasses import dataclass

import mpmath


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def factorize(cardinality: int) -> list[tuple[int, int]]:
    """Trial-division prime factorization, primes ascending; [] for 1."""
    if cardinality < 1:
        raise ValueError(f"cardinality must be >= 1, got {cardinality}")
    out = []
    n = cardinality
    d = 2
    while d * d <= n:
        a = 0
        while n % d == 0:
            n //= d
            a += 1
        if a:
            out.append((d, a))
        d += 1
    if n > 1:
        out.append((n, 1))
    return out


def k_factor(mu: int, p: int, alpha: int) -> int:
    """Supernilpotency degree bound for one prime-power factor."""
    if mu < 1 or alpha < 1:
        raise ValueError("mu and alpha must be >= 1")
    return (mu * (p**alpha - 1)) ** (alpha - 1)


def tight_weight_bound(
    s: int,
    mu: int,
    cardinality: int,
    overrides: list[int] | None = None,
) -> int:
    """s * sum_i k_i * alpha_i * (p_i - 1) over the factorization of |A|."""
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    factors = factorize(cardinality)
    ks = _k_list(mu, factors, overrides)
    return s * sum(k * a * (p - 1) for k, (p, a) in zip(ks, factors))


def _k_list(mu, factors, overrides):
    if overrides is None:
        return [k_factor(mu, p, a) for p, a in factors]
    if len(overrides) != len(factors):
        raise ValueError(
            f"expected {len(factors)} per-factor overrides, got {len(overrides)}"
        )
    for k in overrides:
        if k < 1:
            raise ValueError(f"override {k} must be positive")
    return list(overrides)


def loose_weight_bound(s: int, mu: int, cardinality: int) -> int:
    """Closed-form bound s * |A|**(log2(mu) + log2(|A|) + 1), rounded up.

    Exact integer arithmetic when |A| is a power of two (the exponent
    denominator cancels); otherwise the ceiling of a 256-bit mpmath
    evaluation, which is a valid upper bound.
    """
    if s < 1 or mu < 1:
        raise ValueError("s and mu must be >= 1")
    if cardinality == 1:
        return s
    if cardinality < 1:
        raise ValueError(f"cardinality must be >= 1, got {cardinality}")
    if cardinality & (cardinality - 1) == 0:
        b = cardinality.bit_length() - 1
        # |A|^(log2 mu) = mu^b and |A|^(log2|A| + 1) = 2^(b*b + b), both exact
        return s * mu**b * 2 ** (b * b + b)
    with mpmath.workprec(256):
        exponent = mpmath.log(mu, 2) + mpmath.log(cardinality, 2) + 1
        value = s * mpmath.mpf(cardinality) ** exponent
        return int(mpmath.ceil(value))


@dataclass(frozen=True)
class BoundReport:
    mu: int
    cardinality: int
    s: int
    factorization: tuple[tuple[int, int], ...]
    k_list: tuple[int, ...]
    tight_bound: int
    loose_bound: int
    effective_bound: int
    e: int
    n: int | None = None


def make_bound_report(
    s: int,
    mu: int,
    cardinality: int,
    n: int | None = None,
    overrides: list[int] | None = None,
) -> BoundReport:
    """All bound figures in one record; effective_bound = min(n, tight)."""
    factors = factorize(cardinality)
    ks = _k_list(mu, factors, overrides)
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    tight = s * sum(k * a * (p - 1) for k, (p, a) in zip(ks, factors))
    loose = loose_weight_bound(s, mu, cardinality)
    if cardinality >= 2 and tight > loose:
        raise AssertionError(
            f"tight bound {tight} exceeds loose bound {loose}; "
            "bound arithmetic is broken"
        )
    effective = tight if n is None else min(n, tight)
    return BoundReport(
        mu=mu,
        cardinality=cardinality,
        s=s,
        factorization=tuple(factors),
        k_list=tuple(ks),
        tight_bound=tight,
        loose_bound=loose,
        effective_bound=effective,
        e=loose + 1,
        n=n,
    )
