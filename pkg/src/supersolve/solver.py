"""Deciding solvability by bounded-weight enumeration, with a brute-force oracle.

The bounded solver scans the candidate set of assignments whose weight
(coordinates differing from the base element z) stays below the tight
bound; for supernilpotent algebras a solvable system always has such a
low-weight solution, so an exhausted scan proves unsolvability *given
that precondition*.  Verdicts say which kind they are: found solutions
are re-verified and unconditional, bounded "no" verdicts carry an
explicit conditional flag, and scans that covered all of A^n upgrade to
an unconditional exhaustive verdict.

Candidate order is canonical and deterministic: weight ascending, then
support sets in lexicographic (combinations) order, then value tuples in
lexicographic order over the non-z elements.  The brute-force oracle
scans all of A^n lexicographically.  Both solvers evaluate terms in
chunks through a small postfix compiler backed by numpy table gathers;
reported statistics are exact sequential-scan equivalents: candidates
tested until the verdict, and AST nodes evaluated, where a candidate
evaluates equations left to right and stops at the first mismatch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, product
from math import comb

import numpy as np

from .algebra import AlgebraError, FiniteAlgebra, max_arity
from .bounds import make_bound_report
from .malcev import TernaryFunctionTable, is_malcev
from .terms import (
    Const,
    EquationSystem,
    EvalError,
    Term,
    Var,
    eval_term,
    substitute,
    term_length,
)

_CHUNK = 1 << 16


@dataclass(frozen=True)
class SolveStats:
    candidates_tested: int
    term_evaluations: int


@dataclass(frozen=True)
class SolutionFound:
    assignment: tuple[int, ...]
    verified: bool


@dataclass(frozen=True)
class NoSolutionInBoundedSet:
    bound: int
    conditional: bool = True


@dataclass(frozen=True)
class NoSolutionExhaustive:
    pass


Verdict = SolutionFound | NoSolutionInBoundedSet | NoSolutionExhaustive


@dataclass(frozen=True)
class SolveOutcome:
    verdict: Verdict
    stats: SolveStats

    @property
    def satisfiable(self) -> bool:
        return isinstance(self.verdict, SolutionFound)


@dataclass(frozen=True)
class BenchResult:
    bounded: SolveOutcome
    brute: SolveOutcome
    bounded_seconds: float
    brute_seconds: float

    @property
    def agree(self) -> bool:
        return self.bounded.satisfiable == self.brute.satisfiable


def bounded_weight_count(n: int, w: int, size: int) -> int:
    """Number of assignments with at most min(w, n) non-z coordinates."""
    return sum(comb(n, i) * (size - 1) ** i for i in range(min(w, n) + 1))


def enumerate_bounded_weight(n: int, w: int, size: int, z: int = 0):
    """Assignments with <= min(w, n) coordinates differing from z, in
    canonical order: weight ascending, support lexicographic, values
    lexicographic over the non-z elements in ascending order."""
    if w < 0:
        raise ValueError(f"weight cap must be >= 0, got {w}")
    if not 0 <= z < size:
        raise ValueError(f"base element {z} out of range [0, {size})")
    nonz = [v for v in range(size) if v != z]
    for weight in range(min(w, n) + 1):
        for support in combinations(range(n), weight):
            for values in product(nonz, repeat=weight):
                a = [z] * n
                for pos, v in zip(support, values):
                    a[pos] = v
                yield tuple(a)


# ---------------------------------------------------------------------------
# compiled evaluation


class _CompiledSystem:
    """Postfix programs per equation plus the sequential-cost bookkeeping."""

    def __init__(self, alg: FiniteAlgebra, system: EquationSystem):
        if system.s < 1:
            raise ValueError("system must contain at least one equation")
        self.size = alg.size
        self.n = system.n
        tables = {op.name: np.asarray(op.table, dtype=np.int64) for op in alg.operations}
        self.equations = []
        self.costs = []
        for lhs, rhs in system.equations:
            self.equations.append((self._compile(alg, tables, lhs), self._compile(alg, tables, rhs)))
            self.costs.append(term_length(lhs) + term_length(rhs))

    @staticmethod
    def _compile(alg, tables, term: Term):
        prog = []

        def walk(t):
            if isinstance(t, Var):
                prog.append(("var", t.index - 1))
            elif isinstance(t, Const):
                if not 0 <= t.value < alg.size:
                    raise EvalError(
                        f"constant #{t.value} out of range [0, {alg.size})"
                    )
                prog.append(("const", t.value))
            else:
                op = alg.operation(t.op)
                if len(t.args) != op.arity:
                    raise AlgebraError(
                        f"operation {t.op!r} has arity {op.arity}, "
                        f"got {len(t.args)} arguments"
                    )
                for a in t.args:
                    walk(a)
                prog.append(("op", tables[t.op], op.arity))

        walk(term)
        return prog

    def _eval(self, prog, X: np.ndarray) -> np.ndarray:
        rows = X.shape[0]
        stack: list[np.ndarray] = []
        for instr in prog:
            kind = instr[0]
            if kind == "var":
                stack.append(X[:, instr[1]])
            elif kind == "const":
                stack.append(np.full(rows, instr[1], dtype=np.int64))
            else:
                _, table, arity = instr
                if arity == 0:
                    stack.append(np.full(rows, table[0], dtype=np.int64))
                    continue
                args = stack[len(stack) - arity :]
                del stack[len(stack) - arity :]
                flat = args[0]
                for a in args[1:]:
                    flat = flat * self.size + a
                stack.append(table[flat])
        return stack[-1]

    def scan_chunk(self, X: np.ndarray):
        """Sequential-equivalent result for one candidate chunk.

        Returns (index of first satisfying row or None, candidates counted,
        AST nodes counted), as if rows were tested one by one, each
        evaluating equations in order and stopping at the first mismatch.
        """
        rows = X.shape[0]
        nodes = np.full(rows, self.costs[0], dtype=np.int64)
        lhs, rhs = self.equations[0]
        good = np.equal(self._eval(lhs, X), self._eval(rhs, X))
        for t in range(1, len(self.equations)):
            lhs, rhs = self.equations[t]
            nodes += self.costs[t] * good
            ok = np.equal(self._eval(lhs, X), self._eval(rhs, X))
            good &= ok
        if good.any():
            j = int(good.argmax())
            return j, j + 1, int(nodes[: j + 1].sum())
        return None, rows, int(nodes.sum())


def _lex_chunks(n: int, size: int, chunk: int = _CHUNK):
    """All of A^n, lexicographic (leftmost coordinate most significant)."""
    total = size**n
    strides = [size ** (n - 1 - j) for j in range(n)]
    start = 0
    while start < total:
        stop = min(start + chunk, total)
        r = np.arange(start, stop, dtype=np.int64)
        X = np.empty((stop - start, n), dtype=np.int64)
        for j in range(n):
            X[:, j] = r // strides[j] % size
        yield X
        start = stop


def _weight_chunks(n: int, w: int, size: int, z: int, chunk: int = _CHUNK):
    """The canonical bounded-weight order, in vectorized blocks."""
    base = size - 1
    for weight in range(min(w, n) + 1):
        strides = [base ** (weight - 1 - t) for t in range(weight)]
        block = base**weight
        for support in combinations(range(n), weight):
            start = 0
            while start < block:
                stop = min(start + chunk, block)
                r = np.arange(start, stop, dtype=np.int64)
                X = np.full((stop - start, n), z, dtype=np.int64)
                for t, pos in enumerate(support):
                    digit = r // strides[t] % base
                    X[:, pos] = digit + (digit >= z)
                yield X
                start = stop


def _scan(compiled: _CompiledSystem, chunks):
    tested = 0
    nodes = 0
    for X in chunks:
        j, counted, node_count = compiled.scan_chunk(X)
        tested += counted
        nodes += node_count
        if j is not None:
            return tuple(int(v) for v in X[j]), SolveStats(tested, nodes)
    return None, SolveStats(tested, nodes)


def _verify(alg, system, assignment) -> bool:
    """Independent re-check of a candidate through the plain evaluator."""
    return all(
        eval_term(alg, lhs, assignment) == eval_term(alg, rhs, assignment)
        for lhs, rhs in system.equations
    )


def solve_bounded(
    alg: FiniteAlgebra,
    system: EquationSystem,
    z: int = 0,
    bound: int | None = None,
) -> SolveOutcome:
    """Scan candidates of weight <= bound (default: the tight bound capped
    at n) in canonical order; "no solution" is conditional on the algebra
    being supernilpotent unless the scan covered all of A^n."""
    if not 0 <= z < alg.size:
        raise ValueError(f"base element {z} out of range [0, {alg.size})")
    compiled = _CompiledSystem(alg, system)
    n = system.n
    if bound is None:
        bound = make_bound_report(system.s, max_arity(alg), alg.size, n=n).effective_bound
    if bound < 0:
        raise ValueError(f"bound must be >= 0, got {bound}")
    solution, stats = _scan(compiled, _weight_chunks(n, bound, alg.size, z))
    if solution is not None:
        if not _verify(alg, system, solution):
            raise RuntimeError(
                f"internal error: candidate {solution} failed re-verification"
            )
        return SolveOutcome(SolutionFound(solution, verified=True), stats)
    if bound >= n:
        return SolveOutcome(NoSolutionExhaustive(), stats)
    return SolveOutcome(NoSolutionInBoundedSet(bound=bound, conditional=True), stats)


def solve_brute(alg: FiniteAlgebra, system: EquationSystem) -> SolveOutcome:
    """Full enumeration of A^n in lexicographic order; unconditional verdict."""
    compiled = _CompiledSystem(alg, system)
    solution, stats = _scan(compiled, _lex_chunks(system.n, alg.size))
    if solution is not None:
        if not _verify(alg, system, solution):
            raise RuntimeError(
                f"internal error: candidate {solution} failed re-verification"
            )
        return SolveOutcome(SolutionFound(solution, verified=True), stats)
    return SolveOutcome(NoSolutionExhaustive(), stats)


def normalize_system(
    alg: FiniteAlgebra,
    system: EquationSystem,
    d: TernaryFunctionTable,
    z: int = 0,
) -> list[Term]:
    """Rewrite each equation f = g as one term h = d(f, g, z) whose value-z
    set equals the equation's solution set (d must be Mal'cev)."""
    if not is_malcev(d):
        raise ValueError("normalization requires a Mal'cev table")
    if not 0 <= z < alg.size:
        raise ValueError(f"base element {z} out of range [0, {alg.size})")
    out = []
    for lhs, rhs in system.equations:
        out.append(substitute(d.witness, {1: lhs, 2: rhs, 3: Const(z)}))
    return out


def bench(alg: FiniteAlgebra, system: EquationSystem, z: int = 0) -> BenchResult:
    """Run both solvers and report verdicts, counters, and wall time."""
    t0 = time.perf_counter()
    bounded = solve_bounded(alg, system, z=z)
    t1 = time.perf_counter()
    brute = solve_brute(alg, system)
    t2 = time.perf_counter()
    return BenchResult(
        bounded=bounded,
        brute=brute,
        bounded_seconds=t1 - t0,
        brute_seconds=t2 - t1,
    )
