"""Search the ternary term clone of a finite algebra for a Mal'cev operation.

The closure runs over function tables, not terms: starting from the three
projections (plus every constant, when polynomial rather than term
operations are wanted), fundamental operations are applied pointwise and
new tables are queued breadth-first.  Each table remembers the first term
that produced it, so returned witnesses are minimal in BFS layer count.
The table space is finite, hence exhaustion proves nonexistence; a cap
bounds runaway closures and is reported as incompleteness, not an error.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .algebra import FiniteAlgebra
from .terms import App, Const, Term, Var

DEFAULT_CAP = 10**6
_BATCH = 2048


@dataclass(frozen=True)
class TernaryFunctionTable:
    """A ternary operation on {0..size-1} with a term that induces it."""

    size: int
    table: tuple[int, ...]
    witness: Term

    def __call__(self, x: int, y: int, z: int) -> int:
        return self.table[(x * self.size + y) * self.size + z]


@dataclass(frozen=True)
class MalcevNotFound:
    """No Mal'cev table surfaced; `complete` tells proof from cap timeout."""

    complete: bool
    tables_explored: int


def is_malcev(t: TernaryFunctionTable) -> bool:
    """d(x,y,y) = x and d(x,x,y) = y for all x, y."""
    s = t.size
    for x in range(s):
        for y in range(s):
            if t.table[(x * s + y) * s + y] != x:
                return False
            if t.table[(x * s + x) * s + y] != y:
                return False
    return True


class _Closure:
    def __init__(self, alg: FiniteAlgebra, include_constants: bool, stop_at_malcev: bool):
        self.alg = alg
        self.stop = stop_at_malcev
        size = alg.size
        self.length = size**3
        self.op_arrays = [np.asarray(op.table, dtype=np.int32) for op in alg.operations]
        pairs = [(x, y) for x in range(size) for y in range(size)]
        self._idx_xyy = np.array([(x * size + y) * size + y for x, y in pairs])
        self._idx_xxy = np.array([(x * size + x) * size + y for x, y in pairs])
        self._want_x = np.array([x for x, _ in pairs])
        self._want_y = np.array([y for _, y in pairs])
        self.tables: list[np.ndarray] = []
        self.witnesses: list[Term] = []
        self.layer: list[int] = []
        self.seen: set[bytes] = set()
        self.malcev_index: int | None = None
        grid = np.arange(self.length, dtype=np.int32)
        self.add(grid // size**2 % size, Var(1), 0)
        self.add(grid // size % size, Var(2), 0)
        self.add(grid % size, Var(3), 0)
        if include_constants:
            for c in range(size):
                self.add(np.full(self.length, c, dtype=np.int32), Const(c), 0)

    def add(self, arr: np.ndarray, witness: Term, layer: int) -> bool:
        """Register a table if unseen; track the first Mal'cev one."""
        key = arr.tobytes()
        if key in self.seen:
            return False
        self.seen.add(key)
        self.tables.append(arr)
        self.witnesses.append(witness)
        self.layer.append(layer)
        if self.stop and self.malcev_index is None and self._is_malcev_arr(arr):
            self.malcev_index = len(self.tables) - 1
        return True

    def _is_malcev_arr(self, arr: np.ndarray) -> bool:
        return bool(
            np.array_equal(arr[self._idx_xyy], self._want_x)
            and np.array_equal(arr[self._idx_xxy], self._want_y)
        )

    def _done(self, cap: int) -> bool:
        return (self.stop and self.malcev_index is not None) or len(self.tables) >= cap

    def run(self, cap: int) -> bool:
        """Expand to fixpoint; True iff the closure is provably complete."""
        current = 0
        while True:
            if self._done(cap):
                return False
            snapshot = len(self.tables)
            grew = False
            for op_index, op in enumerate(self.alg.operations):
                if op.arity == 0:
                    if current == 0:
                        arr = np.full(self.length, op.table[0], dtype=np.int32)
                        grew |= self.add(arr, App(op.name, ()), 1)
                        if self._done(cap):
                            return False
                    continue
                for batch in self._combo_batches(op.arity, snapshot, current):
                    rows = self._apply(op_index, op.arity, batch)
                    for row, combo in zip(rows, batch):
                        wit = App(op.name, tuple(self.witnesses[i] for i in combo))
                        grew |= self.add(row, wit, current + 1)
                        if self._done(cap):
                            return False
            if not grew:
                return True
            current += 1

    def _combo_batches(self, arity: int, snapshot: int, current: int):
        """Argument index tuples over tables[:snapshot] that touch the current
        layer, in product order, grouped into batches."""
        batch = []
        for combo in product(range(snapshot), repeat=arity):
            if max(self.layer[i] for i in combo) == current:
                batch.append(combo)
                if len(batch) >= _BATCH:
                    yield batch
                    batch = []
        if batch:
            yield batch

    def _apply(self, op_index: int, arity: int, combos) -> np.ndarray:
        size = self.alg.size
        flat = np.stack([self.tables[c[0]] for c in combos])
        for pos in range(1, arity):
            flat = flat * size + np.stack([self.tables[c[pos]] for c in combos])
        return self.op_arrays[op_index][flat]


def _to_table(closure: _Closure, i: int) -> TernaryFunctionTable:
    return TernaryFunctionTable(
        closure.alg.size,
        tuple(int(v) for v in closure.tables[i]),
        closure.witnesses[i],
    )


def ternary_term_clone(
    alg: FiniteAlgebra,
    include_constants: bool = False,
    cap: int = DEFAULT_CAP,
) -> tuple[list[TernaryFunctionTable], bool]:
    """All ternary term (or polynomial) operations reachable from the
    projections, with witness terms; the flag reports completeness."""
    if cap < 3:
        raise ValueError(f"cap must be >= 3, got {cap}")
    closure = _Closure(alg, include_constants, stop_at_malcev=False)
    complete = closure.run(cap)
    tables = [_to_table(closure, i) for i in range(len(closure.tables))]
    return tables, complete


def find_malcev(
    alg: FiniteAlgebra,
    include_constants: bool = False,
    cap: int = DEFAULT_CAP,
) -> TernaryFunctionTable | MalcevNotFound:
    """First Mal'cev table in BFS order, or a (complete?) nonexistence report."""
    if cap < 3:
        raise ValueError(f"cap must be >= 3, got {cap}")
    closure = _Closure(alg, include_constants, stop_at_malcev=True)
    complete = closure.run(cap)
    if closure.malcev_index is not None:
        return _to_table(closure, closure.malcev_index)
    return MalcevNotFound(complete=complete, tables_explored=len(closure.tables))
