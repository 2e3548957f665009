"""Finite algebras given by operation tables.

An algebra lives on the carrier ``{0, ..., size-1}``.  Each operation is a
flat, row-major value table: the entry for arguments ``(a_1, ..., a_r)``
sits at index ``sum(a_i * size**(r-i))``, and a nullary operation is a
table of length one.  This layout is normative for the JSON file format
(see :func:`load_algebra`) and is shared by every table in the package.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property


class AlgebraError(ValueError):
    """Malformed algebra file or invalid operation-table data."""


@dataclass(frozen=True)
class OperationTable:
    name: str
    arity: int
    table: tuple[int, ...]


@dataclass(frozen=True)
class FiniteAlgebra:
    """A finite algebra: carrier size plus named tabulated operations."""

    name: str
    size: int
    operations: tuple[OperationTable, ...]

    def __post_init__(self):
        if self.size < 1:
            raise AlgebraError(f"size must be >= 1, got {self.size}")
        seen = set()
        for i, op in enumerate(self.operations):
            where = f"operations[{i}] ({op.name!r})"
            if not op.name:
                raise AlgebraError(f"operations[{i}]: empty operation name")
            if op.name in seen:
                raise AlgebraError(f"{where}: duplicate operation name")
            seen.add(op.name)
            if op.arity < 0:
                raise AlgebraError(f"{where}: negative arity")
            expected = self.size**op.arity
            if len(op.table) != expected:
                raise AlgebraError(
                    f"{where}: table length {len(op.table)}, expected "
                    f"{expected} for arity {op.arity} and size {self.size}"
                )
            for j, v in enumerate(op.table):
                if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < self.size:
                    raise AlgebraError(
                        f"{where}: table[{j}] entry {v!r} out of range "
                        f"[0, {self.size})"
                    )

    @cached_property
    def _by_name(self) -> dict[str, OperationTable]:
        return {op.name: op for op in self.operations}

    def operation(self, name: str) -> OperationTable:
        try:
            return self._by_name[name]
        except KeyError:
            raise AlgebraError(f"unknown operation {name!r}") from None


def apply_op(alg: FiniteAlgebra, name: str, args) -> int:
    """Look up one operation value; raises AlgebraError on misuse."""
    op = alg.operation(name)
    args = tuple(args)
    if len(args) != op.arity:
        raise AlgebraError(
            f"operation {name!r} has arity {op.arity}, got {len(args)} arguments"
        )
    idx = 0
    for a in args:
        if not 0 <= a < alg.size:
            raise AlgebraError(f"argument {a!r} out of range [0, {alg.size})")
        idx = idx * alg.size + a
    return op.table[idx]


def max_arity(alg: FiniteAlgebra) -> int:
    """Largest arity among the fundamental operations (0 if there are none)."""
    return max((op.arity for op in alg.operations), default=0)


def direct_product(a: FiniteAlgebra, b: FiniteAlgebra, name: str | None = None) -> FiniteAlgebra:
    """Coordinatewise product; element (x, y) is encoded as x*b.size + y.

    Both factors must carry the same signature (op names and arities, in
    order).
    """
    sig_a = [(op.name, op.arity) for op in a.operations]
    sig_b = [(op.name, op.arity) for op in b.operations]
    if sig_a != sig_b:
        raise AlgebraError(
            f"signature mismatch: {a.name} has {sig_a}, {b.name} has {sig_b}"
        )
    size = a.size * b.size

    def decode(e):
        return e // b.size, e % b.size

    ops = []
    for op_a, op_b in zip(a.operations, b.operations):
        r = op_a.arity
        table = []
        # row-major iteration over argument tuples of the product carrier
        args = [0] * r
        for idx in range(size**r):
            rest = idx
            for pos in range(r - 1, -1, -1):
                args[pos] = rest % size
                rest //= size
            xs = [decode(e) for e in args]
            va = apply_op(a, op_a.name, [x for x, _ in xs])
            vb = apply_op(b, op_b.name, [y for _, y in xs])
            table.append(va * b.size + vb)
        ops.append(OperationTable(op_a.name, r, tuple(table)))
    return FiniteAlgebra(name or f"{a.name}x{b.name}", size, tuple(ops))


def load_algebra(text: str) -> FiniteAlgebra:
    """Parse and validate an algebra from its JSON file contents."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise AlgebraError("top level must be a JSON object")
    for key in ("name", "size", "operations"):
        if key not in doc:
            raise AlgebraError(f"missing field {key!r}")
    name = doc["name"]
    if not isinstance(name, str):
        raise AlgebraError("'name' must be a string")
    size = doc["size"]
    if not isinstance(size, int) or isinstance(size, bool):
        raise AlgebraError("'size' must be an integer")
    raw_ops = doc["operations"]
    if not isinstance(raw_ops, list):
        raise AlgebraError("'operations' must be a list")
    ops = []
    for i, raw in enumerate(raw_ops):
        where = f"operations[{i}]"
        if not isinstance(raw, dict):
            raise AlgebraError(f"{where}: must be an object")
        for key in ("name", "arity", "table"):
            if key not in raw:
                raise AlgebraError(f"{where}: missing field {key!r}")
        if not isinstance(raw["name"], str):
            raise AlgebraError(f"{where}: 'name' must be a string")
        if not isinstance(raw["arity"], int) or isinstance(raw["arity"], bool):
            raise AlgebraError(f"{where}: 'arity' must be an integer")
        if not isinstance(raw["table"], list):
            raise AlgebraError(f"{where}: 'table' must be a list")
        ops.append(OperationTable(raw["name"], raw["arity"], tuple(raw["table"])))
    return FiniteAlgebra(name, size, tuple(ops))


def render_algebra(alg: FiniteAlgebra) -> str:
    """Canonical JSON rendering; load_algebra(render_algebra(a)) == a."""
    doc = {
        "name": alg.name,
        "size": alg.size,
        "operations": [
            {"name": op.name, "arity": op.arity, "table": list(op.table)}
            for op in alg.operations
        ],
    }
    return json.dumps(doc, indent=2) + "\n"
