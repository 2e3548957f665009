"""Command-line front end.

Exit codes: 0 = satisfiable / success, 1 = no solution (the output
distinguishes conditional from exhaustive), 2 = input error, 3 = internal
theorem violation (never expected).  Machine output (--json, schema
"supersolve/1") goes to stdout; diagnostics go to stderr.  In the default
deterministic mode identical invocations on identical files produce
byte-identical JSON, so bench timings are only emitted with
--no-deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import absorbing, solver, witness
from .algebra import AlgebraError, FiniteAlgebra, load_algebra, max_arity
from .bounds import make_bound_report
from .malcev import MalcevNotFound, find_malcev
from .solver import (
    NoSolutionExhaustive,
    NoSolutionInBoundedSet,
    SolutionFound,
    SolveOutcome,
)
from .terms import EvalError, ParseError, check_system, format_term, parse_system
from .witness import TheoremViolation

SCHEMA = "supersolve/1"

EXIT_OK = 0
EXIT_NO_SOLUTION = 1
EXIT_INPUT_ERROR = 2
EXIT_THEOREM_VIOLATION = 3

_INPUT_ERRORS = (AlgebraError, ParseError, EvalError, ValueError, OSError)


@dataclass
class RunConfig:
    command: str
    algebra_path: str | None = None
    system_path: str | None = None
    zero: int = 0
    bound_override: int | None = None
    deterministic: bool = True
    json: bool = False
    s: int = 1
    n: int | None = None
    include_constants: bool = False
    cap: int = 10**6
    function_path: str | None = None
    input_path: str | None = None


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _emit(config: RunConfig, doc: dict, human: str) -> None:
    if config.json:
        print(json.dumps(doc, separators=(",", ":"), sort_keys=False))
    else:
        print(human)


def _verdict_doc(outcome: SolveOutcome) -> dict:
    v = outcome.verdict
    if isinstance(v, SolutionFound):
        verdict = {
            "kind": "solution_found",
            "assignment": list(v.assignment),
            "verified": v.verified,
        }
    elif isinstance(v, NoSolutionInBoundedSet):
        verdict = {"kind": "no_solution_in_bounded_set", "bound": v.bound, "conditional": v.conditional}
    else:
        verdict = {"kind": "no_solution_exhaustive"}
    return {
        "verdict": verdict,
        "stats": {
            "candidates_tested": outcome.stats.candidates_tested,
            "term_evaluations": outcome.stats.term_evaluations,
        },
    }


def _verdict_text(outcome: SolveOutcome) -> str:
    v = outcome.verdict
    stats = (
        f"candidates tested: {outcome.stats.candidates_tested}, "
        f"term evaluations: {outcome.stats.term_evaluations}"
    )
    if isinstance(v, SolutionFound):
        return f"solution: {v.assignment}\n{stats}"
    if isinstance(v, NoSolutionInBoundedSet):
        return (
            f"no solution of weight <= {v.bound} "
            "(conditional: assumes a supernilpotent algebra)\n" + stats
        )
    return f"no solution (exhaustive search)\n{stats}"


def _load_inputs(config: RunConfig) -> tuple[FiniteAlgebra, object]:
    alg = load_algebra(_read(config.algebra_path))
    system = parse_system(_read(config.system_path))
    check_system(alg, system)
    return alg, system


def _cmd_solve(config: RunConfig) -> int:
    alg, system = _load_inputs(config)
    outcome = solver.solve_bounded(alg, system, z=config.zero, bound=config.bound_override)
    doc = {"schema": SCHEMA, "command": "solve", "algebra": alg.name, "n": system.n, "s": system.s, "zero": config.zero}
    doc.update(_verdict_doc(outcome))
    _emit(config, doc, _verdict_text(outcome))
    return EXIT_OK if outcome.satisfiable else EXIT_NO_SOLUTION


def _cmd_brute(config: RunConfig) -> int:
    alg, system = _load_inputs(config)
    outcome = solver.solve_brute(alg, system)
    doc = {"schema": SCHEMA, "command": "brute", "algebra": alg.name, "n": system.n, "s": system.s}
    doc.update(_verdict_doc(outcome))
    _emit(config, doc, _verdict_text(outcome))
    return EXIT_OK if outcome.satisfiable else EXIT_NO_SOLUTION


def _cmd_bench(config: RunConfig) -> int:
    alg, system = _load_inputs(config)
    result = solver.bench(alg, system, z=config.zero)
    doc = {
        "schema": SCHEMA,
        "command": "bench",
        "algebra": alg.name,
        "n": system.n,
        "s": system.s,
        "agree": result.agree,
        "bounded": _verdict_doc(result.bounded),
        "brute": _verdict_doc(result.brute),
    }
    if not config.deterministic:
        doc["bounded_seconds"] = result.bounded_seconds
        doc["brute_seconds"] = result.brute_seconds
    human = (
        f"bounded: {_verdict_text(result.bounded)}\n"
        f"brute:   {_verdict_text(result.brute)}\n"
        f"verdicts agree: {result.agree}"
    )
    _emit(config, doc, human)
    return EXIT_OK if result.bounded.satisfiable else EXIT_NO_SOLUTION


def _cmd_bound(config: RunConfig) -> int:
    alg = load_algebra(_read(config.algebra_path))
    report = make_bound_report(config.s, max_arity(alg), alg.size, n=config.n)
    doc = {
        "schema": SCHEMA,
        "command": "bound",
        "algebra": alg.name,
        "mu": report.mu,
        "cardinality": report.cardinality,
        "s": report.s,
        "n": report.n,
        "factorization": [list(f) for f in report.factorization],
        "k_list": list(report.k_list),
        "tight_bound": report.tight_bound,
        "loose_bound": report.loose_bound,
        "effective_bound": report.effective_bound,
        "e": report.e,
        "note": "bounds assume the algebra is supernilpotent",
    }
    # the bound report is always machine-readable
    print(json.dumps(doc, separators=(",", ":"), sort_keys=False))
    return EXIT_OK


def _cmd_malcev(config: RunConfig) -> int:
    alg = load_algebra(_read(config.algebra_path))
    result = find_malcev(alg, include_constants=config.include_constants, cap=config.cap)
    if isinstance(result, MalcevNotFound):
        doc = {
            "schema": SCHEMA,
            "command": "malcev",
            "algebra": alg.name,
            "found": False,
            "complete": result.complete,
            "tables_explored": result.tables_explored,
        }
        human = (
            "no Mal'cev term exists (closure exhausted)"
            if result.complete
            else f"no Mal'cev term found within cap {config.cap} (inconclusive)"
        )
        _emit(config, doc, human)
        return EXIT_NO_SOLUTION
    doc = {
        "schema": SCHEMA,
        "command": "malcev",
        "algebra": alg.name,
        "found": True,
        "witness": format_term(result.witness),
        "table": list(result.table),
    }
    _emit(config, doc, f"Mal'cev term: {format_term(result.witness)}")
    return EXIT_OK


def _cmd_absorb(config: RunConfig) -> int:
    raw = json.loads(_read(config.function_path))
    f = absorbing.TabulatedFunction(
        domain_size=raw["domain_size"],
        arity=raw["arity"],
        prime=raw["prime"],
        table=tuple(raw["table"]),
    )
    decomposition = absorbing.decompose(f)
    doc = {"schema": SCHEMA, "command": "absorb"}
    doc.update(decomposition.to_json_dict())
    human = "absorbing degree: {}\n".format(doc["absorbing_degree"]) + "\n".join(
        f"  {mask}: {table}" for mask, table in doc["components"].items()
    )
    _emit(config, doc, human)
    return EXIT_OK


def _cmd_reduce_witness(config: RunConfig) -> int:
    raw = json.loads(_read(config.input_path))
    mode = raw.get("mode")
    if mode == "ks":
        phi = witness.SubsetFunction(
            n=raw["n"],
            k=raw["k"],
            p=raw["p"],
            m=raw["m"],
            values={int(mask): tuple(vec) for mask, vec in raw["phi"].items()},
        )
        u = witness.ks_find_u(phi)
        bound = phi.k * phi.m * (phi.p - 1)
    elif mode == "redweight":
        fs = [
            absorbing.TabulatedFunction(
                domain_size=rf["domain_size"],
                arity=rf["arity"],
                prime=rf["prime"],
                table=tuple(rf["table"]),
            )
            for rf in raw["functions"]
        ]
        u = witness.redweight_find_u(fs, raw["k"], tuple(raw["a"]))
        p = fs[0].prime if fs else 2
        bound = raw["k"] * len(fs) * (p - 1)
    else:
        raise ValueError(f"unknown mode {mode!r}; expected 'ks' or 'redweight'")
    indices = absorbing.mask_indices(u)
    doc = {
        "schema": SCHEMA,
        "command": "reduce-witness",
        "mode": mode,
        "witness": indices,
        "witness_mask": u,
        "size": len(indices),
        "bound": bound,
    }
    _emit(config, doc, f"U = {indices} (|U| = {len(indices)}, bound {bound})")
    return EXIT_OK


def _cmd_validate(config: RunConfig) -> int:
    alg = load_algebra(_read(config.algebra_path))
    doc = {
        "schema": SCHEMA,
        "command": "validate",
        "algebra": alg.name,
        "size": alg.size,
        "operations": [{"name": op.name, "arity": op.arity} for op in alg.operations],
        "ok": True,
    }
    human = f"algebra {alg.name!r}: size {alg.size}, {len(alg.operations)} operations, valid"
    if config.system_path is not None:
        system = parse_system(_read(config.system_path))
        check_system(alg, system)
        doc["system"] = {"s": system.s, "n": system.n}
        human += f"\nsystem: {system.s} equations over x1..x{system.n}, valid"
    _emit(config, doc, human)
    return EXIT_OK


_HANDLERS = {
    "solve": _cmd_solve,
    "brute": _cmd_brute,
    "bench": _cmd_bench,
    "bound": _cmd_bound,
    "malcev": _cmd_malcev,
    "absorb": _cmd_absorb,
    "reduce-witness": _cmd_reduce_witness,
    "validate": _cmd_validate,
}


def run(config: RunConfig) -> int:
    """Dispatch one configured command; exceptions map to exit codes."""
    try:
        return _HANDLERS[config.command](config)
    except TheoremViolation as exc:
        print(f"theorem violation (implementation bug): {exc}", file=sys.stderr)
        return EXIT_THEOREM_VIOLATION
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supersolve",
        description="Decide solvability of polynomial equation systems over "
        "finite algebras by bounded-weight search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, system=True):
        p.add_argument("--algebra", required=True, help="algebra JSON file")
        if system:
            p.add_argument("--system", required=True, help="equation system file")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument(
            "--deterministic",
            action=argparse.BooleanOptionalAction,
            default=True,
            help="canonical-order scanning and stable output (default on)",
        )

    p = sub.add_parser("solve", help="bounded-weight solver")
    common(p)
    p.add_argument("--zero", type=int, default=0, help="base element z (default 0)")
    p.add_argument("--bound", type=int, default=None, help="override the weight bound")

    p = sub.add_parser("brute", help="exhaustive oracle solver")
    common(p)

    p = sub.add_parser("bench", help="run both solvers and compare")
    common(p)
    p.add_argument("--zero", type=int, default=0)

    p = sub.add_parser("bound", help="print the weight-bound report as JSON")
    p.add_argument("--algebra", required=True)
    p.add_argument("-s", "--equations", dest="s", type=int, default=1, help="equation count")
    p.add_argument("-n", "--variables", dest="n", type=int, default=None, help="variable count")

    p = sub.add_parser("malcev", help="search the ternary term clone for a Mal'cev term")
    p.add_argument("--algebra", required=True)
    p.add_argument("--constants", action="store_true", help="allow polynomial (not just term) operations")
    p.add_argument("--cap", type=int, default=10**6, help="closure size cap")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("absorb", help="absorbing decomposition of a tabulated function")
    p.add_argument("--function", required=True, help="tabulated-function JSON file")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("reduce-witness", help="find a weight-reduction witness set U")
    p.add_argument("--input", required=True, help="JSON description of phi or (fs, a, k)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("validate", help="validate input files")
    p.add_argument("--algebra", required=True)
    p.add_argument("--system", default=None)
    p.add_argument("--json", action="store_true")
    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        algebra_path=getattr(args, "algebra", None),
        system_path=getattr(args, "system", None),
        zero=getattr(args, "zero", 0),
        bound_override=getattr(args, "bound", None),
        deterministic=getattr(args, "deterministic", True),
        json=getattr(args, "json", False),
        s=getattr(args, "s", 1),
        n=getattr(args, "n", None),
        include_constants=getattr(args, "constants", False),
        cap=getattr(args, "cap", 10**6),
        function_path=getattr(args, "function", None),
        input_path=getattr(args, "input", None),
    )


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    config = _config_from_args(args)
    if config.bound_override is not None and config.bound_override < 0:
        print("error: --bound must be >= 0", file=sys.stderr)
        return EXIT_INPUT_ERROR
    return run(config)


if __name__ == "__main__":
    raise SystemExit(main())
