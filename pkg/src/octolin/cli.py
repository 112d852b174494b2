"""Command-line front end.

Exit codes: 0 success (whatever the verdict), 1 failed verification
properties, 2 unreadable or malformed input, 3 dimension or domain errors,
4 decomposition requested for something that is not an isometry of O^2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from .classify import classify, iso2_decompose, stiefel_OOy_dim
from .config import DEFAULT_TOL, Tolerances
from .errors import DimensionError, DomainError, OctolinError, ParseError
from .frames import Frame, frame_report
from .octonion import Octonion, format_octonion, mult_table
from .omodule import OVector
from .paralinear import OMatrix
from .verify import format_results, run_suite

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_DECOMPOSE = 4

COMMANDS = ("check", "basis", "stiefel", "decompose", "verify", "mult-table")


@dataclass
class RunConfig:
    command: str
    matrix: str | None = None
    frame: str | None = None
    vector: str | None = None
    tol: Tolerances = field(default_factory=Tolerances)
    seed: int = 42
    trials: int = 20
    output: str = "text"
    inject_fault: bool = False


def default_seed() -> int:
    raw = os.environ.get("OCTOLIN_SEED")
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"OCTOLIN_SEED must be an integer, got {raw!r}") from None


def _load_json(path: str | None, flag: str):
    if path is None:
        raise ParseError(f"{flag} PATH is required")
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


# -- rendering ------------------------------------------------------------------


def _text_value(v) -> str:
    if isinstance(v, Octonion):
        return format_octonion(v)
    if isinstance(v, OVector):
        return "(" + ", ".join(format_octonion(x) for x in v) + ")"
    if isinstance(v, OMatrix):
        return "\n" + "\n".join("  " + _text_value(r) for r in v.rows())
    if isinstance(v, bool) or v is None:
        return str(v).lower() if v is not None else "n/a"
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def _render(fields: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps({k: _json_value(v) for k, v in fields.items()}, indent=2)
    width = max(len(k) for k in fields)
    return "\n".join(f"{k:<{width}}  {_text_value(v)}" for k, v in fields.items())


def _json_value(v):
    if isinstance(v, (Octonion, OVector, OMatrix)):
        return v.to_json()
    if isinstance(v, np.generic):
        return v.item()
    return v


# -- commands -------------------------------------------------------------------


def cmd_check(cfg: RunConfig) -> tuple[int, str]:
    t = OMatrix.from_json(_load_json(cfg.matrix, "--matrix"))
    report = classify(t, cfg.tol, cfg.seed)
    return EXIT_OK, _render(report.to_dict(), cfg.output)


def cmd_basis(cfg: RunConfig) -> tuple[int, str]:
    f = Frame.from_json(_load_json(cfg.frame, "--frame"))
    return EXIT_OK, _render(frame_report(f, cfg.tol).to_dict(), cfg.output)


def cmd_stiefel(cfg: RunConfig) -> tuple[int, str]:
    y = OVector.from_json(_load_json(cfg.vector, "--vector"))
    rep = stiefel_OOy_dim(y, cfg.tol)
    return EXIT_OK, _render({"y": rep.y, "dim_OOy": rep.dim_OOy, "fiber_dim": rep.fiber_dim}, cfg.output)


def cmd_decompose(cfg: RunConfig) -> tuple[int, str]:
    t = OMatrix.from_json(_load_json(cfg.matrix, "--matrix"))
    try:
        d = iso2_decompose(t, cfg.tol)
    except (DimensionError, DomainError) as exc:
        return EXIT_DECOMPOSE, f"error: {exc}"
    fields = {"p": d.p, "J": d.J, "U": d.U, "residual": d.residual}
    return EXIT_OK, _render(fields, cfg.output)


def cmd_mult_table(cfg: RunConfig) -> tuple[int, str]:
    table = mult_table()
    if cfg.output == "json":
        return EXIT_OK, json.dumps([[[bp.sign, bp.index] for bp in row] for row in table])

    def name(bp) -> str:
        body = "1" if bp.index == 0 else f"e{bp.index}"
        return ("-" if bp.sign < 0 else "+") + body

    header = "     " + " ".join(f"{('1' if j == 0 else f'e{j}'):>4}" for j in range(8))
    lines = [header]
    for i, row in enumerate(table):
        label = "1" if i == 0 else f"e{i}"
        lines.append(f"{label:>4} " + " ".join(f"{name(bp):>4}" for bp in row))
    return EXIT_OK, "\n".join(lines)


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    results = run_suite(cfg.seed, cfg.trials, cfg.inject_fault)
    ok = all(r.passed for r in results)
    if cfg.output == "json":
        body = json.dumps(
            {
                "seed": cfg.seed,
                "trials": cfg.trials,
                "passed": ok,
                "properties": [
                    {
                        "name": r.name,
                        "max_residual": r.max_residual,
                        "threshold": r.threshold,
                        "cases": r.cases,
                        "passed": r.passed,
                    }
                    for r in results
                ],
            },
            indent=2,
        )
    else:
        body = format_results(results)
    return (EXIT_OK if ok else EXIT_FAILED), body


HANDLERS = {
    "check": cmd_check,
    "basis": cmd_basis,
    "stiefel": cmd_stiefel,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "mult-table": cmd_mult_table,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-eq", type=float, default=DEFAULT_TOL.eq)
    common.add_argument("--tol-gram", type=float, default=DEFAULT_TOL.gram)
    common.add_argument("--tol-rank", type=float, default=DEFAULT_TOL.rank)
    common.add_argument("--seed", type=int, default=None, help="defaults to $OCTOLIN_SEED or 42")
    common.add_argument("--format", dest="output", choices=("json", "text"), default="text")

    parser = argparse.ArgumentParser(
        prog="octolin", description="Octonionic para-linear operators and isometries."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", parents=[common], help="classify a square matrix")
    p.add_argument("--matrix", required=True)
    p = sub.add_parser("basis", parents=[common], help="classify a system of vectors")
    p.add_argument("--frame", required=True)
    p = sub.add_parser("stiefel", parents=[common], help="dimension of O(Oy) for a unit y")
    p.add_argument("--vector", required=True)
    p = sub.add_parser("decompose", parents=[common], help="split an isometry of O^2 as p U")
    p.add_argument("--matrix", required=True)
    p = sub.add_parser("verify", parents=[common], help="run the seeded property suite")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sub.add_parser("mult-table", parents=[common], help="print the basis multiplication table")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    tol = Tolerances(eq=ns.tol_eq, gram=ns.tol_gram, assoc=ns.tol_gram, rank=ns.tol_rank)
    return RunConfig(
        command=ns.command,
        matrix=getattr(ns, "matrix", None),
        frame=getattr(ns, "frame", None),
        vector=getattr(ns, "vector", None),
        tol=tol,
        seed=ns.seed if ns.seed is not None else default_seed(),
        trials=max(0, getattr(ns, "trials", 20)),
        output=ns.output,
        inject_fault=getattr(ns, "inject_fault", False),
    )


def main(argv: list[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(ns)
        code, out = HANDLERS[cfg.command](cfg)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (DimensionError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    except OctolinError as exc:  # pragma: no cover - every subclass is handled above
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    stream = sys.stdout if code in (EXIT_OK, EXIT_FAILED) else sys.stderr
    print(out, file=stream)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
