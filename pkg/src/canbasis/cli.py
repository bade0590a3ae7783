"""Command-line frontend: ``canbasis {canbase,hecke,selftest}``."""
from __future__ import annotations

import argparse
import logging
import os
import sys
from dataclasses import dataclass
from typing import Sequence

from .decomp import canonical_basis
from .errors import NotLaurentError, ResourceLimitError, ZeroPivotError
from .hecke import hecke_dimensions
from .pairing import DEFAULT_MAX_SUMMANDS
from .report import CANBASE_EMITS, HECKE_EMITS, build_report, emit_json, emit_latex, emit_pretty
from .typea import DimVector

__all__ = ["RunConfig", "parse_dimvec", "run_canbase", "run_hecke", "run_selftest_cli", "main"]

log = logging.getLogger("canbasis")

WORKERS_ENV = "CANBASIS_WORKERS"

_EMITTERS = {"json": emit_json, "pretty": emit_pretty, "latex": emit_latex}


@dataclass(frozen=True)
class RunConfig:
    dimvec: DimVector
    command: str
    emit: tuple[str, ...]
    format: str = "json"
    workers: int = 1
    max_summands: int = DEFAULT_MAX_SUMMANDS

    def __post_init__(self):
        if not self.dimvec:
            raise ValueError("dimension vector must be nonempty")
        if not self.emit:
            raise ValueError("nothing to emit")
        allowed = HECKE_EMITS if self.command == "hecke" else CANBASE_EMITS
        bad = [e for e in self.emit if e not in allowed]
        if bad:
            raise ValueError(f"cannot emit {', '.join(bad)} from {self.command}; choose from {', '.join(allowed)}")


def parse_dimvec(text: str) -> DimVector:
    """``"1,2,1"`` (parentheses and spaces allowed) to ``(1, 2, 1)``."""
    body = text.strip().strip("()").replace(" ", "")
    if not body:
        raise ValueError("empty dimension vector")
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(f"dimension vector must be comma-separated integers, got {text!r}") from None
    if any(p < 0 for p in parts):
        raise ValueError(f"dimension vector entries must be nonnegative, got {text!r}")
    return parts


def _parse_emit(text: str | None, default: Sequence[str]) -> tuple[str, ...]:
    if text is None:
        return tuple(default)
    items = tuple(x.strip().lower() for x in text.split(",") if x.strip())
    return tuple(dict.fromkeys(items))


def run_canbase(cfg: RunConfig) -> dict:
    sys_ = canonical_basis(cfg.dimvec, workers=cfg.workers, max_summands=cfg.max_summands)
    return build_report("canbase", sys_, cfg.emit)


def run_hecke(cfg: RunConfig) -> dict:
    res = hecke_dimensions(cfg.dimvec, workers=cfg.workers, max_summands=cfg.max_summands)
    for problem in res.check():
        log.error("%s", problem)
    return build_report("hecke", res.system, cfg.emit, hecke=res)


def run_selftest_cli(args, out) -> int:
    from .fixtures import fixture_names, load_overrides, run_selftest

    if args.list:
        for name in fixture_names():
            print(name, file=out)
        return 0
    overrides = load_overrides(args.fixtures) if args.fixtures else None
    names = [n.strip() for n in args.only.split(",")] if args.only else None
    results = run_selftest(names, overrides)
    for r in results:
        print(r.line(), file=out)
        if r.diff:
            print(r.diff, file=out)
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} fixtures passed", file=out)
    return 0 if failed == 0 else 1


def _default_workers() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise SystemExit(f"{WORKERS_ENV} must be an integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canbasis",
        description="Canonical basis of U_v^+ (equioriented A_n) and affine Hecke simple dimensions.")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="more logging")
    sub = parser.add_subparsers(dest="command", required=True)

    def pipeline_args(p, emits, default_emit):
        p.add_argument("--dimvec", required=True, help="comma-separated dimension vector, e.g. 1,2,1")
        p.add_argument("--emit", default=None,
                       help=f"comma-separated subset of {{{','.join(emits)}}} (default: {','.join(default_emit)})")
        p.add_argument("--format", choices=sorted(_EMITTERS), default="json")
        p.add_argument("--workers", type=int, default=None,
                       help=f"worker processes for Psi rows (default: ${WORKERS_ENV} or 1)")
        p.add_argument("--max-summands", type=float, default=DEFAULT_MAX_SUMMANDS,
                       help="cap on Weyl-group summands (default 1e7)")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")

    pipeline_args(sub.add_parser("canbase", help="compute Psi, L, D, Q, P"),
                  CANBASE_EMITS, ("kp", "p", "q"))
    pipeline_args(sub.add_parser("hecke", help="compute multiplicities, H, F and simple dimensions"),
                  HECKE_EMITS, ("kp", "multiplicities", "dims"))
    st = sub.add_parser("selftest", help="check the worked reference values")
    st.add_argument("--list", action="store_true", help="list fixture names and exit")
    st.add_argument("--only", default=None, help="comma-separated fixture names to run")
    st.add_argument("--fixtures", default=None, help="JSON file overriding expected values by name")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    out = sys.stdout
    try:
        if args.command == "selftest":
            return run_selftest_cli(args, out)
        default = ("kp", "p", "q") if args.command == "canbase" else ("kp", "multiplicities", "dims")
        cfg = RunConfig(
            dimvec=parse_dimvec(args.dimvec),
            command=args.command,
            emit=_parse_emit(args.emit, default),
            format=args.format,
            workers=args.workers if args.workers is not None else _default_workers(),
            max_summands=int(args.max_summands),
        )
        errors = _ErrorCounter()
        logging.getLogger().addHandler(errors)
        try:
            rep = run_canbase(cfg) if cfg.command == "canbase" else run_hecke(cfg)
        finally:
            logging.getLogger().removeHandler(errors)
        text = _EMITTERS[cfg.format](rep)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text if text.endswith("\n") else text + "\n")
        else:
            print(text.rstrip("\n"), file=out)
        return 1 if errors.count else 0
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except (NotLaurentError, ZeroPivotError) as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 4


class _ErrorCounter(logging.Handler):
    """Counts error-level diagnostics so the exit code can reflect them."""

    def __init__(self):
        super().__init__(level=logging.ERROR)
        self.count = 0

    def emit(self, record):
        self.count += 1


if __name__ == "__main__":
    raise SystemExit(main())
