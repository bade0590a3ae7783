"""Worked reference values for v = (1), (2,2) and (1,2,1), with a self-test runner.

Each fixture pairs a zero-argument ``compute`` with a JSON-plain ``expected``
value.  Polynomials are written as strings and compared after parsing, so
``"v^-1 + v^-3"`` and ``"v^{-3}+v^{-1}"`` are the same expectation.
"""
from __future__ import annotations

import difflib
import functools
import json
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Mapping

from .decomp import TriangularSystem, canonical_basis, pipeline_order
from .flags import inversions, orbit_dim, parabolic_data, shape_pattern
from .hecke import HeckeContext, HeckeResult, hecke_dimensions, parse_cycles, wn_pattern
from .laurent import IntLaurent, RatFunc, bar_split
from .pairing import PairingContext, generic_denominator, psi_entry
from .typea import positive_roots_ordered, reineke_exponents, reineke_word

__all__ = ["Fixture", "FixtureResult", "FIXTURES", "fixture_names", "run_selftest", "load_overrides"]


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    compute: Callable[[], Any]
    expected: Any


@dataclass
class FixtureResult:
    name: str
    passed: bool
    diff: str = ""
    error: str | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" ({self.error})" if self.error else ""
        return f"{status} {self.name}{tail}"


# -- cached pipeline runs ---------------------------------------------------

@functools.lru_cache(maxsize=None)
def _system(v: tuple[int, ...]) -> TriangularSystem:
    return canonical_basis(v)


@functools.lru_cache(maxsize=None)
def _hecke(v: tuple[int, ...]) -> HeckeResult:
    return hecke_dimensions(v)


def _s(x: IntLaurent) -> str:
    return str(x)


def _mat(m) -> list[list[str]]:
    return [[_s(x) for x in row] for row in m]


def _scaled_vec(xs: Iterable[RatFunc], scale: IntLaurent) -> list[str]:
    return [_s((x * scale).to_laurent()) for x in xs]


def _scaled_mat(m, scale: IntLaurent) -> list[list[str]]:
    return [_scaled_vec(row, scale) for row in m]


def _kp(v):
    return [list(c.mult) for c in pipeline_order(v)]


def _exps(v):
    return [list(reineke_exponents(c).exps) for c in pipeline_order(v)]


def _patterns(v, keep=None):
    out = [shape_pattern(reineke_exponents(c), v).fmt() for c in pipeline_order(v)]
    return out if keep is None else out[:keep]


def _psi_entry(v, c, c2) -> str:
    ctx = PairingContext.build(v)
    return str(psi_entry(ctx, c, c2))


def _table_121() -> list[list]:
    ctx = HeckeContext.build((1, 2, 1))
    rows = []
    for cyc, _, _ in _TABLE_121:
        w = parse_cycles(cyc, 4)
        rows.append([cyc, inversions(w), wn_pattern(w, ctx).to_zero_pattern(ctx).fmt()])
    return rows


_TABLE_121 = [
    ("e", 0, "(*/*), (* *)"),
    ("(23)", 1, "(*/*), (* *)"),
    ("(12)", 1, "(0/*), (* *)"),
    ("(34)", 1, "(*/*), (* 0)"),
    ("(132)", 2, "(*/0), (* *)"),
    ("(234)", 2, "(*/*), (0 *)"),
    ("(123)", 2, "(0/0), (* *)"),
    ("(13)", 3, "(0/0), (* *)"),
    ("(1234)", 3, "(0/0), (* *)"),
    ("(134)", 4, "(0/0), (* *)"),
    ("(243)", 2, "(*/*), (0 0)"),
    ("(24)", 3, "(*/*), (0 0)"),
    ("(1432)", 3, "(*/*), (0 0)"),
    ("(142)", 4, "(*/*), (0 0)"),
    ("(12)(34)", 2, "(0/*), (* 0)"),
    ("(1243)", 3, "(0/*), (* 0)"),
    ("(1342)", 3, "(*/0), (0 *)"),
    ("(13)(24)", 4, "(*/0), (0 *)"),
    ("(1324)", 5, "(0/0), (0 *)"),
    ("(124)", 4, "(0/0), (* 0)"),
    ("(143)", 4, "(0/*), (0 0)"),
    ("(1423)", 5, "(*/0), (0 0)"),
    ("(14)", 5, "(0/0), (0 0)"),
    ("(14)(23)", 6, "(0/0), (0 0)"),
]

_ONE_MINUS_V2 = IntLaurent({0: 1, -2: -1})

_PSI_22 = [
    ["1", "v^-1 + v^-3", "v^-4"],
    ["v^-1 + v^-3", "1 + 2v^-2 + v^-4", "v^-1 + v^-3"],
    ["v^-4", "v^-1 + v^-3", "1"],
]
_L_22 = [
    ["1", "0", "0"],
    ["v^-1 + v^-3", "1", "0"],
    ["v^-4", "v^-1", "1"],
]
_PSI_121 = [
    ["1", "1+v^-2", "v^-2", "v^-1+v^-3", "v^-2+v^-4"],
    ["1+v^-2", "2+2v^-2", "v^-2+v^-4", "2v^-1+2v^-3", "2v^-2+2v^-4"],
    ["v^-2", "v^-2+v^-4", "1", "v^-1+v^-3", "1+v^-2"],
    ["v^-1+v^-3", "2v^-1+2v^-3", "v^-1+v^-3", "1+2v^-2+v^-4", "2v^-1+2v^-3"],
    ["v^-2+v^-4", "2v^-2+2v^-4", "1+v^-2", "2v^-1+2v^-3", "2+2v^-2"],
]
_L_121 = [
    ["1", "0", "0", "0", "0"],
    ["1+v^-2", "1", "0", "0", "0"],
    ["v^-2", "0", "1", "0", "0"],
    ["v^-1+v^-3", "v^-1", "v^-1", "1", "0"],
    ["v^-2+v^-4", "v^-2", "1+v^-2", "v^-1", "1"],
]
_Q_121 = [
    ["1", "0", "0", "0", "0"],
    ["1", "1", "0", "0", "0"],
    ["0", "0", "1", "0", "0"],
    ["0", "0", "0", "1", "0"],
    ["0", "0", "1", "0", "1"],
]
_P_121 = [
    ["1", "0", "0", "0", "0"],
    ["v^-2", "1", "0", "0", "0"],
    ["v^-2", "0", "1", "0", "0"],
    ["v^-1+v^-3", "v^-1", "v^-1", "1", "0"],
    ["v^-4", "v^-2", "v^-2", "v^-1", "1"],
]
_IDENTITY_3 = [["1" if i == j else "0" for j in range(3)] for i in range(3)]


def _fixtures() -> list[Fixture]:
    f = Fixture
    d22 = generic_denominator((2, 2))
    d121 = generic_denominator((1, 2, 1))
    return [
        f("roots.n2", "root order for n=2",
          lambda: [str(r) for r in positive_roots_ordered(2)], ["a22", "a12", "a11"]),
        f("roots.n3", "root order for n=3",
          lambda: [str(r) for r in positive_roots_ordered(3)],
          ["a33", "a23", "a22", "a13", "a12", "a11"]),
        f("word.n2", "monomial word for n=2", lambda: list(reineke_word(2)), [2, 1, 2]),
        f("word.n3", "monomial word for n=3", lambda: list(reineke_word(3)), [3, 2, 3, 1, 2, 3]),
        f("kp.22", "Kostant partitions of (2,2) in basis order",
          lambda: _kp((2, 2)), [[2, 0, 2], [1, 1, 1], [0, 2, 0]]),
        f("kp.121", "Kostant partitions of (1,2,1) in basis order", lambda: _kp((1, 2, 1)),
          [[1, 0, 2, 0, 0, 1], [1, 0, 1, 0, 1, 0], [0, 1, 1, 0, 0, 1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]]),
        f("exps.22", "monomial exponents for (2,2)",
          lambda: _exps((2, 2)), [[2, 2, 0], [1, 2, 1], [0, 2, 2]]),
        f("exps.121", "monomial exponents for (1,2,1)", lambda: _exps((1, 2, 1)),
          [[1, 2, 0, 1, 0, 0], [1, 1, 0, 1, 1, 0], [0, 2, 1, 1, 0, 0], [0, 1, 1, 1, 1, 0], [0, 1, 0, 1, 1, 1]]),
        f("patterns.22", "flag-compatible subspaces for (2,2)",
          lambda: _patterns((2, 2)), ["(0 0/0 0)", "(0 0/* *)", "(* */* *)"]),
        f("patterns.121", "flag-compatible subspaces c1..c4 for (1,2,1)",
          lambda: _patterns((1, 2, 1), keep=4),
          ["(0/0), (0 0)", "(0/*), (0 0)", "(0/0), (* *)", "(0/*), (* 0)"]),
        f("parabolic.22", "stabilizer dimensions GL_v, GL_2 x B, GL_v for (2,2)",
          lambda: [parabolic_data(reineke_exponents(c), (2, 2))[0] for c in pipeline_order((2, 2))],
          [8, 7, 8]),
        f("parabolic.121", "stabilizer dimensions GL_v, B, GL_v, B, B for (1,2,1)",
          lambda: [parabolic_data(reineke_exponents(c), (1, 2, 1))[0] for c in pipeline_order((1, 2, 1))],
          [6, 5, 6, 5, 5]),
        f("orbits.22", "orbit dimensions for (2,2)",
          lambda: [orbit_dim(c) for c in pipeline_order((2, 2))], [0, 3, 4]),
        f("orbits.121", "orbit dimensions for (1,2,1)",
          lambda: [orbit_dim(c) for c in pipeline_order((1, 2, 1))], [0, 2, 2, 3, 4]),
        f("psi_entry.1", "generator self-pairing", lambda: _psi_entry((1,), 0, 0),
          str(RatFunc(1, _ONE_MINUS_V2))),
        f("psi_entry.22.c2c2", "Psi[c2][c2] for (2,2)", lambda: _psi_entry((2, 2), 1, 1),
          str(RatFunc(1, _ONE_MINUS_V2 ** 4))),
        f("psi_entry.121.c3c5", "Psi[c3][c5] for (1,2,1)", lambda: _psi_entry((1, 2, 1), 2, 4),
          str(RatFunc(1, _ONE_MINUS_V2 ** 4))),
        f("psi.22", "Psi for (2,2) times (1-v^-2)^2 (1-v^-4)^2",
          lambda: _scaled_mat(_system((2, 2)).psi, d22), _PSI_22),
        f("psi.121", "Psi for (1,2,1) times (1-v^-2)^3 (1-v^-4)",
          lambda: _scaled_mat(_system((1, 2, 1)).psi, d121), _PSI_121),
        f("L.22", "LDLT factor L for (2,2)", lambda: _mat(_system((2, 2)).L), _L_22),
        f("L.121", "LDLT factor L for (1,2,1)", lambda: _mat(_system((1, 2, 1)).L), _L_121),
        # pivots are forced by Psi and L; these are the PBW self-pairings
        f("D.22", "pivots for (2,2) times (1-v^-2)^2 (1-v^-4)^2",
          lambda: _scaled_vec(_system((2, 2)).D, d22),
          ["1", "1 + v^-2 - v^-4 - v^-6", "1 - v^-2 - v^-4 + v^-6"]),
        f("D.121", "pivots for (1,2,1) times (1-v^-2)^3 (1-v^-4)",
          lambda: _scaled_vec(_system((1, 2, 1)).D, d121),
          ["1", "1 - v^-4", "1 - v^-4", "1 - v^-2 - v^-4 + v^-6", "1 - v^-2 - v^-4 + v^-6"]),
        f("Q.22", "bar-invariant factor Q for (2,2)", lambda: _mat(_system((2, 2)).Q), _IDENTITY_3),
        f("P.22", "canonical-to-standard matrix P for (2,2)", lambda: _mat(_system((2, 2)).P), _L_22),
        f("Q.121", "bar-invariant factor Q for (1,2,1)", lambda: _mat(_system((1, 2, 1)).Q), _Q_121),
        f("P.121", "canonical-to-standard matrix P for (1,2,1)", lambda: _mat(_system((1, 2, 1)).P), _P_121),
        f("bar_split.1+v^-2", "split of an L entry into Q and P parts",
          lambda: [str(bar_split(IntLaurent.parse("1 + v^-2")).invariant_part),
                   str(bar_split(IntLaurent.parse("1 + v^-2")).negative_part)], ["1", "v^-2"]),
        f("table.121", "intersections with w n for every w in S_4", _table_121,
          [list(r) for r in _TABLE_121]),
        f("h.121.c4", "h_{c4} for (1,2,1) times (1-v^-2)^4",
          lambda: _scaled_vec([_hecke((1, 2, 1)).H[3]], _ONE_MINUS_V2 ** 4),
          ["v^2 + 8v^4 + 6v^6 + 8v^8 + v^10"]),
        f("H.121", "H for (1,2,1) times (1-v^-2)^4",
          lambda: _scaled_vec(_hecke((1, 2, 1)).H, _ONE_MINUS_V2 ** 4),
          ["v+2v^3+3v^5+3v^7+2v^9+v^11", "v+5v^3+6v^5+6v^7+5v^9+v^11", "3v^3+3v^5+3v^7+3v^9",
           "v^2+8v^4+6v^6+8v^8+v^10", "3v^3+9v^5+9v^7+3v^9"]),
        f("F.121", "F = Q^T Psi^-1 H for (1,2,1)",
          lambda: [_s(x) for x in _hecke((1, 2, 1)).F],
          ["3v^9+v^11", "2v^5+2v^7+2v^9", "2v^5+2v^7+2v^9", "v^6+v^8", "v^3+3v^5"]),
        f("dims.121", "simple module dimensions for (1,2,1)",
          lambda: _hecke((1, 2, 1)).dims, [4, 6, 6, 2, 4]),
        f("multiplicities.121", "[M_i : L_j] for (1,2,1)",
          lambda: _hecke((1, 2, 1)).multiplicities,
          [[1, 1, 1, 2, 1], [0, 1, 0, 1, 1], [0, 0, 1, 1, 1], [0, 0, 0, 1, 1], [0, 0, 0, 0, 1]]),
        f("eval.f1", "f_1(1) for (1,2,1)", lambda: IntLaurent.parse("3v^9 + v^11").eval_at_one(), 4),
    ]


FIXTURES: dict[str, Fixture] = {fx.name: fx for fx in _fixtures()}


def fixture_names() -> list[str]:
    return list(FIXTURES)


def _canon(x):
    """Parse polynomial strings so formatting differences do not matter."""
    if isinstance(x, list):
        return [_canon(y) for y in x]
    if isinstance(x, str):
        try:
            return IntLaurent.parse(x)
        except ValueError:
            return x.replace(" ", "")
    return x


def _plain(x):
    if isinstance(x, list):
        return [_plain(y) for y in x]
    return str(x) if isinstance(x, IntLaurent) else x


def _diff(expected, actual) -> str:
    a = json.dumps(_plain(_canon(expected)), indent=1).splitlines()
    b = json.dumps(_plain(_canon(actual)), indent=1).splitlines()
    return "\n".join(difflib.unified_diff(a, b, "expected", "actual", lineterm=""))


def load_overrides(path: str) -> dict[str, Any]:
    """Read ``{fixture name: expected value}`` from a JSON file."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("fixture file must hold a JSON object keyed by fixture name")
    unknown = sorted(set(data) - set(FIXTURES))
    if unknown:
        raise ValueError(f"unknown fixture names: {', '.join(unknown)}")
    return data


def run_selftest(names: Iterable[str] | None = None,
                 overrides: Mapping[str, Any] | None = None) -> list[FixtureResult]:
    """Evaluate fixtures; ``overrides`` replaces expected values by name."""
    overrides = overrides or {}
    selected = list(names) if names is not None else fixture_names()
    missing = [n for n in selected if n not in FIXTURES]
    if missing:
        raise KeyError(f"unknown fixture names: {', '.join(missing)}")
    results = []
    for name in selected:
        fx = FIXTURES[name]
        expected = overrides.get(name, fx.expected)
        try:
            actual = fx.compute()
        except Exception as exc:  # a crash is reported as a failure, not raised
            results.append(FixtureResult(name, False, error=f"{type(exc).__name__}: {exc}"))
            continue
        ok = _canon(actual) == _canon(expected)
        results.append(FixtureResult(name, ok, "" if ok else _diff(expected, actual)))
    return results
