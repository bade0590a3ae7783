"""Report assembly and the JSON / pretty / LaTeX emitters."""
from __future__ import annotations

import json
from collections import Counter
from typing import Any, Sequence

from .decomp import TriangularSystem
from .flags import orbit_dim, shape_pattern, ZeroPattern
from .hecke import HeckeResult
from .laurent import IntLaurent, RatFunc
from .pairing import generic_denominator
from .typea import positive_roots_ordered, reineke_exponents

__all__ = [
    "SCHEMA",
    "CANBASE_EMITS",
    "HECKE_EMITS",
    "build_report",
    "parse_report",
    "emit_json",
    "emit_pretty",
    "emit_latex",
]

SCHEMA = "canbasis.report/1"

CANBASE_EMITS = ("kp", "orbits", "patterns", "psi", "l", "d", "p", "q")
HECKE_EMITS = CANBASE_EMITS + ("multiplicities", "h", "f", "dims")


def build_report(command: str, sys: TriangularSystem, emit: Sequence[str],
                 hecke: HeckeResult | None = None) -> dict[str, Any]:
    """Typed report: values are IntLaurent / RatFunc / ZeroPattern / int."""
    n = len(sys.dimvec)
    rep: dict[str, Any] = {
        "schema": SCHEMA,
        "command": command,
        "dimvec": list(sys.dimvec),
        "root_order": [[r.i, r.j] for r in positive_roots_ordered(n)],
        "kostant_partitions": [list(c.mult) for c in sys.order],
    }
    for key in emit:
        if key == "kp":
            continue
        if key == "orbits":
            rep["orbit_dims"] = [orbit_dim(c) for c in sys.order]
        elif key == "patterns":
            rep["patterns"] = [shape_pattern(reineke_exponents(c), sys.dimvec) for c in sys.order]
        elif key == "psi":
            rep["psi"] = sys.psi
        elif key == "l":
            rep["L"] = sys.L
        elif key == "d":
            rep["D"] = sys.D
        elif key == "p":
            rep["P"] = sys.P
        elif key == "q":
            rep["Q"] = sys.Q
        elif hecke is None:
            raise ValueError(f"{key!r} is only available for the hecke command")
        elif key == "multiplicities":
            rep["multiplicities"] = hecke.multiplicities
        elif key == "h":
            rep["H"] = hecke.H
        elif key == "f":
            rep["F"] = hecke.F
        elif key == "dims":
            rep["dims"] = hecke.dims
        else:
            raise ValueError(f"unknown emit key {key!r}")
    return rep


# -- JSON -------------------------------------------------------------------

def _to_plain(x):
    if isinstance(x, (IntLaurent, RatFunc)):
        return x.to_json()
    if isinstance(x, ZeroPattern):
        return x.to_lists()
    if isinstance(x, (list, tuple)):
        return [_to_plain(y) for y in x]
    return x


def emit_json(rep: dict[str, Any]) -> str:
    return json.dumps({k: _to_plain(v) for k, v in rep.items()}, indent=2)


def parse_report(text: str | dict) -> dict[str, Any]:
    """Inverse of :func:`emit_json`, restoring the typed values."""
    obj = json.loads(text) if isinstance(text, str) else dict(text)
    if obj.get("schema") != SCHEMA:
        raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
    out = dict(obj)
    for key in ("psi",):
        if key in obj:
            out[key] = [[RatFunc.from_json(x) for x in row] for row in obj[key]]
    for key in ("L", "P", "Q"):
        if key in obj:
            out[key] = [[IntLaurent.from_json(x) for x in row] for row in obj[key]]
    if "D" in obj:
        out["D"] = [RatFunc.from_json(x) for x in obj["D"]]
    if "H" in obj:
        out["H"] = [RatFunc.from_json(x) for x in obj["H"]]
    if "F" in obj:
        out["F"] = [IntLaurent.from_json(x) for x in obj["F"]]
    if "patterns" in obj:
        out["patterns"] = [ZeroPattern.from_lists(obj["dimvec"], p) for p in obj["patterns"]]
    return out


# -- common denominators ----------------------------------------------------

def _factored(dimvec: Sequence[int], mode: str) -> str:
    counts = Counter()
    for d in dimvec:
        for s in range(1, d + 1):
            counts[s] += 1
    parts = []
    for s in sorted(counts):
        e = counts[s]
        base = f"(1-v^{{{-2 * s}}})" if mode == "latex" else f"(1-v^{-2 * s})"
        if e == 1:
            parts.append(base)
        else:
            parts.append(f"{base}^{{{e}}}" if mode == "latex" else f"{base}^{e}")
    return "".join(parts) or "1"


def _power_denominator(k: int, mode: str) -> str:
    if k == 0:
        return "1"
    base = "(1-v^{-2})" if mode == "latex" else "(1-v^-2)"
    return base if k == 1 else (f"{base}^{{{k}}}" if mode == "latex" else f"{base}^{k}")


def _scaled(entries: list, scale: IntLaurent) -> list | None:
    out = []
    for x in entries:
        y = x * scale
        if not y.is_laurent():
            return None
        out.append(y.to_laurent())
    return out


# -- pretty -----------------------------------------------------------------

def _pretty_matrix(rows: list[list[str]]) -> str:
    if not rows:
        return "[]"
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  [ " + "  ".join(s.rjust(w) for s, w in zip(r, widths)) + " ]" for r in rows)


def _pretty_scaled_matrix(name: str, mat: list[list[RatFunc]], dimvec) -> str:
    scale = generic_denominator(dimvec)
    flat = [x for row in mat for x in row]
    scaled = _scaled(flat, scale)
    n = len(mat)
    if scaled is None:
        return f"{name} =\n" + _pretty_matrix([[str(x) for x in row] for row in mat])
    rows = [[str(scaled[i * n + j]) for j in range(n)] for i in range(n)]
    return f"{name} = 1/{_factored(dimvec, 'pretty')} *\n" + _pretty_matrix(rows)


def emit_pretty(rep: dict[str, Any]) -> str:
    dimvec = rep["dimvec"]
    lines = [f"{rep['command']} for v = ({','.join(map(str, dimvec))})"]
    roots = ", ".join(f"a{i}{j}" if max(i, j) < 10 else f"a({i},{j})" for i, j in rep["root_order"])
    lines.append(f"root order: {roots}")
    lines.append("Kostant partitions:")
    for k, c in enumerate(rep["kostant_partitions"], start=1):
        extra = f"  dim O = {rep['orbit_dims'][k - 1]}" if "orbit_dims" in rep else ""
        pat = f"  R = {rep['patterns'][k - 1].fmt()}" if "patterns" in rep else ""
        lines.append(f"  c{k} = ({','.join(map(str, c))}){extra}{pat}")
    if "psi" in rep:
        lines.append(_pretty_scaled_matrix("Psi", rep["psi"], dimvec))
    for key in ("L", "Q", "P"):
        if key in rep:
            lines.append(f"{key} =\n" + _pretty_matrix([[str(x) for x in row] for row in rep[key]]))
    if "D" in rep:
        n = len(rep["D"])
        diag = [[rep["D"][i] if i == j else RatFunc.zero() for j in range(n)] for i in range(n)]
        lines.append(_pretty_scaled_matrix("D", diag, dimvec))
    if "multiplicities" in rep:
        lines.append("[M_c : L_c'] (row c, column c') =\n"
                     + _pretty_matrix([[str(x) for x in row] for row in rep["multiplicities"]]))
    if "H" in rep:
        k = sum(dimvec)
        scaled = _scaled(rep["H"], IntLaurent({0: 1, -2: -1}) ** k)
        if scaled is None:
            lines.append("H =\n" + "\n".join(f"  {x}" for x in rep["H"]))
        else:
            lines.append(f"H = 1/{_power_denominator(k, 'pretty')} *\n"
                         + "\n".join(f"  {x.fmt(descending=False)}" for x in scaled))
    if "F" in rep:
        lines.append("F =\n" + "\n".join(f"  {x.fmt(descending=False)}" for x in rep["F"]))
    if "dims" in rep:
        lines.append("dim L_c = " + ", ".join(map(str, rep["dims"])))
    return "\n".join(lines) + "\n"


# -- LaTeX ------------------------------------------------------------------

def _latex_matrix(rows: list[list[str]]) -> str:
    body = " \\\\\n".join(" & ".join(r) for r in rows)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def _latex_scaled(name: str, mat: list[list[RatFunc]], dimvec) -> str:
    scale = generic_denominator(dimvec)
    n = len(mat)
    scaled = _scaled([x for row in mat for x in row], scale)
    if scaled is None:
        return f"{name} = " + _latex_matrix([[x.fmt("latex") for x in row] for row in mat])
    rows = [[scaled[i * n + j].fmt("latex") for j in range(n)] for i in range(n)]
    return f"{name} = \\tfrac{{1}}{{{_factored(dimvec, 'latex')}}} " + _latex_matrix(rows)


def emit_latex(rep: dict[str, Any]) -> str:
    dimvec = rep["dimvec"]
    out = []
    kps = ", \\quad ".join("(" + ",".join(map(str, c)) + ")" for c in rep["kostant_partitions"])
    out.append(f"% v = ({','.join(map(str, dimvec))})\n\\mathrm{{KP}} = {kps}")
    if "orbit_dims" in rep:
        out.append("\\dim \\mathcal{O} = " + ", ".join(map(str, rep["orbit_dims"])))
    if "psi" in rep:
        out.append(_latex_scaled("\\Psi", rep["psi"], dimvec))
    for key in ("L", "Q", "P"):
        if key in rep:
            out.append(f"{key} = " + _latex_matrix([[x.fmt("latex") for x in row] for row in rep[key]]))
    if "D" in rep:
        n = len(rep["D"])
        diag = [[rep["D"][i] if i == j else RatFunc.zero() for j in range(n)] for i in range(n)]
        out.append(_latex_scaled("D", diag, dimvec))
    if "multiplicities" in rep:
        out.append("[M_c : L_{c'}] = " + _latex_matrix([[str(x) for x in row] for row in rep["multiplicities"]]))
    if "H" in rep:
        k = sum(dimvec)
        scaled = _scaled(rep["H"], IntLaurent({0: 1, -2: -1}) ** k)
        if scaled is None:
            out.append("H = " + _latex_matrix([[x.fmt("latex")] for x in rep["H"]]))
        else:
            out.append(f"H = \\tfrac{{1}}{{{_power_denominator(k, 'latex')}}} "
                       + _latex_matrix([[x.fmt("latex", descending=False)] for x in scaled]))
    if "F" in rep:
        out.append("F = " + _latex_matrix([[x.fmt("latex", descending=False)] for x in rep["F"]]))
    if "dims" in rep:
        out.append(", \\quad ".join(f"\\dim L_{{{k}}} = {d}" for k, d in enumerate(rep["dims"], start=1)))
    return "\n\n".join(out) + "\n"
