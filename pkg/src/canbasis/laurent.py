"""Exact arithmetic in Z[v, v^-1] and its fraction field Q(v).

Two value types live here:

* :class:`IntLaurent` -- integer Laurent polynomials in ``v``, stored as a
  sparse exponent -> coefficient map with no zero coefficients.
* :class:`RatFunc` -- reduced fractions of Laurent polynomials.

Both are immutable and hashable.  Fractions are reduced with a fraction-free
(subresultant) polynomial GCD over the integers, so no rational numbers ever
appear as intermediate coefficients.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "IntLaurent",
    "RatFunc",
    "BarSplit",
    "NotLaurentError",
    "ZeroDivisionInQv",
    "v",
    "lp_add",
    "lp_mul",
    "lp_neg",
    "lp_bar",
    "bar_split",
    "rf_add",
    "rf_mul",
    "rf_div",
    "rf_inv",
    "rf_to_laurent",
    "eval_at_one",
    "quantum_integer",
    "quantum_factorial",
]


class NotLaurentError(ArithmeticError):
    """A rational function expected to be a Laurent polynomial is not one."""


class ZeroDivisionInQv(ZeroDivisionError):
    """Division by the zero element of Q(v)."""


# ---------------------------------------------------------------------------
# Dense integer polynomial helpers (index = degree, no trailing zeros)
# ---------------------------------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _primitive(a: Sequence[int]) -> list[int]:
    g = _content(a)
    if g == 0:
        return []
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _prem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of ``a`` by ``b`` (``deg a >= deg b``)."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[-1]
        shift = len(r) - 1 - db
        r = [c * lb for c in r]
        for k, bc in enumerate(b):
            r[k + shift] -= lr * bc
        _trim(r)
        e -= 1
    if e > 0:
        f = lb ** e
        r = [c * f for c in r]
    return r


def _divexact(a: list[int], b: list[int]) -> list[int]:
    """Exact quotient ``a / b`` over the integers; raises if inexact."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        lr = r[-1]
        c, rem = divmod(lr, lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        shift = len(r) - 1 - db
        q[shift] = c
        for k, bc in enumerate(b):
            r[k + shift] -= c * bc
        _trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def _poly_gcd(a: list[int], b: list[int]) -> list[int]:
    """GCD over Z[x] via the subresultant PRS; primitive, positive leading coefficient."""
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    if len(a) < len(b):
        a, b = b, a
    d = math.gcd(_content(a), _content(b))
    a, b = _primitive(a), _primitive(b)
    g = h = 1
    while True:
        delta = len(a) - len(b)
        r = _prem(a, b)
        if not r:
            break
        if len(r) == 1:
            b = [1]
            break
        divisor = g * h ** delta
        a, b = b, [c // divisor for c in r]
        g = a[-1]
        h = g ** delta // h ** (delta - 1) if delta else h
    res = _primitive(b)
    return [c * d for c in res] if d != 1 else res


# ---------------------------------------------------------------------------
# IntLaurent
# ---------------------------------------------------------------------------

_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+)\s*\*?\s*)?
        (?P<var>v(?:\s*\^\s*\{?\s*(?P<exp>[+-]?\s*\d+)\s*\}?)?)?\s*""",
    re.VERBOSE,
)


class IntLaurent:
    """An integer Laurent polynomial in ``v``.

    >>> f = IntLaurent({1: 1, -1: 1})
    >>> f * f
    IntLaurent('v^2 + 2 + v^-2')
    >>> f.bar() == f
    True
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] | None = None):
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[int, int] = {}
        for e, c in items:
            if c:
                acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def const(cls, c: int) -> IntLaurent:
        return cls({0: c})

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> IntLaurent:
        return cls({exp: coeff})

    @classmethod
    def from_exponent_counts(cls, counts: Mapping[int, int]) -> IntLaurent:
        return cls(counts)

    @classmethod
    def parse(cls, text: str) -> IntLaurent:
        """Parse strings such as ``"1 + 2v^-2 - v^{-4}"`` or ``"3v^9+v^11"``."""
        s = text.replace("−", "-").replace("⁻", "-").strip()
        if s in ("", "0"):
            return cls()
        out: dict[int, int] = {}
        pos = 0
        first = True
        while pos < len(s):
            m = _TERM_RE.match(s, pos)
            if m is None or m.end() == pos or (not m.group("coef") and not m.group("var")):
                raise ValueError(f"cannot parse Laurent polynomial {text!r} at {pos}")
            if not first and not m.group("sign"):
                raise ValueError(f"missing operator in {text!r} at {pos}")
            first = False
            sign = -1 if m.group("sign") == "-" else 1
            coef = int(m.group("coef")) if m.group("coef") else 1
            if m.group("var"):
                exp = int(m.group("exp").replace(" ", "")) if m.group("exp") else 1
            else:
                exp = 0
            out[exp] = out.get(exp, 0) + sign * coef
            pos = m.end()
        return cls(out)

    # -- basic accessors ----------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        """Exponent -> coefficient map (a copy), ascending by exponent."""
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return next(iter(self._terms))

    @property
    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return next(reversed(self._terms))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def is_bar_invariant(self) -> bool:
        return all(self._terms.get(-e) == c for e, c in self._terms.items())

    def is_strictly_negative(self) -> bool:
        """True if every exponent is <= -1 (an element of v^-1 Z[v^-1])."""
        return all(e <= -1 for e in self._terms)

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    # -- ring operations ----------------------------------------------------

    @staticmethod
    def _coerce(other) -> IntLaurent | None:
        if isinstance(other, IntLaurent):
            return other
        if isinstance(other, int):
            return IntLaurent({0: other})
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms.items():
            acc[e] = acc.get(e, 0) + c
        return IntLaurent(acc)

    __radd__ = __add__

    def __neg__(self) -> IntLaurent:
        return IntLaurent({e: -c for e, c in self._terms.items()})

    def __pos__(self) -> IntLaurent:
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return IntLaurent(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntLaurent:
        if k < 0:
            if not (self.is_monomial() and abs(next(iter(self._terms.values()))) == 1):
                raise NotLaurentError("only unit monomials have Laurent inverses")
            (e, c), = self._terms.items()
            return IntLaurent({e * k: c ** (-k)})
        out = IntLaurent({0: 1})
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> IntLaurent:
        """Multiply by ``v**k``."""
        return IntLaurent({e + k: c for e, c in self._terms.items()})

    def bar(self) -> IntLaurent:
        """The bar involution ``v -> v^-1``."""
        return IntLaurent({-e: c for e, c in self._terms.items()})

    def __call__(self, x):
        """Evaluate at ``x`` (any value supporting ``**`` with negative ints if needed)."""
        return sum(c * x ** e for e, c in self._terms.items())

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, IntLaurent):
            return self._terms == other._terms
        if isinstance(other, int):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, RatFunc):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- dense conversion ---------------------------------------------------

    def _to_dense(self) -> tuple[int, list[int]]:
        """Return ``(shift, coeffs)`` with ``self == v**shift * sum(coeffs[k] v**k)``."""
        if not self._terms:
            return 0, []
        lo = self.valuation
        dense = [0] * (self.degree - lo + 1)
        for e, c in self._terms.items():
            dense[e - lo] = c
        return lo, dense

    @classmethod
    def _from_dense(cls, shift: int, coeffs: Sequence[int]) -> IntLaurent:
        return cls({shift + k: c for k, c in enumerate(coeffs) if c})

    # -- formatting ---------------------------------------------------------

    def fmt(self, mode: str = "pretty", var: str = "v", descending: bool = True) -> str:
        if not self._terms:
            return "0"
        items = sorted(self._terms.items(), reverse=descending)
        parts = []
        for idx, (e, c) in enumerate(items):
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                cs = "" if a == 1 else str(a)
                if e == 1:
                    body = f"{cs}{var}"
                elif mode == "latex":
                    body = f"{cs}{var}^{{{e}}}"
                else:
                    body = f"{cs}{var}^{e}"
            if idx == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __str__(self) -> str:
        return self.fmt()

    def __repr__(self) -> str:
        return f"IntLaurent('{self.fmt()}')"

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict[str, int]:
        return {str(e): c for e, c in self._terms.items()}

    @classmethod
    def from_json(cls, obj: Mapping[str, int]) -> IntLaurent:
        return cls({int(e): int(c) for e, c in obj.items()})


v = IntLaurent({1: 1})
_ONE = IntLaurent({0: 1})


# ---------------------------------------------------------------------------
# RatFunc
# ---------------------------------------------------------------------------

Scalar = Union[int, IntLaurent, "RatFunc"]


class RatFunc:
    """An element of Q(v) stored as a reduced fraction of Laurent polynomials.

    The denominator is an ordinary polynomial (valuation 0) with positive
    leading coefficient, numerator and denominator are coprime over Q, and
    the integer content shared by both parts is removed.  This form is
    canonical, so equality is structural.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: int | IntLaurent, den: int | IntLaurent = 1, *, _reduced: bool = False):
        num = IntLaurent._coerce(num)
        den = IntLaurent._coerce(den)
        if num is None or den is None:
            raise TypeError("RatFunc parts must be IntLaurent or int")
        if _reduced:
            self.num, self.den = num, den
        else:
            self.num, self.den = self._reduce(num, den)
        self._hash = None

    @staticmethod
    def _reduce(num: IntLaurent, den: IntLaurent) -> tuple[IntLaurent, IntLaurent]:
        if den.is_zero():
            raise ZeroDivisionInQv("zero denominator")
        if num.is_zero():
            return IntLaurent(), _ONE
        ns, nd = num._to_dense()
        ds, dd = den._to_dense()
        # v-power unit is tracked separately; dense parts have nonzero constant terms
        shift = ns - ds
        if len(dd) > 1 and len(nd) > 1:
            g = _poly_gcd(nd, dd)
            if len(g) > 1:
                nd = _divexact(nd, g)
                dd = _divexact(dd, g)
        c = math.gcd(_content(nd), _content(dd))
        if dd[-1] < 0:
            c = -c
        if c != 1:
            nd = [x // c for x in nd]
            dd = [x // c for x in dd]
        return IntLaurent._from_dense(shift, nd), IntLaurent._from_dense(0, dd)

    @staticmethod
    def _coerce(other) -> RatFunc | None:
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (int, IntLaurent)):
            return RatFunc(other, 1, _reduced=True) if not (isinstance(other, int) and other == 0) else RatFunc(0)
        return None

    @classmethod
    def zero(cls) -> RatFunc:
        return cls(IntLaurent(), _ONE, _reduced=True)

    @classmethod
    def one(cls) -> RatFunc:
        return cls(_ONE, _ONE, _reduced=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def to_laurent(self) -> IntLaurent:
        if not self.is_laurent():
            raise NotLaurentError(f"{self} is not a Laurent polynomial")
        return self.num

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RatFunc:
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc.zero()
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if self.is_zero():
            raise ZeroDivisionInQv("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionInQv("division by zero")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> RatFunc:
        if k < 0:
            return self.inv() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def bar(self) -> RatFunc:
        return RatFunc(self.num.bar(), self.den.bar())

    # -- comparison ---------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def equals_by_cross_multiplication(self, other: Scalar) -> bool:
        o = self._coerce(other)
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- formatting / serialization ----------------------------------------

    def fmt(self, mode: str = "pretty") -> str:
        if self.is_laurent():
            return self.num.fmt(mode)
        n, d = self.num.fmt(mode), self.den.fmt(mode)
        if mode == "latex":
            return rf"\frac{{{n}}}{{{d}}}"
        return f"({n})/({d})"

    def __str__(self) -> str:
        return self.fmt()

    def __repr__(self) -> str:
        return f"RatFunc('{self.fmt()}')"

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj: Mapping) -> RatFunc:
        return cls(IntLaurent.from_json(obj["num"]), IntLaurent.from_json(obj["den"]))


# ---------------------------------------------------------------------------
# Bar-invariant / strictly-negative split
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BarSplit:
    invariant_part: IntLaurent
    negative_part: IntLaurent


def bar_split(f: IntLaurent) -> BarSplit:
    """Split ``f = q + p`` with ``q`` bar-invariant and ``p`` in ``v^-1 Z[v^-1]``.

    >>> bar_split(IntLaurent.parse("v^2 + 3 + v^-1"))
    BarSplit(invariant_part=IntLaurent('v^2 + 3 + v^-2'), negative_part=IntLaurent('v^-1 - v^-2'))
    """
    q: dict[int, int] = {}
    for e, c in f.items():
        if e > 0:
            q[e] = c
            q[-e] = c
        elif e == 0:
            q[0] = c
    inv = IntLaurent(q)
    return BarSplit(inv, f - inv)


# ---------------------------------------------------------------------------
# Functional surface
# ---------------------------------------------------------------------------

def lp_add(a: IntLaurent, b: IntLaurent) -> IntLaurent:
    return a + b


def lp_mul(a: IntLaurent, b: IntLaurent) -> IntLaurent:
    return a * b


def lp_neg(a: IntLaurent) -> IntLaurent:
    return -a


def lp_bar(f: IntLaurent) -> IntLaurent:
    return f.bar()


def rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc._coerce(a) + b


def rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc._coerce(a) * b


def rf_div(a: RatFunc, b: RatFunc) -> RatFunc:
    return RatFunc._coerce(a) / b


def rf_inv(a: RatFunc) -> RatFunc:
    return RatFunc._coerce(a).inv()


def rf_to_laurent(a: RatFunc) -> IntLaurent:
    return RatFunc._coerce(a).to_laurent()


def eval_at_one(f: IntLaurent) -> int:
    return f.eval_at_one()


def quantum_integer(m: int) -> IntLaurent:
    """``[m] = v^(m-1) + v^(m-3) + ... + v^(1-m)``."""
    return IntLaurent({m - 1 - 2 * k: 1 for k in range(m)})


def quantum_factorial(a: int | Iterable[int]) -> IntLaurent:
    """Product of ``[a_k]!`` over the entries of ``a`` (an int is a single entry).

    >>> quantum_factorial([1, 2, 1])
    IntLaurent('v + v^-1')
    """
    entries = [a] if isinstance(a, int) else list(a)
    out = _ONE
    for m in entries:
        if m < 0:
            raise ValueError("quantum factorial of a negative integer")
        for k in range(2, m + 1):
            out = out * quantum_integer(k)
    return out
