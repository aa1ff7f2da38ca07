"""Exact scalar rings: rationals, bivariate polynomials and truncated jets.

Rationals are :class:`fractions.Fraction`, which is already canonical
(reduced, positive denominator).  Jets carry first derivatives (``Jet1``) or a
first derivative in two independent directions plus their mixed term
(``Jet2``) through any computation that only uses ``+``, ``-`` and ``*``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Any, Iterable, Mapping

__all__ = [
    "Fraction",
    "Jet1",
    "Jet2",
    "BivarPoly",
    "LAMBDA",
    "MU",
    "parse_rational",
    "format_rational",
    "as_fraction",
    "poly_eval_jet",
    "poly_partial",
]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_fraction(x: Any) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``.  Decimal and exponent forms are rejected."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational string: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Any) -> str:
    q = as_fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _is_scalar(x: Any) -> bool:
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


# --------------------------------------------------------------------------
# Jets
# --------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Jet1:
    """``a0 + a1*eps`` with ``eps**2 == 0``."""

    a0: Fraction = Fraction(0)
    a1: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a0", as_fraction(self.a0))
        object.__setattr__(self, "a1", as_fraction(self.a1))

    @classmethod
    def variable(cls, at) -> "Jet1":
        return cls(at, 1)

    def _coerce(self, other):
        if isinstance(other, Jet1):
            return other
        if _is_scalar(other):
            return Jet1(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(self.a0 + o.a0, self.a1 + o.a1)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(self.a0 - o.a0, self.a1 - o.a1)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(o.a0 - self.a0, o.a1 - self.a1)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet1(self.a0 * o.a0, self.a0 * o.a1 + self.a1 * o.a0)

    __rmul__ = __mul__

    def __neg__(self):
        return Jet1(-self.a0, -self.a1)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        # (a + b eps)^k = a^k + k a^(k-1) b eps
        if k == 0:
            return Jet1(1, 0)
        return Jet1(self.a0**k, k * self.a0 ** (k - 1) * self.a1)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a0 == o.a0 and self.a1 == o.a1

    def __hash__(self):
        if self.a1 == 0:
            return hash(self.a0)
        return hash((self.a0, self.a1))

    def __repr__(self):
        return f"Jet1({format_rational(self.a0)}, {format_rational(self.a1)})"


@dataclass(frozen=True, slots=True)
class Jet2:
    """``a00 + a10*e1 + a01*e2 + a11*e1*e2`` with ``e1**2 == e2**2 == 0``."""

    a00: Fraction = Fraction(0)
    a10: Fraction = Fraction(0)
    a01: Fraction = Fraction(0)
    a11: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("a00", "a10", "a01", "a11"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))

    @classmethod
    def from_jet1(cls, j: Jet1) -> "Jet2":
        return cls(j.a0, j.a1, 0, 0)

    def _coerce(self, other):
        if isinstance(other, Jet2):
            return other
        if _is_scalar(other):
            return Jet2(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(self.a00 + o.a00, self.a10 + o.a10, self.a01 + o.a01, self.a11 + o.a11)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(self.a00 - o.a00, self.a10 - o.a10, self.a01 - o.a01, self.a11 - o.a11)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Jet2(
            self.a00 * o.a00,
            self.a00 * o.a10 + self.a10 * o.a00,
            self.a00 * o.a01 + self.a01 * o.a00,
            self.a00 * o.a11 + self.a10 * o.a01 + self.a01 * o.a10 + self.a11 * o.a00,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return Jet2(-self.a00, -self.a10, -self.a01, -self.a11)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = Jet2(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.a00, self.a10, self.a01, self.a11) == (o.a00, o.a10, o.a01, o.a11)

    def __hash__(self):
        if self.a10 == 0 and self.a01 == 0 and self.a11 == 0:
            return hash(self.a00)
        return hash((self.a00, self.a10, self.a01, self.a11))

    def __repr__(self):
        parts = ", ".join(format_rational(c) for c in (self.a00, self.a10, self.a01, self.a11))
        return f"Jet2({parts})"


# --------------------------------------------------------------------------
# Bivariate polynomials
# --------------------------------------------------------------------------


class BivarPoly:
    """Polynomial in two variables (lambda, mu) with rational coefficients.

    Terms are keyed by the exponent pair ``(d_lambda, d_mu)``; zero
    coefficients are never stored.  Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], Any] | None = None):
        acc: dict[tuple[int, int], Fraction] = {}
        for (dl, dm), c in (terms or {}).items():
            if dl < 0 or dm < 0:
                raise ValueError("negative exponent")
            k = (int(dl), int(dm))
            acc[k] = acc.get(k, Fraction(0)) + as_fraction(c)
        self._terms = {k: c for k, c in acc.items() if c}
        self._hash = None

    @classmethod
    def const(cls, c) -> "BivarPoly":
        return cls({(0, 0): c})

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self, var: str | None = None) -> int:
        """Degree in ``var`` ('l' or 'm'), or total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        if var is None:
            return max(a + b for a, b in self._terms)
        idx = _var_index(var)
        return max(k[idx] for k in self._terms)

    def _coerce(self, other):
        if isinstance(other, BivarPoly):
            return other
        if _is_scalar(other):
            return BivarPoly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, c in o._terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self._terms.items()})

    def __pos__(self):
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
        out: dict[tuple[int, int], Fraction] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in o._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        out = BivarPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def partial(self, var: str) -> "BivarPoly":
        idx = _var_index(var)
        out = {}
        for (a, b), c in self._terms.items():
            e = (a, b)[idx]
            if e:
                out[(a - 1, b) if idx == 0 else (a, b - 1)] = c * e
        return BivarPoly(out)

    def evaluate(self, at_l, at_m):
        """Evaluate at any pair of ring elements supporting ``+``, ``*`` and ``**``."""
        total = 0
        for (a, b), c in sorted(self._terms.items()):
            term = c
            if a:
                term = term * at_l**a
            if b:
                term = term * at_m**b
            total = term + total
        return total

    def to_json(self) -> list[dict]:
        return [
            {"coef": format_rational(c), "dl": a, "dm": b}
            for (a, b), c in sorted(self._terms.items())
        ]

    @classmethod
    def from_json(cls, data: Iterable[Mapping]) -> "BivarPoly":
        terms: dict[tuple[int, int], Fraction] = {}
        for i, t in enumerate(data):
            try:
                k = (int(t.get("dl", 0)), int(t.get("dm", 0)))
                c = as_fraction(t["coef"])
            except (KeyError, TypeError, ValueError, AttributeError) as exc:
                raise ValueError(f"bad polynomial term #{i}: {t!r} ({exc})") from None
            terms[k] = terms.get(k, Fraction(0)) + c
        return cls(terms)

    def __repr__(self):
        if not self._terms:
            return "BivarPoly(0)"
        parts = []
        for (a, b), c in sorted(self._terms.items()):
            mono = "*".join(
                s for s in (f"l^{a}" if a > 1 else "l" if a else "", f"m^{b}" if b > 1 else "m" if b else "") if s
            )
            parts.append(f"{format_rational(c)}{'*' + mono if mono else ''}")
        return "BivarPoly(" + " + ".join(parts) + ")"


def _var_index(var: str) -> int:
    if var in ("l", "lambda", "λ", "t"):
        return 0
    if var in ("m", "mu", "μ", "u"):
        return 1
    raise ValueError(f"unknown variable {var!r}; expected lambda or mu")


LAMBDA = BivarPoly({(1, 0): 1})
MU = BivarPoly({(0, 1): 1})


def poly_eval_jet(p: BivarPoly, at_l, at_m):
    """Evaluate ``p`` at jet (or scalar) arguments.

    Seeding ``at_l = alpha + eps`` makes the eps-part of the result the
    lambda-partial of ``p`` at ``(alpha, beta)``.
    """
    return p.evaluate(at_l, at_m)


def poly_partial(p: BivarPoly, var: str) -> BivarPoly:
    return p.partial(var)
