"""Exact arithmetic in two complete discretely valued fields.

The built-in instances are the rationals with the p-adic valuation ("Qp")
and rational functions over F_p in one variable T with the order of
vanishing at T = 0 ("FpT").  Elements are immutable, normalized at
construction, and expose their valuation and, when integral, their image
in the residue field F_p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DivisionByZeroError, DomainError

#: Valuation of the zero element.
INF = math.inf

Coercible = Union[int, Fraction, "FieldElement"]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def int_valuation(n: int, p: int) -> int:
    """Exponent of p in a nonzero integer."""
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ----------------------------------------------------------------------
# dense little-endian coefficient arithmetic for F_p[T]

def _trim(c):
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _padd(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _pneg(a, p):
    return tuple((-c) % p for c in a)


def _pmul(a, b, p):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    qlen = max(len(a) - len(b) + 1, 0)
    q = [0] * qlen
    inv_lead = pow(b[-1], -1, p)
    for k in range(qlen - 1, -1, -1):
        coeff = (rem[k + len(b) - 1] * inv_lead) % p
        if coeff:
            q[k] = coeff
            for j, bj in enumerate(b):
                rem[k + j] = (rem[k + j] - coeff * bj) % p
    return _trim(q), _trim(rem)


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = tuple((c * inv) % p for c in a)
    return a


def _pord(a):
    """Index of the lowest nonzero coefficient, i.e. the order of vanishing at 0."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def _pscale(a, s, p):
    return tuple((c * s) % p for c in a)


@dataclass(frozen=True)
class FieldSpec:
    """A discretely valued field: kind "Qp" or "FpT", residue characteristic p."""

    kind: str
    p: int

    def __post_init__(self):
        if self.kind not in ("Qp", "FpT"):
            raise ValueError(f"unsupported field kind: {self.kind!r}")
        if not is_prime(self.p):
            raise ValueError(f"residue characteristic must be prime, got {self.p}")

    def element(self, value: Coercible) -> "FieldElement":
        """Coerce an int, a Fraction, or an element of the same field."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return value
        value = Fraction(value)
        if self.kind == "Qp":
            return QpElement(self, value)
        num = value.numerator % self.p
        den = value.denominator % self.p
        if den == 0:
            raise DivisionByZeroError(
                f"denominator of {value} vanishes modulo {self.p}")
        c = (num * pow(den, -1, self.p)) % self.p
        return FpTElement(self, (c,) if c else (), (1,))

    def polynomial(self, coeffs) -> "FieldElement":
        """Polynomial in T; coeffs is a low-to-high sequence or a {degree: coeff} map."""
        if self.kind != "FpT":
            raise DomainError("polynomials only exist over the rational function field")
        if isinstance(coeffs, dict):
            if coeffs:
                degree = max(int(d) for d in coeffs)
                dense = [0] * (degree + 1)
                for d, c in coeffs.items():
                    dense[int(d)] = int(c) % self.p
            else:
                dense = []
        else:
            dense = [int(c) % self.p for c in coeffs]
        return FpTElement(self, _trim(dense), (1,))

    def rational_function(self, num, den=(1,)) -> "FieldElement":
        """Quotient of two polynomials in T."""
        top = self.polynomial(num)
        bottom = self.polynomial(den)
        return top / bottom

    def zero(self) -> "FieldElement":
        return self.element(0)

    def one(self) -> "FieldElement":
        return self.element(1)

    def uniformizer(self) -> "FieldElement":
        """The canonical valuation-one element: p, or the variable T."""
        if self.kind == "Qp":
            return QpElement(self, Fraction(self.p))
        return FpTElement(self, (0, 1), (1,))

    def label(self) -> str:
        return f"Q_{self.p}" if self.kind == "Qp" else f"F_{self.p}(T)"


class FieldElement:
    """Immutable element of a discretely valued field."""

    __slots__ = ("spec",)

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.spec.element(other)
        return None

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o + (-self)

    def __radd__(self, other):
        return self.__add__(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else o * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inv()
        out = self.spec.one()
        for _ in range(abs(k)):
            out = out * base
        return out

    def __bool__(self):
        return not self.is_zero()

    def is_integral(self) -> bool:
        return self.valuation() >= 0

    def is_unit(self) -> bool:
        return self.valuation() == 0

    def is_one(self) -> bool:
        return self == self.spec.one()


class QpElement(FieldElement):
    """A rational number viewed inside the p-adic field."""

    __slots__ = ("value", "_val")

    def __init__(self, spec: FieldSpec, value: Fraction):
        self.spec = spec
        self.value = value
        self._val = None

    def valuation(self):
        if self._val is None:
            q = self.value
            if q == 0:
                self._val = INF
            else:
                self._val = (int_valuation(q.numerator, self.spec.p)
                             - int_valuation(q.denominator, self.spec.p))
        return self._val

    def residue(self) -> int:
        v = self.valuation()
        if v != INF and v < 0:
            raise DomainError(f"residue of non-integral element {self!r}")
        if v == INF or v > 0:
            return 0
        p = self.spec.p
        return (self.value.numerator * pow(self.value.denominator, -1, p)) % p

    def is_zero(self) -> bool:
        return self.value == 0

    def inv(self):
        if self.value == 0:
            raise DivisionByZeroError("inverse of zero")
        return QpElement(self.spec, 1 / self.value)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QpElement(self.spec, self.value + o.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else QpElement(self.spec, self.value * o.value)

    def __neg__(self):
        return QpElement(self.spec, -self.value)

    def __eq__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is None else self.value == o.value

    def __hash__(self):
        return hash((self.spec, self.value))

    def __repr__(self):
        return f"{self.value}"


class FpTElement(FieldElement):
    """A reduced fraction of polynomials over F_p in the variable T."""

    __slots__ = ("num", "den", "_val")

    def __init__(self, spec: FieldSpec, num, den):
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise DivisionByZeroError("zero denominator")
        p = spec.p
        if num:
            g = _pgcd(num, den, p)
            if len(g) > 1 or g[0] != 1:
                num = _pdivmod(num, g, p)[0]
                den = _pdivmod(den, g, p)[0]
            unit = pow(den[_pord(den)], -1, p)
            if unit != 1:
                num = _pscale(num, unit, p)
                den = _pscale(den, unit, p)
        else:
            den = (1,)
        self.spec = spec
        self.num = num
        self.den = den
        self._val = None

    def valuation(self):
        if self._val is None:
            if not self.num:
                self._val = INF
            else:
                self._val = _pord(self.num) - _pord(self.den)
        return self._val

    def residue(self) -> int:
        v = self.valuation()
        if v != INF and v < 0:
            raise DomainError(f"residue of non-integral element {self!r}")
        if v == INF or v > 0:
            return 0
        p = self.spec.p
        return (self.num[0] * pow(self.den[0], -1, p)) % p

    def is_zero(self) -> bool:
        return not self.num

    def inv(self):
        if not self.num:
            raise DivisionByZeroError("inverse of zero")
        return FpTElement(self.spec, self.den, self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        num = _padd(_pmul(self.num, o.den, p), _pmul(o.num, self.den, p), p)
        return FpTElement(self.spec, num, _pmul(self.den, o.den, p))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        p = self.spec.p
        return FpTElement(self.spec, _pmul(self.num, o.num, p), _pmul(self.den, o.den, p))

    def __neg__(self):
        return FpTElement(self.spec, _pneg(self.num, self.spec.p), self.den)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.spec, self.num, self.den))

    def __repr__(self):
        def poly(c):
            if not c:
                return "0"
            terms = []
            for d, a in enumerate(c):
                if a == 0:
                    continue
                if d == 0:
                    terms.append(str(a))
                elif d == 1:
                    terms.append("T" if a == 1 else f"{a}*T")
                else:
                    terms.append(f"T^{d}" if a == 1 else f"{a}*T^{d}")
            return " + ".join(terms)

        if self.den == (1,):
            return poly(self.num)
        return f"({poly(self.num)})/({poly(self.den)})"
