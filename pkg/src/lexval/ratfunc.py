"""Exact arithmetic over Q: univariate polynomials and reduced rational functions.

Coefficients are `fractions.Fraction` (arbitrary-precision exact rationals).
A `UniPoly` is a dense coefficient sequence in x with no trailing zeros; a
`RatFunc` is a reduced quotient num/den with monic denominator.  On top of
the field arithmetic this module provides the degree valuation at infinity
`v_inf`, its leading residue, and the `corrector` that shifts a rational
function into the strictly proper range by a unique polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import inf

NEG_INF = float("-inf")  # degree of the zero polynomial


def _fr(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


class UniPoly:
    """Polynomial in x over Q, stored densely with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_fr(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls()

    @classmethod
    def one(cls) -> "UniPoly":
        return cls((1,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, e: int, c=1) -> "UniPoly":
        if e < 0:
            raise ValueError("monomial exponent must be nonnegative")
        return cls((0,) * e + (c,))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @property
    def degree(self):
        """Degree, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        """Leading coefficient (of the zero polynomial: 0)."""
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, e: int) -> Fraction:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else Fraction(0)

    def monic(self) -> "UniPoly":
        if self.is_zero() or self.lc() == 1:
            return self
        lead = self.lc()
        return UniPoly(c / lead for c in self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = UniPoly((other,))
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(e) + other.coeff(e) for e in range(n))

    __radd__ = __add__

    def __sub__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "UniPoly":
        return (-self) + other

    def __mul__(self, other) -> "UniPoly":
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = _as_unipoly(other)
        if other is NotImplemented:
            return NotImplemented
        return uni_divmod(self, other)

    def __floordiv__(self, other) -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "UniPoly":
        return divmod(self, other)[1]

    def __call__(self, point) -> Fraction:
        """Evaluate at an exact rational point (Horner)."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * point + c
        return acc

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c == 0:
                continue
            if e == 0:
                pieces.append(str(c))
            else:
                var = "x" if e == 1 else f"x^{e}"
                if c == 1:
                    pieces.append(var)
                elif c == -1:
                    pieces.append(f"-{var}")
                else:
                    pieces.append(f"{c}*{var}")
        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += f" - {piece[1:]}"
            else:
                text += f" + {piece}"
        return text

    def __repr__(self) -> str:
        return f"UniPoly({str(self)!r})"


def _as_unipoly(value):
    if isinstance(value, UniPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return UniPoly((value,))
    return NotImplemented


def uni_divmod(a: UniPoly, b: UniPoly) -> tuple[UniPoly, UniPoly]:
    """Long division: a = q*b + r with deg r < deg b."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.degree < b.degree:
        return UniPoly(), a
    rem = list(a.coeffs)
    db = len(b.coeffs) - 1
    blc = b.lc()
    q = [Fraction(0)] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / blc
        q[i - db] = f
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] -= f * bc
    return UniPoly(q), UniPoly(rem[:db])


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic greatest common divisor (Euclid); gcd(0, 0) = 0."""
    while not b.is_zero():
        # making each remainder monic keeps the coefficient fractions small
        a, b = b, (a % b).monic()
    return a.monic()


class RatFunc:
    """Reduced rational function num/den over Q[x] with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_unipoly(num)
        den = UniPoly.one() if den is None else _as_unipoly(den)
        if num is NotImplemented or den is NotImplemented:
            raise TypeError("RatFunc components must be polynomials or rationals")
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            num, den = UniPoly(), UniPoly.one()
        elif den.degree == 0:
            lead = den.lc()
            if lead != 1:
                num = UniPoly(c / lead for c in num.coeffs)
                den = UniPoly.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lead = den.lc()
            if lead != 1:
                num = UniPoly(c / lead for c in num.coeffs)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def zero(cls) -> "RatFunc":
        return cls(UniPoly())

    @classmethod
    def one(cls) -> "RatFunc":
        return cls(UniPoly.one())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den == UniPoly.one()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        g = poly_gcd(self.den, other.den)
        if g.degree > 0:
            db = other.den // g
            return RatFunc(self.num * db + other.num * (self.den // g), self.den * db)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return (-self) + other

    def __mul__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _as_ratfunc(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _as_ratfunc(other) / self

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            if self.is_zero():
                raise ZeroDivisionError("negative power of zero")
            return RatFunc(self.den ** (-k), self.num ** (-k))
        return RatFunc(self.num**k, self.den**k)

    def __call__(self, point) -> Fraction:
        d = self.den(point)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at {point}")
        return self.num(point) / d

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        ns, ds = str(self.num), str(self.den)
        if " " in ns:
            ns = f"({ns})"
        if " " in ds:
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def __repr__(self) -> str:
        return f"RatFunc({str(self)!r})"


def _as_ratfunc(value):
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, UniPoly):
        return RatFunc(value)
    if isinstance(value, (int, Fraction)):
        return RatFunc(UniPoly((value,)))
    return NotImplemented


def as_ratfunc(value) -> RatFunc:
    """Lift an int, Fraction or UniPoly into RatFunc."""
    out = _as_ratfunc(value)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {type(value).__name__} as a rational function")
    return out


def v_inf(h: RatFunc):
    """Degree valuation at infinity: deg(den) - deg(num); inf for h = 0."""
    if h.is_zero():
        return inf
    return h.den.degree - h.num.degree


def residue_at_inf(h: RatFunc) -> Fraction:
    """Ratio of leading coefficients: the unique c with v_inf(h - c*x^(-v_inf(h))) > v_inf(h)."""
    if h.is_zero():
        raise ValueError("residue of zero is undefined")
    return h.num.lc() / h.den.lc()


def corrector(h: RatFunc) -> UniPoly:
    """The unique polynomial f with v_inf(f + h) > 0.

    Concretely f = -q where num = q*den + r; the leftover r/den is strictly
    proper.
    """
    q, _ = uni_divmod(h.num, h.den)
    return -q
