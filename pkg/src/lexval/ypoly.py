"""Polynomials in y over the rational function field Q(x).

A `YPoly` is a sparse map y-exponent -> RatFunc.  The module implements
division by a monic divisor w, the resulting grid expansion
f = sum_{i,j} f[i][j] * y^j * w^i with 0 <= j < deg_y(w), and the table of
such expansions for the pure powers y^e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import NEG_INF, RatFunc, UniPoly, as_ratfunc


class YPoly:
    """Element of Q(x)[y], stored as {y-exponent: nonzero RatFunc}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if e < 0:
                    raise ValueError("negative y-exponent")
                c = as_ratfunc(c)
                if not c.is_zero():
                    clean[e] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("YPoly is immutable")

    @classmethod
    def zero(cls) -> "YPoly":
        return cls()

    @classmethod
    def one(cls) -> "YPoly":
        return cls({0: 1})

    @classmethod
    def y(cls) -> "YPoly":
        return cls({1: 1})

    @classmethod
    def monomial(cls, e: int, c=1) -> "YPoly":
        return cls({e: c})

    @classmethod
    def const(cls, c) -> "YPoly":
        return cls({0: c})

    @property
    def deg_y(self):
        """y-degree, or -inf for the zero polynomial."""
        return max(self.terms) if self.terms else NEG_INF

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, e: int) -> RatFunc:
        return self.terms.get(e, RatFunc.zero())

    def lead_coeff_y(self) -> RatFunc:
        if self.is_zero():
            return RatFunc.zero()
        return self.terms[max(self.terms)]

    def is_monic_in_y(self) -> bool:
        return not self.is_zero() and self.lead_coeff_y() == RatFunc.one()

    def as_ratfunc(self) -> RatFunc:
        """The y-free content; raises if deg_y > 0."""
        if self.deg_y > 0:
            raise ValueError("polynomial is not y-free")
        return self.coeff(0)

    def has_polynomial_coeffs(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def items(self):
        return sorted(self.terms.items())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        other = _as_ypoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.items()))

    def __neg__(self) -> "YPoly":
        return YPoly({e: -c for e, c in self.terms.items()})

    def __add__(self, other) -> "YPoly":
        other = _as_ypoly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            out[e] = c if acc is None else acc + c
        return YPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> "YPoly":
        other = _as_ypoly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "YPoly":
        return (-self) + other

    def __mul__(self, other) -> "YPoly":
        if isinstance(other, (int, Fraction, UniPoly, RatFunc)):
            return self.scale(other)
        other = _as_ypoly(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict[int, RatFunc] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                prod = c1 * c2
                acc = out.get(e)
                out[e] = prod if acc is None else acc + prod
        return YPoly(out)

    __rmul__ = __mul__

    def scale(self, scalar) -> "YPoly":
        """Multiply every coefficient by a y-free scalar."""
        s = as_ratfunc(scalar)
        return YPoly({e: c * s for e, c in self.terms.items()})

    def __pow__(self, k: int) -> "YPoly":
        if k < 0:
            raise ValueError("negative power of a y-polynomial")
        result = YPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x_val, y_val) -> Fraction:
        """Exact evaluation at a rational point (x_val, y_val)."""
        total = Fraction(0)
        for e, c in self.terms.items():
            total += c(x_val) * Fraction(y_val) ** e
        return total

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                pieces.append(str(c))
                continue
            ypart = "y" if e == 1 else f"y^{e}"
            if c == RatFunc.one():
                pieces.append(ypart)
            elif c == -RatFunc.one():
                pieces.append(f"-{ypart}")
            else:
                cs = str(c)
                if c.is_polynomial() and " " in cs:
                    cs = f"({cs})"
                pieces.append(f"{cs}*{ypart}")
        text = pieces[0]
        for piece in pieces[1:]:
            if piece.startswith("-"):
                text += f" - {piece[1:]}"
            else:
                text += f" + {piece}"
        return text

    def __repr__(self) -> str:
        return f"YPoly({str(self)!r})"


def _as_ypoly(value):
    if isinstance(value, YPoly):
        return value
    if isinstance(value, (int, Fraction, UniPoly, RatFunc)):
        return YPoly({0: value})
    return NotImplemented


def _require_monic_divisor(w: YPoly) -> int:
    m = w.deg_y
    if m == NEG_INF or m < 1:
        raise ValueError("divisor must have y-degree at least 1")
    if not w.is_monic_in_y():
        raise ValueError("divisor must be monic in y")
    return m


def divmod_w(f: YPoly, w: YPoly) -> tuple[YPoly, YPoly]:
    """Division in y: f = q*w + r with deg_y r < deg_y w; w monic."""
    m = _require_monic_divisor(w)
    q: dict[int, RatFunc] = {}
    r = f
    while not r.is_zero() and r.deg_y >= m:
        d = r.deg_y
        c = r.coeff(d)
        q[d - m] = c
        r = r - YPoly.monomial(d - m, c) * w
    return YPoly(q), r


@dataclass(frozen=True)
class WExpansion:
    """Coefficient grid of f = sum rows[i][j] * y^j * w^i, 0 <= j < m.

    The row count is minimal: the top row is nonzero unless the expanded
    element is zero (a single all-zero row).
    """

    m: int
    rows: tuple[tuple[RatFunc, ...], ...]

    @property
    def ell(self) -> int:
        return len(self.rows) - 1

    def cell(self, i: int, j: int) -> RatFunc:
        return self.rows[i][j]

    def nonzero_cells(self):
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if not c.is_zero():
                    yield i, j, c

    def reconstruct(self, w: YPoly) -> YPoly:
        total = YPoly.zero()
        wpow = YPoly.one()
        for row in self.rows:
            for j, c in enumerate(row):
                if not c.is_zero():
                    total = total + YPoly.monomial(j, c) * wpow
            wpow = wpow * w
        return total


def w_expand(f: YPoly, w: YPoly) -> WExpansion:
    """Expand f in powers of the monic divisor w by iterated division."""
    m = _require_monic_divisor(w)
    rows = []
    cur = f
    while True:
        cur, rem = divmod_w(cur, w)
        rows.append(tuple(rem.coeff(j) for j in range(m)))
        if cur.is_zero():
            break
    return WExpansion(m=m, rows=tuple(rows))


@dataclass(frozen=True)
class YPowerTable:
    """Expansion coefficients of the pure powers y^e, e <= e_max.

    entry(e, t) is the coefficient of cell (t div m, t mod m) in the
    expansion of y^e; it is 1 on the diagonal t = e and 0 for t > e.
    """

    w: YPoly
    m: int
    e_max: int
    entries: dict[tuple[int, int], RatFunc]

    def entry(self, e: int, t: int) -> RatFunc:
        if not 0 <= e <= self.e_max:
            raise ValueError(f"power {e} outside table range 0..{self.e_max}")
        if t < 0:
            raise ValueError("negative cell index")
        if t > e:
            return RatFunc.zero()
        return self.entries[(e, t)]


def ypower_table(w: YPoly, e_max: int) -> YPowerTable:
    """Tabulate w-expansions of y^0 .. y^e_max."""
    m = _require_monic_divisor(w)
    if e_max < 0:
        raise ValueError("e_max must be nonnegative")
    entries: dict[tuple[int, int], RatFunc] = {}
    for e in range(e_max + 1):
        exp = w_expand(YPoly.monomial(e), w)
        for i, row in enumerate(exp.rows):
            for j, c in enumerate(row):
                t = i * m + j
                if t <= e:
                    entries[(e, t)] = c
    return YPowerTable(w=w, m=m, e_max=e_max, entries=entries)
