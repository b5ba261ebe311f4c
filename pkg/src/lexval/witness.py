"""Constructive witnesses and empirical structure checks for a valuation.

The centerpiece is the pair of procedures that produce, for suitable
parameters, an infinite strictly increasing sequence of values attained on
plain polynomials (so the attained value set has no largest element):

  * `build_bounded_monic` builds a monic polynomial of prescribed y-degree
    whose value is bounded below by (m*n - m - n) * alpha, via a descending
    corrector recursion over the y-power expansion table;
  * `reduce_past_chain` adds scalar multiples of chain elements until the
    value climbs past the end of the chain;
  * `increasing_value_sequence` alternates the two.

The remaining operations sample the attained image, count quotient classes,
and check the structural containments of the image monoid.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .ratfunc import RatFunc, UniPoly, corrector, poly_gcd
from .valgroup import INF, ValuePair, decompose, monoid_member, quotient_class
from .valuation import ValuationSpec, cancel_lambda, value
from .ypoly import YPoly, ypower_table


@dataclass(frozen=True)
class WitnessChain:
    """Polynomials whose values form a run of consecutive lex values.

    Consecutive means each value is the immediate successor of the previous
    one; in Z (+) Z under lex that is exactly a step of (0, 1).
    """

    polys: tuple[YPoly, ...]
    values: tuple[ValuePair, ...]

    def __post_init__(self):
        if len(self.polys) != len(self.values) or not self.polys:
            raise ValueError("chain needs matching nonempty polys and values")
        for prev, nxt in zip(self.values, self.values[1:]):
            if nxt != prev + ValuePair(0, 1):
                raise ValueError(f"chain values not consecutive: {prev} then {nxt}")

    def extended(self, poly: YPoly, val: ValuePair) -> "WitnessChain":
        return WitnessChain(self.polys + (poly,), self.values + (val,))


def build_bounded_monic(spec: ValuationSpec, d: int) -> YPoly:
    """Monic polynomial of y-degree d*m with plain polynomial coefficients.

    Coefficients are produced by a descending corrector recursion so that
    every expansion cell below the top one has strictly positive coefficient
    valuation at infinity.  When beta > (0,0) this forces
    value >= (m*n - m - n) * alpha; for other parameter bundles the bound is
    not guaranteed in general and is checked empirically by the tests.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    dm = d * spec.m
    if dm == 0:
        return YPoly.one()
    table = ypower_table(spec.w, dm)
    coeffs: dict[int, UniPoly] = {dm: UniPoly.one()}
    for t in range(dm - 1, -1, -1):
        acc = RatFunc.zero()
        for s in range(t + 1, dm + 1):
            cs = coeffs[s]
            if cs.is_zero():
                continue
            acc = acc + RatFunc(cs) * table.entry(s, t)
        coeffs[t] = corrector(acc)
    return YPoly({t: RatFunc(p) for t, p in coeffs.items() if not p.is_zero()})


def reduce_past_chain(
    spec: ValuationSpec, f: YPoly, chain: WitnessChain
) -> tuple[YPoly, list[tuple[int, Fraction]]]:
    """Add scalar multiples of chain elements until the value exceeds the chain.

    Returns (g, steps) with g = f + sum lambda * chain.polys[i] over the
    recorded steps and value(g) > chain.values[-1].  If f lies in the scalar
    span of the chain the reduction lands exactly on zero (value INF), which
    still satisfies the postcondition.
    """
    vf = value(spec, f)
    if not vf >= chain.values[0]:
        raise ValueError(f"value {vf} of input is below the chain start {chain.values[0]}")
    h = f
    steps: list[tuple[int, Fraction]] = []
    cap = 4 * (len(chain.polys) + 2)
    while True:
        vh = value(spec, h)
        if vh == INF or vh > chain.values[-1]:
            return h, steps
        try:
            idx = chain.values.index(vh)
        except ValueError:
            # The chain is a run of immediate successors, so a value that is
            # neither past the end nor on the chain cannot occur.
            raise RuntimeError(f"value {vh} is inside the chain range but not on the chain")
        lam = cancel_lambda(spec, h, chain.polys[idx])
        h = h + chain.polys[idx].scale(lam)
        steps.append((idx, lam))
        if len(steps) > cap:
            raise RuntimeError("reduction exceeded its iteration cap")


def increasing_value_sequence(spec: ValuationSpec, d_max: int) -> list[tuple[YPoly, ValuePair]]:
    """Sequence f_0, f_1, ... with strictly increasing (consecutive) values.

    f_0 is the bounded monic builder's degree-m output; each later element
    reduces a fresh higher-degree builder output past the chain built so
    far.  For the ex55 preset this yields deg_y(f_d) = 2(d+1) and
    value(f_d) = (-1, d-1) exactly.
    """
    if d_max < 0:
        raise ValueError("d_max must be nonnegative")
    f0 = build_bounded_monic(spec, 1)
    v0 = value(spec, f0)
    out = [(f0, v0)]
    chain = WitnessChain((f0,), (v0,))
    for d in range(1, d_max + 1):
        raw = build_bounded_monic(spec, d + 1)
        g, _ = reduce_past_chain(spec, raw, chain)
        vg = value(spec, g)
        out.append((g, vg))
        chain = chain.extended(g, vg)
    return out


def denominator_clearer(w: YPoly) -> UniPoly:
    """Least common multiple of the coefficient denominators of w."""
    acc = UniPoly.one()
    for _, c in w.items():
        g = poly_gcd(acc, c.den)
        acc = (acc * c.den) // g
    return acc.monic()


def class_witness(spec: ValuationSpec, q: int, r: int) -> YPoly:
    """The polynomial y^r * (h*w)^q, h clearing the denominators of w.

    Its y-degree is q*m + r and its quotient class modulo Z*(m*alpha) is
    ((r*n) mod m, q), so distinct (q, r) with r < m give distinct classes.
    """
    if q < 0 or not 0 <= r < spec.m:
        raise ValueError("need q >= 0 and 0 <= r < m")
    cleared = spec.w.scale(denominator_clearer(spec.w))
    return YPoly.monomial(r) * cleared**q


def witness_for_value(spec: ValuationSpec, i: int, j: int) -> YPoly:
    """Polynomial attaining value(f_j) + (i-1) * value(f_0).

    For the ex55 preset this attains exactly (-i, j-i), covering every
    element of the attained image monoid apart from (0,0).
    """
    if i < 1 or j < 0:
        raise ValueError("need i >= 1 and j >= 0")
    seq = increasing_value_sequence(spec, j)
    base = seq[0][0]
    return seq[j][0] * base ** (i - 1)


# ---------------------------------------------------------------------------
# Random corpora


@dataclass(frozen=True)
class CorpusSpec:
    """Bounds and seed for sampled corpora."""

    max_deg_x: int = 6
    max_deg_y: int = 6
    random_count: int = 1000
    seed: int = 0


def _nonzero_scalar(rng: random.Random) -> int:
    return rng.choice((-3, -2, -1, 1, 2, 3))


def random_unipoly(rng: random.Random, max_deg: int) -> UniPoly:
    """Random nonzero polynomial in x with small integer coefficients."""
    deg = rng.randint(0, max_deg)
    coeffs = [rng.randint(-3, 3) for _ in range(deg)] + [_nonzero_scalar(rng)]
    return UniPoly(coeffs)


def random_xy_poly(rng: random.Random, max_total_deg: int) -> YPoly:
    """Random nonzero element of Q[x,y] of bounded total degree."""
    terms: dict[int, dict[int, int]] = {}
    for _ in range(rng.randint(1, 6)):
        a = rng.randint(0, max_total_deg)
        b = rng.randint(0, max_total_deg - a)
        terms.setdefault(b, {})[a] = _nonzero_scalar(rng)
    return YPoly({b: RatFunc(_dense(xs)) for b, xs in terms.items()})


def _dense(sparse: dict[int, int]) -> UniPoly:
    out = [0] * (max(sparse) + 1)
    for e, c in sparse.items():
        out[e] = c
    return UniPoly(out)


def random_bounded_poly(rng: random.Random, max_deg_x: int, max_deg_y: int) -> YPoly:
    """Random nonzero element of Q[x,y] with separate degree bounds."""
    terms: dict[int, dict[int, int]] = {}
    for _ in range(rng.randint(1, 6)):
        a = rng.randint(0, max_deg_x)
        b = rng.randint(0, max_deg_y)
        terms.setdefault(b, {})[a] = _nonzero_scalar(rng)
    return YPoly({b: RatFunc(_dense(xs)) for b, xs in terms.items()})


def random_rational_poly(rng: random.Random, max_deg_x: int, max_deg_y: int) -> YPoly:
    """Random nonzero element of Q(x)[y]: rational-function coefficients."""
    terms = {}
    exps = rng.sample(range(max_deg_y + 1), rng.randint(1, min(3, max_deg_y + 1)))
    for b in exps:
        num = random_unipoly(rng, max_deg_x)
        den = random_unipoly(rng, 2)
        terms[b] = RatFunc(num, den)
    return YPoly(terms)


# ---------------------------------------------------------------------------
# Image sampling and structure checks


@dataclass(frozen=True)
class ImageReport:
    """Attained values of a sampled corpus, with membership violations."""

    attained: frozenset[ValuePair]
    violations: tuple[tuple[YPoly, ValuePair], ...]
    class_count: int

    @property
    def ok(self) -> bool:
        return not self.violations


def _image_corpus(spec: ValuationSpec, corpus_spec: CorpusSpec) -> list[YPoly]:
    items = []
    for a in range(corpus_spec.max_deg_x + 1):
        for b in range(corpus_spec.max_deg_y + 1):
            items.append(YPoly.monomial(b, UniPoly.monomial(a)))
    rng = random.Random(corpus_spec.seed)
    bound = max(corpus_spec.max_deg_x, corpus_spec.max_deg_y)
    for _ in range(corpus_spec.random_count):
        items.append(random_xy_poly(rng, bound))
    return items


def sample_image(spec: ValuationSpec, corpus_spec: CorpusSpec, mode: str) -> ImageReport:
    """Evaluate the valuation over a corpus and test image membership.

    mode "ex55" tests membership in {(0,0)} union (Z_{>0} alpha + Z_{>=0} beta);
    mode "cone" tests membership in Z_{>=0} alpha + Z_{>=0} beta.
    """
    attained = set()
    violations = []
    for f in _image_corpus(spec, corpus_spec):
        v = value(spec, f)
        attained.add(v)
        if not monoid_member(v, spec.alpha, spec.beta, mode):
            violations.append((f, v))
    classes = {quotient_class(v, spec.m, spec.alpha, spec.beta) for v in attained}
    return ImageReport(
        attained=frozenset(attained),
        violations=tuple(violations),
        class_count=len(classes),
    )


def quotient_census(
    spec: ValuationSpec,
    ell: int,
    family: str = "h_family",
    seed: int = 0,
    random_count: int = 120,
) -> int:
    """Count distinct quotient classes attained by y-degree <= ell elements.

    family "h_family" uses the y^r*(h*w)^q witnesses exactly; family
    "corpus" adds x,y-monomials and seeded random polynomials.  The count
    can never exceed ell + 1.
    """
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    items = [class_witness(spec, i // spec.m, i % spec.m) for i in range(ell + 1)]
    if family == "corpus":
        for a in range(5):
            for b in range(ell + 1):
                items.append(YPoly.monomial(b, UniPoly.monomial(a)))
        rng = random.Random(seed)
        for _ in range(random_count):
            items.append(random_bounded_poly(rng, 4, ell))
    elif family != "h_family":
        raise ValueError(f"unknown family {family!r}")
    classes = set()
    for f in items:
        classes.add(quotient_class(value(spec, f), spec.m, spec.alpha, spec.beta))
    return len(classes)


@dataclass(frozen=True)
class StructureReport:
    """Containment checks for the attained image.

    low_degree: elements of y-degree < m must land in Z_{>=0} alpha.
    divisor_value: the value of w itself, which must escape Z_{>=0} alpha.
    rational: elements of Q(x)[y] must land in Z alpha + Z_{>=0} beta.
    """

    low_degree_checked: int
    low_degree_violations: tuple[tuple[YPoly, ValuePair], ...]
    divisor_value: ValuePair
    divisor_escapes: bool
    rational_checked: int
    rational_violations: tuple[tuple[YPoly, ValuePair], ...]

    @property
    def ok(self) -> bool:
        return (
            not self.low_degree_violations
            and self.divisor_escapes
            and not self.rational_violations
        )


def _in_nonneg_alpha(spec: ValuationSpec, v: ValuePair) -> bool:
    sol = decompose(v, spec.alpha, spec.beta)
    return sol is not None and sol[1] == 0 and sol[0] >= 0


def structure_checks(spec: ValuationSpec, corpus_spec: CorpusSpec) -> StructureReport:
    """Audit the structural containments of the attained image."""
    low_violations = []
    low_checked = 0
    rng = random.Random(corpus_spec.seed)

    low_items = []
    for a in range(corpus_spec.max_deg_x + 1):
        for b in range(spec.m):
            low_items.append(YPoly.monomial(b, UniPoly.monomial(a)))
    for _ in range(corpus_spec.random_count):
        low_items.append(random_bounded_poly(rng, corpus_spec.max_deg_x, spec.m - 1))
    for f in low_items:
        low_checked += 1
        v = value(spec, f)
        if not _in_nonneg_alpha(spec, v):
            low_violations.append((f, v))

    v_w = value(spec, spec.w)
    divisor_escapes = not _in_nonneg_alpha(spec, v_w)

    rational_violations = []
    rational_checked = 0
    for _ in range(corpus_spec.random_count):
        f = random_rational_poly(rng, corpus_spec.max_deg_x, corpus_spec.max_deg_y)
        rational_checked += 1
        v = value(spec, f)
        sol = decompose(v, spec.alpha, spec.beta)
        if sol is None or sol[1] < 0:
            rational_violations.append((f, v))

    return StructureReport(
        low_degree_checked=low_checked,
        low_degree_violations=tuple(low_violations),
        divisor_value=v_w,
        divisor_escapes=divisor_escapes,
        rational_checked=rational_checked,
        rational_violations=tuple(rational_violations),
    )
