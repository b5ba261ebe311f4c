"""Parameter validation, the value map, lead terms, and the axiom auditor."""

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from lexval import (
    INF,
    InvalidSpecError,
    ValuePair,
    cancel_lambda,
    check_axioms,
    lead_term,
    make_spec,
    parse_poly,
    random_xy_poly,
    value,
    value_fraction,
)
from lexval.valuation import (
    V_ALPHA_DIVISIBLE,
    V_ALPHA_NOT_NEGATIVE,
    V_BETA_DIVISIBLE,
    V_BETA_TOO_LOW,
    V_COMMENSURABLE,
    V_NOT_COPRIME,
    V_W0_MISMATCH,
    V_W_COEFF_TOO_LOW,
    V_W_NOT_MONIC,
)

A = ValuePair(-1, -1)
B55 = ValuePair(0, 1)


def test_make_spec_accepts_presets(ex55, ex52):
    assert (ex55.m, ex55.n) == (2, 3)
    assert ex55.beta == B55
    assert ex52.beta == ValuePair(0, -1)


def test_make_spec_rejections_carry_named_violations():
    cases = [
        (V_NOT_COPRIME, (2, 4, "y^2 + x^4", A, B55)),
        (V_W_NOT_MONIC, (2, 3, "2y^2 + x^3", A, B55)),
        (V_ALPHA_NOT_NEGATIVE, (2, 3, "y^2 + y/x + x^3", ValuePair(1, 1), B55)),
        (V_ALPHA_DIVISIBLE, (2, 3, "y^2 + y/x + x^3", ValuePair(-2, -2), B55)),
        (V_BETA_DIVISIBLE, (2, 3, "y^2 + y/x + x^3", A, ValuePair(0, 2))),
        (V_COMMENSURABLE, (2, 3, "y^2 + y/x + x^3", A, ValuePair(1, 1))),
        (V_BETA_TOO_LOW, (2, 3, "y^2 + y/x + x^3", A, ValuePair(-7, 1))),
        (V_W_COEFF_TOO_LOW, (2, 3, "y^2 + x^2*y + x^3", A, B55)),
        (V_W0_MISMATCH, (2, 3, "y^2 + x^2", A, B55)),
    ]
    for name, (m, n, w, alpha, beta) in cases:
        with pytest.raises(InvalidSpecError) as err:
            make_spec(m, n, parse_poly(w), alpha, beta)
        assert name in err.value.violations, (name, err.value.violations)


def test_make_spec_collects_all_violations():
    with pytest.raises(InvalidSpecError) as err:
        make_spec(2, 4, parse_poly("2y^2 + x^3"), ValuePair(-2, -2), ValuePair(0, 2))
    got = set(err.value.violations)
    assert {V_NOT_COPRIME, V_W_NOT_MONIC, V_ALPHA_DIVISIBLE, V_BETA_DIVISIBLE} <= got


def test_value_paper_anchors(ex55):
    assert value(ex55, parse_poly("x")) == ValuePair(-2, -2)
    assert value(ex55, parse_poly("y")) == ValuePair(-3, -3)
    assert value(ex55, parse_poly("0")) == INF
    assert value(ex55, parse_poly("y^2 + x^3")) == ValuePair(-1, -1)
    assert value(ex55, ex55.w) == ValuePair(0, 1)
    assert value(ex55, parse_poly("x") * ex55.w) == ValuePair(-2, -1)
    assert value(ex55, parse_poly("y^4")) == ValuePair(-12, -12)
    assert value(ex55, parse_poly("y/x - 5")) == ValuePair(-1, -1)


def test_value_on_rational_coefficients(ex55):
    # elements of Q(x)[y] are first-class inputs
    assert value(ex55, parse_poly("y/x")) == ValuePair(-1, -1)
    assert value(ex55, parse_poly("1/x")) == ValuePair(2, 2)


def test_lead_term_examples(ex55):
    t = lead_term(ex55, ex55.w)
    assert (t.i, t.j, str(t.coeff)) == (1, 0, "1")
    t = lead_term(ex55, parse_poly("y^2"))
    assert (t.i, t.j, str(t.coeff)) == (0, 0, "-x^3")
    t = lead_term(ex55, parse_poly("y^4"))
    assert (t.i, t.j) == (0, 0)
    assert t.coeff == parse_poly("x^6 - x").as_ratfunc()
    with pytest.raises(ValueError):
        lead_term(ex55, parse_poly("0"))


def test_cancel_lambda_examples(ex55):
    f = parse_poly("y^2")
    g = parse_poly("-x^3")
    lam = cancel_lambda(ex55, f, g)
    assert lam == -1
    assert value(ex55, f + g.scale(lam)) == ValuePair(-1, -1)

    assert cancel_lambda(ex55, f, f) == -1
    assert cancel_lambda(ex55, parse_poly("x"), parse_poly("2x")) == Fraction(-1, 2)


def test_cancel_lambda_preconditions(ex55):
    with pytest.raises(ValueError):
        cancel_lambda(ex55, parse_poly("x"), parse_poly("y"))
    with pytest.raises(ValueError):
        cancel_lambda(ex55, parse_poly("0"), parse_poly("0"))


def test_value_fraction(ex55):
    assert value_fraction(ex55, parse_poly("y"), parse_poly("x")) == ValuePair(-1, -1)
    assert value_fraction(ex55, parse_poly("1"), parse_poly("x")) == ValuePair(2, 2)
    assert value_fraction(ex55, parse_poly("0"), parse_poly("x")) == INF
    with pytest.raises(ZeroDivisionError):
        value_fraction(ex55, parse_poly("x"), parse_poly("0"))


def test_monomial_law(ex55, ex52):
    for spec in (ex55, ex52):
        for a in range(9):
            for b in range(9):
                f = parse_poly("x") ** a * parse_poly("y") ** b
                assert value(spec, f) == (a * spec.m + b * spec.n) * spec.alpha


def test_powers_of_w_law(ex55, ex52):
    for spec in (ex55, ex52):
        for j in range(2 * spec.m):
            for i in range(4):
                f = parse_poly("y") ** j * spec.w**i
                assert value(spec, f) == (j * spec.n) * spec.alpha + i * spec.beta


def test_lead_term_unique_on_random_corpus(ex55, ex52):
    rng = random.Random(11)
    for spec in (ex55, ex52):
        for _ in range(150):
            f = random_xy_poly(rng, 6)
            t = lead_term(spec, f)  # raises RuntimeError if the minimum ties
            assert not t.coeff.is_zero()
            assert 0 <= t.j < spec.m


def _corpus(seed, count, max_deg=5):
    rng = random.Random(seed)
    out = [random_xy_poly(rng, max_deg) for _ in range(count)]
    out.extend(parse_poly(s) for s in ("1", "x", "y", "x^2", "y^2", "x*y"))
    return out


def test_check_axioms_clean_on_presets(ex55, ex52):
    for spec in (ex55, ex52):
        report = check_axioms(spec, _corpus(100, 200), 500, seed=100)
        assert report.ok, report.violations
        assert report.pairs_checked == 500
        assert report.x_pairs_checked > 0


def test_check_axioms_trivial_corpus(ex55):
    report = check_axioms(ex55, [parse_poly("1")], 20)
    assert report.ok
    assert report.pairs_checked == 20


def test_check_axioms_rejects_zero_corpus(ex55):
    with pytest.raises(ValueError):
        check_axioms(ex55, [parse_poly("0")], 5)


def test_check_axioms_flags_corrupted_alpha(ex55):
    # flipping alpha to a positive pair breaks multiplicativity of the
    # induced map (e.g. the value of y*y no longer doubles), and the
    # auditor must notice
    corrupted = replace(ex55, alpha=-ex55.alpha)
    assert value(corrupted, parse_poly("y^2")) != 2 * value(corrupted, parse_poly("y"))
    report = check_axioms(corrupted, _corpus(101, 60), 300, seed=101)
    assert not report.ok
    assert report.violations.get("multiplicativity")


def test_check_axioms_negated_beta_is_still_a_valuation(ex55):
    # flipping beta alone yields the map of a different but equally valid
    # parameter bundle, so the auditor correctly finds nothing
    flipped = replace(ex55, beta=-ex55.beta)
    report = check_axioms(flipped, _corpus(102, 120), 400, seed=102)
    assert report.ok, report.violations


def test_multiplicativity_direct_random(ex55, ex52):
    rng = random.Random(12)
    for spec in (ex55, ex52):
        for _ in range(250):
            f = random_xy_poly(rng, 5)
            g = random_xy_poly(rng, 5)
            assert value(spec, f * g) == value(spec, f) + value(spec, g)


def test_triangle_direct_random(ex55):
    rng = random.Random(13)
    for _ in range(300):
        f = random_xy_poly(rng, 5)
        g = random_xy_poly(rng, 5)
        vf, vg = value(ex55, f), value(ex55, g)
        vs = value(ex55, f + g)
        assert vs >= min(vf, vg)
        if vf != vg:
            assert vs == min(vf, vg)
