import pytest

from lexval import RatFunc, UniPoly, YPoly, load_spec, poly_gcd


@pytest.fixture(scope="session")
def ex55():
    return load_spec("ex55")


@pytest.fixture(scope="session")
def ex52():
    return load_spec("ex52")


def assert_canonical_ratfunc(h: RatFunc) -> None:
    """Canonical-form validator: reduced, monic denominator, zero is 0/1."""
    assert not h.den.is_zero()
    assert h.den.lc() == 1
    if h.num.is_zero():
        assert h.den == UniPoly.one()
    else:
        assert poly_gcd(h.num, h.den) == UniPoly.one()
    if h.num.coeffs:
        assert h.num.coeffs[-1] != 0


def assert_canonical_ypoly(f: YPoly) -> None:
    for _, c in f.items():
        assert not c.is_zero()
        assert_canonical_ratfunc(c)
