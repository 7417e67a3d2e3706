import pytest

from drinfeld.analytic import (
    AnalyticDrinfeldModule,
    carlitz_module,
    carlitz_oracles,
    exponential,
    identity_series,
    logarithm,
    series_compose,
    series_slice,
)
from drinfeld.errors import InvalidParameter, RankZero
from drinfeld.ff import make_tower
from drinfeld.poly import RationalFunction

from .conftest import fq_poly


@pytest.fixture(scope="module")
def phi_f4():
    f4 = make_tower(2, 2, 1)
    return AnalyticDrinfeldModule(f4, [[0, 1], [1, 1], [1, 1, 1]])


def test_construction_errors():
    f4 = make_tower(2, 2, 1)
    with pytest.raises(InvalidParameter):
        AnalyticDrinfeldModule(f4, [[1, 1], 1])  # g_0 must be T
    with pytest.raises(RankZero):
        AnalyticDrinfeldModule(f4, [[0, 1]])


def test_exponential_pin(phi_f4):
    e = exponential(phi_f4)
    assert str(e.coeff(0)) == "1"
    assert str(e.coeff(1)) == "1/(T^3 + T^2 + T)"
    assert str(e.coeff(2)) == (
        "(T^14 + T^13 + T^12 + T^10 + T^9 + T^8 + T^6 + T^5 + T^4 + T + 1)"
        "/(T^28 + T^24 + T^20 + T^13 + T^9 + T^5)")


def test_plain_exponent_indexing(phi_f4):
    e = exponential(phi_f4)
    sl = series_slice(e, 0, 17)
    assert sl[1] == e.coeff(0)
    assert sl[4] == e.coeff(1)
    assert sl[16] == e.coeff(2)
    assert all(sl[i].is_zero() for i in (0, 2, 3, 5, 6, 7, 15))


def _rank2_module(p, s):
    tw = make_tower(p, s, 1)
    return AnalyticDrinfeldModule(tw, [[0, 1], [1, 1], [1]])


@pytest.mark.parametrize("phi,upto", [(_rank2_module(2, 1), 5),
                                      (_rank2_module(3, 1), 4)])
def test_functional_equation(phi, upto):
    # e(Tz) = phi_T(e(z)) coefficient-by-coefficient
    tw = phi.tower
    q = phi.q
    T = RationalFunction(fq_poly(tw, [0, 1]))
    e = exponential(phi)
    g = phi.coeffs
    for i in range(1, upto):
        lhs = e.coeff(i) * T ** (q ** i)
        rhs = T * e.coeff(i)
        for m in range(1, min(phi.rank, i) + 1):
            rhs = rhs + g[m] * e.coeff(i - m).frob_power(m, q)
        assert lhs == rhs


def test_functional_equation_f4(phi_f4):
    tw = phi_f4.tower
    q = phi_f4.q
    T = RationalFunction(fq_poly(tw, [0, 1]))
    e = exponential(phi_f4)
    g = phi_f4.coeffs
    for i in range(1, 4):
        lhs = e.coeff(i) * T ** (q ** i)
        rhs = T * e.coeff(i)
        for m in range(1, min(phi_f4.rank, i) + 1):
            rhs = rhs + g[m] * e.coeff(i - m).frob_power(m, q)
        assert lhs == rhs


def test_log_inverts_exp(phi_f4):
    e, l = exponential(phi_f4), logarithm(phi_f4)
    for comp in (series_compose(l, e, 4), series_compose(e, l, 4)):
        assert comp[0].is_one()
        assert all(c.is_zero() for c in comp[1:])
    phi2 = _rank2_module(2, 1)
    e, l = exponential(phi2), logarithm(phi2)
    for comp in (series_compose(l, e, 6), series_compose(e, l, 6)):
        assert comp[0].is_one()
        assert all(c.is_zero() for c in comp[1:])


def test_identity_series():
    f9 = make_tower(3, 2, 1)
    ident = identity_series(f9)
    e = exponential(carlitz_module(f9))
    comp = series_compose(ident, e, 4)
    assert comp == [e.coeff(i) for i in range(4)]


def test_series_compose_q_mismatch():
    e2 = exponential(carlitz_module(make_tower(2, 1, 1)))
    e3 = exponential(carlitz_module(make_tower(3, 1, 1)))
    with pytest.raises(InvalidParameter):
        series_compose(e2, e3, 3)


@pytest.mark.parametrize("p,s", [(2, 1), (3, 1), (2, 2)])
def test_carlitz_closed_forms(p, s):
    tw = make_tower(p, s, 1)
    C = carlitz_module(tw)
    e, l = exponential(C), logarithm(C)
    for i in range(5):
        bracket, D, L = carlitz_oracles(tw, i)
        if i >= 1:
            q = tw.q
            assert bracket == fq_poly(tw, [0, 1]).substitute_power(q ** i) \
                - fq_poly(tw, [0, 1])
        assert e.coeff(i) == RationalFunction(D).inv()
        expect = RationalFunction(L).inv()
        if i % 2:
            expect = -expect
        assert l.coeff(i) == expect


def test_laziness(phi_f4):
    e = exponential(phi_f4)
    assert e.computed_upto() == 1
    e.coeff(3)
    assert e.computed_upto() == 4
    e.coeff(2)
    assert e.computed_upto() == 4  # memoized, no recomputation


@pytest.mark.parametrize("phi,upto", [(_rank2_module(2, 1), 6),
                                      (_rank2_module(3, 1), 5)])
def test_reversion_identity(phi, upto):
    # beta coefficients satisfy the reversion of the alpha series:
    # sum_{i+j=k} beta_i * alpha_j^(q^i) = 0 for k >= 1
    q = phi.q
    e, l = exponential(phi), logarithm(phi)
    for k in range(1, upto):
        acc = l.coeff(0) - l.coeff(0)
        for i in range(k + 1):
            acc = acc + l.coeff(i) * e.coeff(k - i).frob_power(i, q)
        assert acc.is_zero()
