from fractions import Fraction

import pytest

from deltadyn.autonomous import classical_flow
from deltadyn.flows import Flow, TSeries, poly_substitute, taylor_compose
from deltadyn.series import XSeries
from deltadyn.umbral import basic_sequence_from_delta, forward

X = XSeries.x()


def _monomial_flow(coeff_lists, has_base=True):
    return Flow(tuple(XSeries(c) for c in coeff_lists), None, has_base)


def test_taylor_compose_identity_function():
    phi = classical_flow(XSeries((0, 1, -1)), 6)
    assert taylor_compose(X, phi) == phi.to_tseries()


def test_taylor_compose_square_on_x_plus_t():
    w = _monomial_flow([(0, 1)])  # x + t, order 1... need order 2 for t^2
    w = Flow((XSeries.one(), XSeries.zero()), None, True)  # x + t at order 2
    out = taylor_compose(X * X, w)
    assert out.coefficient(0) == XSeries((0, 0, 1))
    assert out.coefficient(1) == XSeries((0, 2))
    assert out.coefficient(2) == XSeries.one()


def test_taylor_compose_logistic_generator():
    # f = x(1-x), W = x + x t: hand expansion x(1-x) + x(1-2x) t - x^2 t^2
    f = XSeries((0, 1, -1))
    w = Flow((X, XSeries.zero()), None, True)
    out = taylor_compose(f, w)
    assert out.coefficient(0) == XSeries((0, 1, -1))
    assert out.coefficient(1) == XSeries((0, 1, -2))
    assert out.coefficient(2) == XSeries((0, 0, -1))


def test_taylor_compose_requires_base():
    w = TSeries((XSeries.one(), XSeries.one()), 1)
    with pytest.raises(ValueError):
        taylor_compose(X, w)


def test_poly_substitute_matches_taylor_on_based_flows():
    f = XSeries((1, -2, 0, 3))
    phi = classical_flow(XSeries((0, 1, 1)), 6)
    assert poly_substitute(f, phi) == taylor_compose(f, phi)


def test_poly_substitute_general_base():
    # f(x) = x^2 at W = 1 + t: coefficients (1, 2, 1)
    w = TSeries((XSeries.one(), XSeries.one(), XSeries.zero()), 2)
    out = poly_substitute(X * X, w)
    assert out.coefficient(0) == XSeries.one()
    assert out.coefficient(1) == XSeries((2,))
    assert out.coefficient(2) == XSeries.one()


def test_tseries_calculus():
    w = TSeries((XSeries((0, 0, 1)), XSeries((0, 3)), XSeries((5,))), 2)
    assert w.dt().coeffs == (XSeries((0, 3)), XSeries((10,)))
    assert w.dx().coeffs == (XSeries((0, 2)), XSeries((3,)), XSeries.zero())
    scaled = w.t_scale(Fraction(1, 2))
    assert scaled.coefficient(1) == XSeries((0, Fraction(3, 2)))
    assert scaled.coefficient(2) == XSeries((Fraction(5, 4),))
    assert w.evaluate(2, 3) == 9 + 9 * 2 + 5 * 4


def test_flow_evaluate_at_zero_gives_base():
    phi = classical_flow(XSeries((0, 2, -1)), 5)
    assert phi.evaluate(0, Fraction(1, 3)) == Fraction(1, 3)
    basis = basic_sequence_from_delta(forward(6), 6)
    basic = phi.to_basic(basis)
    assert basic.evaluate(0, Fraction(1, 3)) == Fraction(1, 3)


def test_basis_round_trip():
    phi = classical_flow(XSeries((0, 1, -1)), 6)
    basis = basic_sequence_from_delta(forward(8), 8)
    there = phi.to_basic(basis)
    back = there.to_monomial()
    assert back.coeffs == phi.coeffs
    again = back.to_basic(basis)
    assert again.coeffs == there.coeffs


def test_composition_commutes_with_x_derivative():
    # d/dx f(Phi) = f'(Phi) dPhi/dx, coefficient by coefficient
    for f in (XSeries((0, 1, -1)), XSeries((1, -2, 0, 3))):
        for gen in (XSeries((0, 1, 1)), XSeries((0, 0, 1))):
            phi = classical_flow(gen, 8)
            lhs = taylor_compose(f, phi).dx()
            rhs = taylor_compose(f.derivative(), phi) * phi.to_tseries().dx()
            assert lhs == rhs.truncate(lhs.order)


def test_coeff_strings_serialization():
    from deltadyn.series import TPoly, coeff_strings
    from deltadyn.scalars import GaussianRational, parse_scalar

    xs = XSeries((Fraction(1, 2), GaussianRational(0, Fraction(-3, 4))))
    strings = coeff_strings(xs)
    assert strings == ["1/2", "0-3/4*i"]
    assert [parse_scalar(s, "Qi") for s in strings] == [
        GaussianRational(Fraction(1, 2)),
        GaussianRational(0, Fraction(-3, 4)),
    ]
    assert coeff_strings(TPoly((1, Fraction(-1, 3)))) == ["1", "-1/3"]


def test_flow_coefficient_access():
    phi = classical_flow(X, 4)
    assert phi.coefficient(1) == X
    assert phi.coefficient(4) == X * Fraction(1, 24)
    with pytest.raises(ValueError):
        phi.coefficient(5)
    semi = phi.minus_base()
    assert not semi.has_base
    assert semi.to_tseries().coefficient(0) == XSeries.zero()
