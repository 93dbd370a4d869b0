import math
from fractions import Fraction

import pytest

from deltadyn.series import TPoly, seq_mul
from deltadyn.umbral import (
    DeltaOp,
    UmbralOperator,
    abel,
    apply_delta_tpoly,
    backward,
    basic_sequence_by_recurrence,
    basic_sequence_from_delta,
    derivative,
    expansion_to_delta_series,
    first_expansion,
    forward,
    monomial_basis,
    shift_operator,
    signed_stirling1,
    stirling2,
    touchard,
    umbral_apply,
    umbral_compose,
    umbral_inverse,
)

from oracle_utils import (
    abel_poly,
    bivariate_add,
    bivariate_of_shift,
    bivariate_product,
    falling_factorial,
    rising_factorial,
    stirling2_by_enumeration,
    unsigned_stirling1_by_enumeration,
)

DEPTH = 10


def all_builtins(order=DEPTH):
    return (
        derivative(order),
        forward(order),
        backward(order),
        abel(1, order),
        abel(-1, order),
        abel(Fraction(2, 3), order),
        touchard(order),
    )


# --- operator coefficient freezes ------------------------------------------

def test_forward_coefficients():
    Q = forward(6)
    assert Q.coeffs == (0, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24),
                        Fraction(1, 120), Fraction(1, 720))


def test_backward_coefficients():
    Q = backward(4)
    assert Q.coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 6), Fraction(-1, 24))


def test_abel_coefficients():
    Q = abel(Fraction(1, 2), 4)
    expected = (0, 1, Fraction(1, 2), Fraction(1, 8), Fraction(1, 48))
    assert Q.coeffs == expected


def test_touchard_coefficients():
    Q = touchard(4)
    assert Q.coeffs == (0, 1, Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4))


def test_delta_op_invariants():
    with pytest.raises(ValueError):
        DeltaOp((1, 1))
    with pytest.raises(ValueError):
        DeltaOp((0, 0, 1))
    with pytest.raises(ValueError):
        DeltaOp((0,))


# --- basic sequences ---------------------------------------------------------

def test_derivative_basis_is_monomial():
    basis = basic_sequence_from_delta(derivative(DEPTH), DEPTH)
    for n in range(DEPTH + 1):
        assert basis.poly(n) == TPoly.monomial(1, n)


def test_forward_basis_is_falling_factorials():
    basis = basic_sequence_from_delta(forward(DEPTH), DEPTH)
    assert basis.poly(2) == TPoly((0, -1, 1))  # t^2 - t
    for n in range(DEPTH + 1):
        assert list(basis.poly(n).coeffs) == falling_factorial(n)


def test_backward_basis_is_rising_factorials():
    basis = basic_sequence_from_delta(backward(DEPTH), DEPTH)
    assert basis.poly(2) == TPoly((0, 1, 1))  # t^2 + t
    for n in range(DEPTH + 1):
        assert list(basis.poly(n).coeffs) == rising_factorial(n)


@pytest.mark.parametrize("alpha", [1, -1, Fraction(2, 3)])
def test_abel_basis_closed_form(alpha):
    basis = basic_sequence_from_delta(abel(alpha, DEPTH), DEPTH)
    assert basis.poly(2) == TPoly((0, -2 * alpha, 1))  # t(t - 2 alpha)
    for n in range(DEPTH + 1):
        assert list(basis.poly(n).coeffs) == abel_poly(n, alpha)


def test_touchard_basis_is_stirling2():
    basis = basic_sequence_from_delta(touchard(DEPTH), DEPTH)
    assert basis.poly(3) == TPoly((0, 1, 3, 1))
    for n in range(DEPTH + 1):
        for k in range(n + 1):
            assert basis.beta(k, n) == stirling2(n, k)


def test_basic_set_axioms():
    for Q in all_builtins():
        basis = basic_sequence_from_delta(Q, DEPTH)
        assert basis.poly(0) == TPoly.one()
        for n in range(1, DEPTH + 1):
            qn = basis.poly(n)
            assert qn.evaluate(0) == 0
            assert qn.degree == n
            assert Q.apply_tpoly(qn) == n * basis.poly(n - 1)


def test_recurrence_oracle_agrees():
    for Q in all_builtins():
        a = basic_sequence_from_delta(Q, DEPTH)
        b = basic_sequence_by_recurrence(Q, DEPTH)
        assert a.polys == b.polys


def test_binomial_type():
    for Q in all_builtins(8):
        basis = basic_sequence_from_delta(Q, 8)
        for n in range(9):
            left = bivariate_of_shift(basis.poly(n).coeffs)
            right = {}
            for k in range(n + 1):
                term = bivariate_product(
                    basis.poly(k).coeffs, basis.poly(n - k).coeffs
                )
                right = bivariate_add(right, term, math.comb(n, k))
            assert left == right


# --- applying operators ------------------------------------------------------

def test_forward_difference_of_square():
    Q = forward(6)
    assert Q.apply_tpoly(TPoly((0, 0, 1))) == TPoly((1, 2))  # (t+1)^2 - t^2


def test_forward_difference_of_falling_factorial():
    Q = forward(8)
    f3 = TPoly(falling_factorial(3))
    f2 = TPoly(falling_factorial(2))
    assert Q.apply_tpoly(f3) == 3 * f2


def test_derivative_on_monomials():
    Q = derivative(8)
    for n in range(1, 8):
        assert Q.apply_tpoly(TPoly.monomial(1, n)) == TPoly.monomial(n, n - 1)
    assert apply_delta_tpoly(Q, TPoly.one()) == TPoly.zero()


def test_operator_order_guard():
    Q = forward(3)
    with pytest.raises(ValueError):
        Q.apply_tpoly(TPoly.monomial(1, 4))


def test_shift_invariance_spot_check():
    p = TPoly((1, -2, 0, 1))
    for Q in all_builtins():
        for a in (1, Fraction(-1, 2)):
            assert Q.apply_tpoly(p.shift(a)) == Q.apply_tpoly(p).shift(a)


# --- umbral operators --------------------------------------------------------

def test_umbral_identity():
    mono = monomial_basis(6)
    p = TPoly((1, 2, 0, 5))
    assert umbral_apply(mono, p) == p


def test_umbral_falling_on_square():
    basis = basic_sequence_from_delta(forward(6), 6)
    assert umbral_apply(basis, TPoly((0, 0, 1))) == TPoly((0, -1, 1))


def test_umbral_touchard_degree_one():
    basis = basic_sequence_from_delta(touchard(6), 6)
    assert umbral_apply(basis, TPoly((1, 1))) == TPoly((1, 1))


def test_umbral_degree_guard():
    basis = basic_sequence_from_delta(forward(3), 3)
    with pytest.raises(ValueError):
        UmbralOperator(basis).apply(TPoly.monomial(1, 4))


# --- umbral composition group ------------------------------------------------

def test_compose_with_identity():
    mono = monomial_basis(8)
    basis = basic_sequence_from_delta(forward(16), 8)
    assert umbral_compose(basis, mono).polys == basis.polys
    assert umbral_compose(mono, basis).polys == basis.polys


def test_compose_operator_matches_series_composition():
    # the composed family is basic for p_A(p_B(delta))
    cases = (
        (forward(12), backward(12)),
        (touchard(12), forward(12)),
        (abel(1, 12), touchard(12)),
    )
    for QA, QB in cases:
        A = basic_sequence_from_delta(QA, 8)
        B = basic_sequence_from_delta(QB, 8)
        composed = umbral_compose(A, B)
        regenerated = basic_sequence_from_delta(composed.operator, 8)
        assert composed.polys == regenerated.polys


def test_falling_after_rising_is_not_monomial():
    # substituting rising factorials into the falling expansion gives the
    # basis of (e^(1-e^(-d)) - 1), not the monomials: r_3 = t^3 + t
    A = basic_sequence_from_delta(forward(12), 6)
    B = basic_sequence_from_delta(backward(12), 6)
    composed = umbral_compose(A, B)
    assert composed.poly(2) == TPoly((0, 0, 1))
    assert composed.poly(3) == TPoly((0, 1, 0, 1))


def test_inverse_of_identity():
    mono = monomial_basis(6)
    assert umbral_inverse(mono).polys == mono.polys


def test_inverse_of_falling_is_touchard():
    fwd = basic_sequence_from_delta(forward(12), 8)
    tou = basic_sequence_from_delta(touchard(12), 8)
    assert umbral_inverse(fwd).polys == tou.polys


def test_inverse_round_trips():
    for Q in (forward(12), backward(12), abel(1, 12), touchard(12)):
        basis = basic_sequence_from_delta(Q, 8)
        inv = umbral_inverse(basis)
        mono = monomial_basis(8)
        assert umbral_compose(basis, inv).polys == mono.polys
        assert umbral_compose(inv, basis).polys == mono.polys
        assert umbral_inverse(inv).polys == basis.polys


def test_compose_associativity():
    a = basic_sequence_from_delta(forward(12), 6)
    b = basic_sequence_from_delta(abel(1, 12), 6)
    c = basic_sequence_from_delta(touchard(12), 6)
    left = umbral_compose(umbral_compose(a, b), c)
    right = umbral_compose(a, umbral_compose(b, c))
    assert left.polys == right.polys


# --- first expansion theorem --------------------------------------------------

def test_first_expansion_of_q_itself():
    for Q in (forward(10), touchard(10)):
        c = first_expansion(Q.coeffs, Q, 6)
        assert c == (0, 1, 0, 0, 0, 0, 0)


def test_first_expansion_of_shift_in_forward_powers():
    # E^1 q_k at 0 is the falling factorial at 1: nonzero only for k <= 1,
    # so E^1 = I + forward-difference exactly.
    c = first_expansion(shift_operator(1, 10), forward(10), 6)
    assert c == (1, 1, 0, 0, 0, 0, 0)
    rebuilt = expansion_to_delta_series(c, forward(10), 6)
    assert rebuilt == shift_operator(1, 6)


def test_first_expansion_derivative_trivial():
    Q = derivative(8)
    c = first_expansion(Q.coeffs, Q, 5)
    assert c == (0, 1, 0, 0, 0, 0)


def test_first_expansion_reconstruction():
    for Q in (forward(10), backward(10), abel(1, 10), touchard(10)):
        for T in (shift_operator(Fraction(1, 2), 10), touchard(10).coeffs):
            c = first_expansion(T, Q, 8)
            rebuilt = expansion_to_delta_series(c, Q, 8)
            assert rebuilt == tuple(T[: 9])


# --- shift operators -----------------------------------------------------------

def test_shift_operator_values():
    E0 = shift_operator(0, 5)
    assert E0 == (1, 0, 0, 0, 0, 0)
    E1 = shift_operator(1, 6)
    from deltadyn.umbral import apply_delta_series

    assert apply_delta_series(E1, TPoly((0, 0, 1))) == TPoly((1, 2, 1))
    a, b = Fraction(1, 3), Fraction(2)
    lhs = seq_mul(shift_operator(a, 8), shift_operator(b, 8), 8)
    assert lhs == shift_operator(a + b, 8)


# --- Stirling numbers ----------------------------------------------------------

def test_stirling2_values():
    for n in range(7):
        assert stirling2(n, n) == 1
    assert stirling2(3, 2) == 3
    for n in range(6):
        for k in range(n + 1):
            assert stirling2(n, k) == stirling2_by_enumeration(n, k)


def test_signed_stirling1_values():
    # (t)_3 = t^3 - 3 t^2 + 2 t
    assert signed_stirling1(3, 1) == 2
    assert signed_stirling1(3, 2) == -3
    for n in range(7):
        for k in range(n + 1):
            expected = falling_factorial(n)[k] if k < len(falling_factorial(n)) else 0
            assert signed_stirling1(n, k) == expected
    for n in range(6):
        for k in range(n + 1):
            assert abs(signed_stirling1(n, k)) == unsigned_stirling1_by_enumeration(n, k)


def test_stirling_range_errors():
    with pytest.raises(ValueError):
        stirling2(2, 3)
    with pytest.raises(ValueError):
        signed_stirling1(-1, 0)


def test_forward_beta_is_signed_stirling1():
    basis = basic_sequence_from_delta(forward(DEPTH), DEPTH)
    for n in range(DEPTH + 1):
        for k in range(n + 1):
            assert basis.beta(k, n) == signed_stirling1(n, k)


def test_backward_beta_is_unsigned_stirling1():
    basis = basic_sequence_from_delta(backward(DEPTH), DEPTH)
    for n in range(DEPTH + 1):
        for k in range(n + 1):
            assert basis.beta(k, n) == abs(signed_stirling1(n, k))


def test_umbral_operator_sends_monomials_to_basis():
    for Q in (forward(8), abel(1, 8), touchard(8)):
        basis = basic_sequence_from_delta(Q, 8)
        L = UmbralOperator(basis)
        for n in range(9):
            assert L.apply(TPoly.monomial(1, n)) == basis.poly(n)
