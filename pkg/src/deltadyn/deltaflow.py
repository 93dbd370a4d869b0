"""Delta flows: solutions of Q Phi = f(Phi) over a basic-sequence basis.

A delta flow replaces the monomials of the classical flow by the basic
polynomials of a delta operator Q,

    Phi_Q(t, x) = x + sum_n A_n(x) q_n(t) / n!,

which is the umbral image L[Phi] of the classical flow.  Because L is
linear but not multiplicative, the right hand side f(Phi_Q) of the
flow equation lives in the transported ring: the defining identity is

    Q Phi_Q = L[f(Phi)] = f(x) dPhi_Q/dx,

verified here coefficient by coefficient (verify_delta_ode and
delta_pde_identity_residuals).  Semiflows of fixed Q form a ring under
the transported sum (cross terms H_n) and product (pullback to the
product of generators); flows of a fixed generator over varying bases
form a group under umbral composition of the bases, anti-isomorphic to
their connection matrices.
"""

import math
from dataclasses import dataclass
from fractions import Fraction

from .autonomous import autonomous_sequence, classical_flow, h_sequence
from .flows import Flow, TSeries, taylor_compose
from .series import XSeries, rational_binomial
from .umbral import (
    BasicSequence,
    UmbralOperator,
    basic_sequence_from_delta,
    derivative,
    umbral_compose,
    umbral_inverse,
)

__all__ = [
    "DeltaFlow",
    "delta_flow",
    "classical_delta_flow",
    "rho_q",
    "rhoq_add",
    "rhoq_mul",
    "rhoq_unit",
    "verify_delta_ode",
    "delta_pde_identity_residuals",
    "linear_semiflow_terms",
    "monomial_power_identity",
    "poly_flow_sum",
    "poly_flow_product",
    "flow_compose",
    "flow_inverse",
    "connection_matrix",
    "connection_flow",
    "matrix_product",
    "delta_representation_residuals",
]


@dataclass(frozen=True)
class DeltaFlow:
    """A Flow in a basic-sequence basis together with its generator.

    coeffs[n-1] multiplies q_n(t) and equals A_n(generator) / n!.
    Evaluating at t = 0 returns the base point because q_n(0) = 0.
    """

    coeffs: tuple
    basis: BasicSequence
    generator: XSeries
    has_base: bool = True

    @property
    def order(self):
        return len(self.coeffs)

    @property
    def flow(self):
        return Flow(self.coeffs, self.basis, self.has_base)

    def coefficient(self, n):
        return self.flow.coefficient(n)

    def to_monomial_tseries(self):
        return self.flow.to_tseries()

    def evaluate(self, t_value, x_value):
        return self.flow.evaluate(t_value, x_value)

    def minus_base(self):
        return DeltaFlow(self.coeffs, self.basis, self.generator, False)


def _resolve_basis(Q, order, basis):
    if basis is None:
        basis = basic_sequence_from_delta(Q, order)
    if basis.depth < order:
        raise ValueError("basis depth is smaller than the requested order")
    return basis


def _flow_coeffs(aut):
    return tuple(
        t * Fraction(1, math.factorial(n + 1)) for n, t in enumerate(aut.terms)
    )


def delta_flow(f, Q, order, basis=None):
    """Phi_Q for generator f: coefficients A_n(f)/n! against q_n(t)."""
    basis = _resolve_basis(Q, order, basis)
    aut = autonomous_sequence(f, order)
    return DeltaFlow(_flow_coeffs(aut), basis, f, True)


def classical_delta_flow(f, order):
    """The classical flow packaged over the monomial basic sequence.

    This is the identity element of the composition group.
    """
    return delta_flow(f, derivative(max(order, 1)), order)


def rho_q(f, Q, order, basis=None):
    """Semiflow: delta_flow without the base point."""
    return delta_flow(f, Q, order, basis).minus_base()


def _check_ring_operands(a, b):
    if a.basis != b.basis:
        raise ValueError("mixed bases")
    if a.order != b.order:
        raise ValueError("order mismatch")


def rhoq_add(a, b):
    """Transported sum: coefficientwise sum corrected by H_n(f, g)/n!.

    The result is the semiflow of f + g; computing it through the H_n
    recursion keeps the route independent from autonomous_sequence.
    """
    _check_ring_operands(a, b)
    H = h_sequence(a.generator, b.generator, a.order)
    coeffs = tuple(
        ca + cb + h * Fraction(1, math.factorial(n + 1))
        for n, (ca, cb, h) in enumerate(zip(a.coeffs, b.coeffs, H))
    )
    return DeltaFlow(coeffs, a.basis, a.generator + b.generator, False)


def rhoq_mul(a, b):
    """Transported product: pullback to the product of the generators."""
    _check_ring_operands(a, b)
    return rho_q(
        a.generator * b.generator, a.basis.operator, a.order, a.basis
    )


def rhoq_unit(Q, order, basis=None):
    """Multiplicative unit of the semiflow ring: q_1(t), generator 1."""
    return rho_q(XSeries.one(), Q, order, basis)


# ---------------------------------------------------------------------------
# the delta flow equation

def verify_delta_ode(f, Q, order, basis=None):
    """Residual of Q Phi_Q = L[f(Phi)], vanishing through t-order N-1.

    The left side applies Q in the t variable to the monomial form of
    the delta flow; the right side composes f with the classical flow
    and maps the monomials through the umbral operator of the basis.
    Both sides are polynomials of degree N-1 in t and must agree
    coefficient by coefficient.
    """
    basis = _resolve_basis(Q, order, basis)
    df = delta_flow(f, Q, order, basis)
    lhs = Q.apply_tseries(df.to_monomial_tseries())
    comp = taylor_compose(f, classical_flow(f, order))
    L = UmbralOperator(basis)
    rhs = L.apply_tseries(comp.truncate(max(order - 1, 0)))
    return lhs - rhs


def delta_pde_identity_residuals(f, Q, order, basis=None):
    """Residuals of Q Phi_Q = f(x) dPhi_Q/dx in basic coordinates.

    Both sides expand over q_0 .. q_{N-1}: the left side has
    coefficient (m+1) c_{m+1}, the right side f at q_0 and f * c_m'
    beyond.  Returns the list of differences (all zero).
    """
    basis = _resolve_basis(Q, order, basis)
    df = delta_flow(f, Q, order, basis)
    c = df.coeffs
    residuals = [1 * c[0] - f]
    for m in range(1, order):
        residuals.append((m + 1) * c[m] - f * c[m - 1].derivative())
    return residuals


# ---------------------------------------------------------------------------
# closed forms for polynomial generators

def linear_semiflow_terms(a, b, Q, order, basis=None):
    """Semiflow of the affine generator a*x + b.

    For a != 0 the coefficient of q_n is a^(n-1) (a x + b) / n!; the
    degenerate a = 0 collapses to the single term b q_1(t).
    """
    basis = _resolve_basis(Q, order, basis)
    gen = XSeries((b, a))
    if a == 0:
        coeffs = [XSeries.constant(b)] + [XSeries.zero()] * (order - 1)
        return DeltaFlow(tuple(coeffs), basis, gen, False)
    coeffs = []
    power = 1
    for n in range(1, order + 1):
        coeffs.append(gen * (power * Fraction(1, math.factorial(n))))
        power = power * a
    return DeltaFlow(tuple(coeffs), basis, gen, False)


def _monomial_semiflow(a, k, Q, order, basis):
    """Semiflow of a*x^k assembled through ring products of linears."""
    piece = linear_semiflow_terms(a, 0, Q, order, basis)
    for _ in range(k - 1):
        piece = rhoq_mul(piece, rho_q(XSeries.x(), Q, order, basis))
    return piece


def monomial_power_identity(a, k, Q, order, basis=None):
    """Residual of the power closed form for the generator a*x^k, k >= 2.

    The k-fold ring product of semiflows matches the umbral image of
    x (1 - a(k-1) x^(k-1) t)^(-1/(k-1)) - x, expanded through the
    binomial series; the residual vanishes through t-order N.
    """
    if k < 2:
        raise ValueError("power identity needs k >= 2")
    if order == 0:
        return TSeries.zero(0)
    basis = _resolve_basis(Q, order, basis)
    lhs = _monomial_semiflow(a, k, Q, order, basis).to_monomial_tseries()

    r = Fraction(-1, k - 1)
    scale = -(a * (k - 1))
    closed = [XSeries.zero()]
    power = 1
    for n in range(1, order + 1):
        power = power * scale
        closed.append(XSeries.monomial(rational_binomial(r, n) * power, (k - 1) * n + 1))
    rhs = UmbralOperator(basis).apply_tseries(TSeries(closed, order))
    return lhs - rhs


def poly_flow_sum(f, Q, order, basis=None):
    """Semiflow of a polynomial f assembled monomial by monomial.

    Each power a_k x^k contributes its ring power (constant and linear
    terms directly); the pieces are folded with the transported sum,
    exercising the H_n route end to end.  Equals rho_q(f) exactly.
    """
    basis = _resolve_basis(Q, order, basis)
    if not f.is_exact:
        raise ValueError("poly_flow_sum requires an exact polynomial")
    pieces = []
    for k in range(f.degree + 1):
        c = f.coefficient(k)
        if c == 0:
            continue
        if k == 0:
            pieces.append(rho_q(XSeries.constant(c), Q, order, basis))
        elif k == 1:
            pieces.append(linear_semiflow_terms(c, 0, Q, order, basis))
        else:
            pieces.append(_monomial_semiflow(c, k, Q, order, basis))
    if not pieces:
        return rho_q(XSeries.zero(), Q, order, basis)
    acc = pieces[0]
    for piece in pieces[1:]:
        acc = rhoq_add(acc, piece)
    return acc


def poly_flow_product(factors, Q, order, basis=None):
    """Semiflow of a product of affine factors (a_k x + b_k), a_k != 0.

    Ring product of the affine semiflows; equals rho_q of the expanded
    product.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("empty factor list")
    basis = _resolve_basis(Q, order, basis)
    pieces = []
    for a, b in factors:
        if a == 0:
            raise ValueError("factors must have a nonzero linear coefficient")
        pieces.append(linear_semiflow_terms(a, b, Q, order, basis))
    acc = pieces[0]
    for piece in pieces[1:]:
        acc = rhoq_mul(acc, piece)
    return acc


# ---------------------------------------------------------------------------
# the composition group of flows with a fixed generator

def flow_compose(phi_a, phi_b):
    """Compose two delta flows of the same generator.

    The coefficients are untouched; the basis of the result is the
    umbral composition of the bases.
    """
    if phi_a.generator != phi_b.generator:
        raise ValueError("generator mismatch")
    if phi_a.order != phi_b.order:
        raise ValueError("order mismatch")
    composed = umbral_compose(phi_a.basis, phi_b.basis)
    return DeltaFlow(phi_a.coeffs, composed, phi_a.generator, phi_a.has_base)


def flow_inverse(phi):
    """Inverse element: same coefficients over the inverse basis."""
    return DeltaFlow(
        phi.coeffs, umbral_inverse(phi.basis), phi.generator, phi.has_base
    )


# ---------------------------------------------------------------------------
# connection matrices

def connection_matrix(basis, size=None):
    """Upper-triangular change of basis: entry [n][i] extracts the
    t^n coefficient of q_i.  Multiplying it against the vector
    (A_i / i!) yields the monomial coefficients of the flow."""
    d = basis.depth if size is None else size
    if d > basis.depth:
        raise ValueError("size exceeds the basis depth")
    return [[basis.beta(n, i) for i in range(d + 1)] for n in range(d + 1)]


def matrix_product(A, B):
    n = len(A)
    return [
        [sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def connection_flow(f, Q, order, basis=None):
    """Monomial flow built directly from the connection matrix.

    Coefficient of t^n is the row-n dot product of the matrix with the
    Hadamard product of the autonomous terms and (1/i!).  Must equal
    the basis conversion of delta_flow exactly.
    """
    basis = _resolve_basis(Q, order, basis)
    aut = autonomous_sequence(f, order)
    scaled = [aut.term(i) * Fraction(1, math.factorial(i)) for i in range(1, order + 1)]
    mono = []
    for n in range(1, order + 1):
        acc = XSeries.zero()
        for i in range(n, order + 1):
            beta = basis.beta(n, i)
            if beta != 0:
                acc = acc + scaled[i - 1] * beta
        mono.append(acc)
    return Flow(tuple(mono), None, True)


# ---------------------------------------------------------------------------
# delta representation (verification-only reconstruction)

def delta_representation_residuals(df):
    """Check Phi_Q = sum_n [Q^n Phi_Q at t=0] q_n(t) / n!.

    Reapplies Q to the monomial form n times, reads the value at t = 0
    and compares against the stored coefficients.  Returns the list of
    differences (base term first).
    """
    Q = df.basis.operator
    w = df.to_monomial_tseries()
    values = []
    for _ in range(df.order + 1):
        values.append(w.coefficient(0))
        w = Q.apply_tseries(w)
    base = XSeries.x() if df.has_base else XSeries.zero()
    residuals = [values[0] - base]
    for n in range(1, df.order + 1):
        residuals.append(values[n] * Fraction(1, math.factorial(n)) - df.coeffs[n - 1])
    return residuals
