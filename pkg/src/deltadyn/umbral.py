"""Delta operators, basic polynomial sequences and umbral composition.

A delta operator is a shift-invariant operator Q = p(d/dt) whose
series p has p(0) = 0 and p'(0) != 0.  Each one owns a basic sequence
(q_n): polynomials with q_0 = 1, q_n(0) = 0 and Q q_n = n q_{n-1},
necessarily of binomial type.  The whole sequence is generated in one
stroke from the exponential generating identity

    sum_n q_n(t) u^n / n!  =  exp(t * pinv(u)),

where pinv is the compositional inverse of p, so the coefficient of
t^k in q_n is (n!/k!) [u^n] pinv(u)^k.  A slower route that solves
Q q_n = n q_{n-1} degree by degree is kept as an independent check.

Built-in operators: the derivative itself, the forward difference
exp(d)-1 (falling factorials), the backward difference 1-exp(-d)
(rising factorials), the Abel operator d*exp(alpha d) (polynomials
t(t - n alpha)^(n-1)) and the Touchard operator log(1+d) (Stirling
set polynomials).

Basic sequences compose umbrally (substitute one family into the
monomial expansion of another) and form a group; the attached
operators compose the opposite way, f(delta) then g(delta) giving
f(g(delta)).
"""

import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .flows import TSeries
from .series import (
    TPoly,
    compositional_inverse,
    invert_scalar,
    seq_compose,
    seq_mul,
)

__all__ = [
    "DeltaOp",
    "BasicSequence",
    "UmbralOperator",
    "derivative",
    "forward",
    "backward",
    "abel",
    "touchard",
    "DEFAULT_DEPTH",
    "basic_sequence_from_delta",
    "basic_sequence_by_recurrence",
    "monomial_basis",
    "apply_delta_tpoly",
    "apply_delta_series",
    "umbral_apply",
    "umbral_compose",
    "umbral_inverse",
    "first_expansion",
    "expansion_to_delta_series",
    "shift_operator",
    "stirling2",
    "signed_stirling1",
]

DEFAULT_DEPTH = 16


@dataclass(frozen=True)
class DeltaOp:
    """A delta operator as ordinary coefficients of p(d/dt).

    coeffs[k] multiplies the k-th derivative; p0 must vanish and p1
    must be invertible.  The series is stored through a finite order,
    which bounds the polynomial degree the operator can act on.  The
    tag and alpha fields are descriptive only and do not take part in
    equality.
    """

    coeffs: tuple
    tag: str = field(default="custom", compare=False)
    alpha: object = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("delta operator needs at least order 1")
        if self.coeffs[0] != 0:
            raise ValueError("delta operator must annihilate constants (p0 = 0)")
        if self.coeffs[1] == 0:
            raise ValueError("delta operator needs p1 != 0")

    @property
    def order(self):
        return len(self.coeffs) - 1

    def apply_tpoly(self, p):
        """Apply Q to an exact polynomial in t; degree drops by one."""
        if p.degree > self.order:
            raise ValueError("operator order too small for this polynomial")
        return apply_delta_series(self.coeffs, p)

    def apply_tseries(self, w):
        """Apply Q in the t variable of a TSeries."""
        if w.order > self.order:
            raise ValueError("operator order too small for this t-order")
        out = TSeries.zero(max(w.order - 1, 0))
        dk = w
        for k in range(1, w.order + 1):
            dk = dk.dt()
            c = self.coeffs[k]
            if c != 0:
                out = out + TSeries(dk.coeffs, out.order) * c
        return out

    def __repr__(self):
        return "DeltaOp(%s, order=%d)" % (self.tag, self.order)


def apply_delta_series(coeffs, p):
    """Apply a shift-invariant series sum_k coeffs[k] d^k to a TPoly."""
    out = TPoly.zero()
    dk = p
    for k in range(0, p.degree + 1):
        if k:
            dk = dk.derivative()
        if k < len(coeffs) and coeffs[k] != 0:
            out = out + dk * coeffs[k]
    return out


def apply_delta_tpoly(Q, p):
    """Module-level alias for DeltaOp.apply_tpoly."""
    return Q.apply_tpoly(p)


# ---------------------------------------------------------------------------
# built-in operators

def derivative(order=DEFAULT_DEPTH):
    """The plain derivative d/dt (basic sequence: monomials)."""
    return DeltaOp((0, 1) + (0,) * (order - 1), tag="derivative")


def forward(order=DEFAULT_DEPTH):
    """Forward difference exp(d) - 1, mapping y(t) to y(t+1) - y(t)."""
    coeffs = (0,) + tuple(Fraction(1, math.factorial(k)) for k in range(1, order + 1))
    return DeltaOp(coeffs, tag="forward")


def backward(order=DEFAULT_DEPTH):
    """Backward difference 1 - exp(-d), mapping y(t) to y(t) - y(t-1)."""
    coeffs = (0,) + tuple(
        Fraction(-((-1) ** k), math.factorial(k)) for k in range(1, order + 1)
    )
    return DeltaOp(coeffs, tag="backward")


def abel(alpha=1, order=DEFAULT_DEPTH):
    """Abel operator d * exp(alpha d)."""
    coeffs = [0]
    for k in range(1, order + 1):
        coeffs.append(alpha ** (k - 1) * Fraction(1, math.factorial(k - 1)))
    return DeltaOp(tuple(coeffs), tag="abel", alpha=alpha)


def touchard(order=DEFAULT_DEPTH):
    """Touchard operator log(1 + d)."""
    coeffs = (0,) + tuple(Fraction((-1) ** (k - 1), k) for k in range(1, order + 1))
    return DeltaOp(coeffs, tag="touchard")


# ---------------------------------------------------------------------------
# basic sequences

@dataclass(frozen=True)
class BasicSequence:
    """The basic polynomials q_0 .. q_depth of a delta operator.

    beta(k, n) is the coefficient of t^k in q_n; the matrix is lower
    triangular in k with beta(n, n) != 0 and beta(0, n) = 0 for n >= 1.
    """

    operator: DeltaOp
    polys: tuple  # TPoly, index n = 0 .. depth

    @property
    def depth(self):
        return len(self.polys) - 1

    def poly(self, n):
        if not 0 <= n <= self.depth:
            raise ValueError("basis index out of range")
        return self.polys[n]

    def beta(self, k, n):
        return self.poly(n).coefficient(k)

    def matrix(self):
        """Dense (depth+1)^2 matrix, rows = t-power, columns = n."""
        d = self.depth
        return [[self.beta(k, n) for n in range(d + 1)] for k in range(d + 1)]

    def __repr__(self):
        return "BasicSequence(%s, depth=%d)" % (self.operator.tag, self.depth)


@functools.lru_cache(maxsize=None)
def basic_sequence_from_delta(Q, depth):
    """Basic sequence of Q through the generating identity exp(t pinv(u)).

    The coefficient of t^k in q_n is (n!/k!) [u^n] pinv(u)^k, with pinv
    the compositional inverse of Q's series; everything is exact.
    """
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if Q.order < depth:
        raise ValueError("operator order too small for this depth")
    pinv = compositional_inverse(Q.coeffs, depth)
    polys = []
    rows = []  # rows[k][n] = [u^n] pinv^k
    power = (1,) + (0,) * depth
    for k in range(depth + 1):
        rows.append(power)
        power = seq_mul(power, pinv, depth)
    for n in range(depth + 1):
        coeffs = [
            Fraction(math.factorial(n), math.factorial(k)) * rows[k][n]
            for k in range(n + 1)
        ]
        polys.append(TPoly(coeffs))
    return BasicSequence(Q, tuple(polys))


def basic_sequence_by_recurrence(Q, depth):
    """Independent construction solving Q q_n = n q_{n-1} degree by degree.

    Kept as a verification oracle for basic_sequence_from_delta; it
    never touches the compositional inverse.
    """
    if Q.order < depth:
        raise ValueError("operator order too small for this depth")
    p1 = Q.coeffs[1]
    qt = [Q.apply_tpoly(TPoly.monomial(1, k)) for k in range(depth + 1)]
    polys = [TPoly.one()]
    for n in range(1, depth + 1):
        target = n * polys[n - 1]
        beta = [0] * (n + 1)
        acc = TPoly.zero()
        for m in range(n - 1, -1, -1):
            need = target.coefficient(m) - acc.coefficient(m)
            bk = need * invert_scalar(p1 * (m + 1))
            beta[m + 1] = bk
            if bk != 0:
                acc = acc + bk * qt[m + 1]
        polys.append(TPoly(beta))
    return BasicSequence(Q, tuple(polys))


def monomial_basis(depth):
    """Basic sequence of the derivative: q_n = t^n."""
    return basic_sequence_from_delta(derivative(max(depth, 1)), depth)


# ---------------------------------------------------------------------------
# umbral operators and composition

@dataclass(frozen=True)
class UmbralOperator:
    """The linear map sending t^n to q_n(t) for a basic sequence."""

    basis: BasicSequence

    def apply(self, p):
        if p.degree > self.basis.depth:
            raise ValueError("polynomial degree exceeds the basis depth")
        out = TPoly.zero()
        for k in range(p.degree + 1):
            c = p.coefficient(k)
            if c != 0:
                out = out + c * self.basis.poly(k)
        return out

    def apply_tseries(self, w):
        """Map t^m to q_m(t) inside a TSeries; result is monomial."""
        if w.order > self.basis.depth:
            raise ValueError("t-order exceeds the basis depth")
        out = TSeries.zero(w.order)
        for m in range(w.order + 1):
            c = w.coefficient(m)
            if c.is_zero:
                continue
            q = self.basis.poly(m)
            add = [c * q.coefficient(k) for k in range(q.degree + 1)]
            out = out + TSeries(add, w.order)
        return out


def umbral_apply(L, p):
    """Apply an UmbralOperator (or a BasicSequence) to a TPoly."""
    if isinstance(L, BasicSequence):
        L = UmbralOperator(L)
    return L.apply(p)


def umbral_compose(A, B):
    """Substitute B's polynomials into A's monomial expansions.

    r_n = sum_k beta_A(k, n) q^B_k.  The attached operator is the
    composition p_A(p_B(delta)).
    """
    if A.depth != B.depth:
        raise ValueError("depth mismatch")
    order = min(A.operator.order, B.operator.order)
    op = DeltaOp(seq_compose(A.operator.coeffs, B.operator.coeffs, order))
    L = UmbralOperator(B)
    polys = tuple(L.apply(A.poly(n)) for n in range(A.depth + 1))
    return BasicSequence(op, polys)


def umbral_inverse(A):
    """Basic sequence of the compositionally inverse operator.

    Composing with it on either side yields the monomial basis.
    """
    inv = DeltaOp(compositional_inverse(A.operator.coeffs, A.operator.order))
    return basic_sequence_from_delta(inv, A.depth)


# ---------------------------------------------------------------------------
# expansion theorem and shift operators

def shift_operator(a, order=DEFAULT_DEPTH):
    """The shift y(t) -> y(t+a) as a derivative series, a^k / k!."""
    return tuple(a ** k * Fraction(1, math.factorial(k)) for k in range(order + 1))


def first_expansion(T, Q, depth):
    """Coefficients c_k = [T q_k](0) of T in powers of Q.

    T is any shift-invariant operator given as a derivative series.
    Reconstructing sum_k c_k Q^k / k! recovers T through the shared
    order (see expansion_to_delta_series).
    """
    basis = basic_sequence_from_delta(Q, depth)
    out = []
    for k in range(depth + 1):
        image = apply_delta_series(T, basis.poly(k))
        out.append(image.coefficient(0))
    return tuple(out)


def expansion_to_delta_series(c, Q, order):
    """Assemble sum_k c_k Q^k / k! back into a derivative series."""
    out = [0] * (order + 1)
    power = (1,) + (0,) * order
    for k, ck in enumerate(c):
        if k > order:
            break
        w = ck * Fraction(1, math.factorial(k))
        if w != 0:
            for i in range(order + 1):
                out[i] = out[i] + w * power[i]
        power = seq_mul(power, Q.coeffs, order)
    return tuple(out)


# ---------------------------------------------------------------------------
# Stirling numbers

@functools.lru_cache(maxsize=None)
def _stirling2(n, k):
    if k > n or k < 0:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return k * _stirling2(n - 1, k) + _stirling2(n - 1, k - 1)


def stirling2(n, k):
    """Stirling numbers of the second kind (set partitions into blocks)."""
    if n < 0 or k < 0 or k > n:
        raise ValueError("indices out of range")
    return _stirling2(n, k)


@functools.lru_cache(maxsize=None)
def _signed_stirling1(n, k):
    if k > n or k < 0:
        return 0
    if n == 0:
        return 1
    if k == 0:
        return 0
    return _signed_stirling1(n - 1, k - 1) - (n - 1) * _signed_stirling1(n - 1, k)


def signed_stirling1(n, k):
    """Signed Stirling numbers of the first kind, from the falling
    factorial expansion t(t-1)...(t-n+1) = sum_k s(n,k) t^k."""
    if n < 0 or k < 0 or k > n:
        raise ValueError("indices out of range")
    return _signed_stirling1(n, k)
