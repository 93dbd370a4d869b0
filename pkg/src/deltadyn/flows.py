"""Bivariate flow containers: series in t with XSeries coefficients.

TSeries is the workhorse: a polynomial in t, truncated at a fixed
t-order, whose coefficients are XSeries in x.  Flow is the structured
view used by the dynamical-system layers: a base point x plus basis
coefficients, where the basis is either the monomials t^n or the basic
polynomials q_n(t) of a delta operator.  A Flow converts losslessly
between the two bases through the triangular change-of-basis matrix.
"""

from fractions import Fraction

from .series import XSeries

__all__ = ["TSeries", "Flow", "taylor_compose", "poly_substitute"]


class TSeries:
    """Polynomial in t with XSeries coefficients, truncated at t-order.

    Index = power of t.  Multiplication truncates at the minimum of the
    operand orders, mirroring XSeries semantics in the t direction.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        if order < 0:
            raise ValueError("t-order must be >= 0")
        coeffs = list(coeffs)[: order + 1]
        coeffs += [XSeries.zero()] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    @classmethod
    def zero(cls, order):
        return cls((), order)

    @classmethod
    def from_xseries(cls, xs, order):
        return cls((xs,), order)

    def coefficient(self, m):
        if m > self.order:
            raise ValueError("coefficient %d beyond t-order %d" % (m, self.order))
        return self.coeffs[m]

    def truncate(self, order):
        return TSeries(self.coeffs, min(order, self.order))

    @property
    def is_zero(self):
        return all(c.is_zero for c in self.coeffs)

    def __add__(self, other):
        order = min(self.order, other.order)
        return TSeries(
            [self.coeffs[m] + other.coeffs[m] for m in range(order + 1)], order
        )

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, TSeries):
            order = min(self.order, other.order)
            out = [XSeries.zero() for _ in range(order + 1)]
            for i in range(min(self.order, order) + 1):
                a = self.coeffs[i]
                if a.is_zero:
                    continue
                for j in range(min(other.order, order - i) + 1):
                    b = other.coeffs[j]
                    if not b.is_zero:
                        out[i + j] = out[i + j] + a * b
            return TSeries(out, order)
        # scalar or XSeries factor
        return TSeries([c * other for c in self.coeffs], self.order)

    __rmul__ = __mul__

    def dt(self):
        """t-derivative; drops the t-order by one."""
        if self.order == 0:
            return TSeries.zero(0)
        return TSeries(
            [(m + 1) * self.coeffs[m + 1] for m in range(self.order)],
            self.order - 1,
        )

    def dx(self):
        """Coefficient-wise x-derivative (same t-order)."""
        out = []
        for c in self.coeffs:
            if not c.is_exact and c.order == 0:
                out.append(XSeries.zero())
            else:
                out.append(c.derivative())
        return TSeries(out, self.order)

    def t_scale(self, a):
        """Substitute t -> a*t: coefficient m picks up a^m."""
        out = []
        power = 1
        for m, c in enumerate(self.coeffs):
            out.append(c * power)
            power = power * a
        return TSeries(out, self.order)

    def evaluate(self, t_value, x_value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t_value + c.evaluate(x_value)
        return acc

    def __eq__(self, other):
        if not isinstance(other, TSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        parts = [
            "(%r)*t^%d" % (c, m)
            for m, c in enumerate(self.coeffs)
            if not c.is_zero
        ]
        return " + ".join(parts) if parts else "0"


class Flow:
    """Base point x plus basis coefficients in t.

    coeffs[n-1] multiplies basis_n(t) for n = 1..N, where the basis is
    t^n when ``basis is None`` (monomial form) and q_n(t) of the given
    BasicSequence otherwise.  ``has_base`` distinguishes flows from
    semiflows (which omit the leading x).  At t = 0 a flow with base
    evaluates to x because every basis polynomial vanishes there.
    """

    __slots__ = ("coeffs", "basis", "has_base")

    def __init__(self, coeffs, basis=None, has_base=True):
        self.coeffs = tuple(coeffs)
        self.basis = basis
        self.has_base = has_base
        if basis is not None and basis.depth < len(self.coeffs):
            raise ValueError("basis depth is smaller than the flow order")

    @property
    def order(self):
        return len(self.coeffs)

    def coefficient(self, n):
        """Coefficient multiplying basis_n, 1-indexed."""
        if not 1 <= n <= self.order:
            raise ValueError("basis index out of range")
        return self.coeffs[n - 1]

    def minus_base(self):
        return Flow(self.coeffs, self.basis, has_base=False)

    def with_base(self):
        return Flow(self.coeffs, self.basis, has_base=True)

    def to_monomial(self):
        """Expand the basis polynomials; lossless (triangular, unit-free)."""
        if self.basis is None:
            return self
        N = self.order
        mono = [XSeries.zero() for _ in range(N)]
        for n in range(1, N + 1):
            c = self.coeffs[n - 1]
            if c.is_zero:
                continue
            q = self.basis.poly(n)
            for k in range(1, q.degree + 1):
                b = q.coefficient(k)
                if b != 0:
                    mono[k - 1] = mono[k - 1] + c * b
        return Flow(mono, None, self.has_base)

    def to_basic(self, basis):
        """Inverse conversion: solve the triangular system against q_n."""
        if self.basis is not None:
            return self.to_monomial().to_basic(basis)
        N = self.order
        if basis.depth < N:
            raise ValueError("basis depth is smaller than the flow order")
        rest = list(self.coeffs)  # rest[k-1] = remaining coefficient of t^k
        out = [XSeries.zero()] * N
        for n in range(N, 0, -1):
            q = basis.poly(n)
            c = rest[n - 1] / q.coefficient(n)
            out[n - 1] = c
            if not c.is_zero:
                for k in range(1, n + 1):
                    b = q.coefficient(k)
                    if b != 0:
                        rest[k - 1] = rest[k - 1] - c * b
        return Flow(out, basis, self.has_base)

    def to_tseries(self):
        """Monomial TSeries including the base term (degree = order)."""
        mono = self.to_monomial()
        head = XSeries.x() if self.has_base else XSeries.zero()
        return TSeries((head,) + mono.coeffs, mono.order)

    def evaluate(self, t_value, x_value):
        acc = x_value if self.has_base else 0
        if self.basis is None:
            tp = t_value
            for c in self.coeffs:
                acc = acc + c.evaluate(x_value) * tp
                tp = tp * t_value
        else:
            for n in range(1, self.order + 1):
                c = self.coeffs[n - 1]
                if not c.is_zero:
                    acc = acc + c.evaluate(x_value) * self.basis.poly(n).evaluate(t_value)
        return acc

    def __eq__(self, other):
        if not isinstance(other, Flow):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.basis == other.basis
            and self.has_base == other.has_base
        )

    def __hash__(self):
        return hash((self.coeffs, self.basis, self.has_base))

    def __repr__(self):
        kind = "monomial" if self.basis is None else "basic"
        return "Flow(order=%d, basis=%s, base=%s)" % (
            self.order,
            kind,
            self.has_base,
        )


def _as_centered_tseries(w):
    ts = w.to_tseries() if isinstance(w, Flow) else w
    if ts.coefficient(0) != XSeries.x():
        raise ValueError("flow must be centred at the base series x")
    return ts


def taylor_compose(f, w):
    """Compose f with a flow W centred at x: sum_k f^(k)(x)/k! (W-x)^k.

    Exact when f is a polynomial; for a truncated f the x-order loss of
    the repeated derivatives propagates into the coefficients.  W must
    carry the base term x (its deviation W - x needs a strictly
    positive t-order).
    """
    ts = _as_centered_tseries(w)
    N = ts.order
    dev = TSeries((XSeries.zero(),) + ts.coeffs[1:], N)
    out = TSeries.zero(N)
    power = TSeries.from_xseries(XSeries.one(), N)
    fk = f
    k = 0
    kfact = 1
    while True:
        if fk.is_zero:
            break
        out = out + power * (fk * Fraction(1, kfact))
        if k == N:
            break
        if not fk.is_exact and fk.order == 0:
            break
        fk = fk.derivative()
        k += 1
        kfact *= k
        power = power * dev
    return out


def poly_substitute(f, w):
    """f(W) for an exact polynomial f and any TSeries W (Horner).

    Unlike taylor_compose this needs no base point; it is the tool for
    evaluating flows whose t^0 coefficient is itself a series.
    """
    if isinstance(w, Flow):
        w = w.to_tseries()
    if not f.is_exact:
        raise ValueError("poly_substitute requires an exact polynomial")
    acc = TSeries.zero(w.order)
    for c in reversed(f.coeffs):
        acc = acc * w
        acc = acc + TSeries.from_xseries(XSeries.constant(c), w.order)
    return acc
