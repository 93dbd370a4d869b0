"""Exact univariate series and polynomial kernels.

Three coefficient containers live here:

* XSeries      - polynomial or truncated power series in x.  Carries a
                 truncation order (None means exact polynomial); every
                 operation propagates the tightest valid order.
* TPoly        - exact polynomial in t (basic polynomials, Stirling
                 expansions and the like).
* DerivativeSequence - the tower (f, f', f'', ...) of x-derivatives,
                 with the binomial convolution as its product.

Module level functions provide the formal-series kernels shared by the
rest of the package: multiplication, reciprocal, composition, Lagrange
inversion, exp/log and rational binomial powers on plain coefficient
sequences (index = power, scalar entries).
"""

import math
from fractions import Fraction

__all__ = [
    "XSeries",
    "TPoly",
    "DerivativeSequence",
    "derivative_sequence",
    "hurwitz_product",
    "seq_mul",
    "seq_reciprocal",
    "seq_compose",
    "compositional_inverse",
    "series_exp",
    "series_log",
    "binomial_power",
    "rational_binomial",
    "invert_scalar",
]


# ---------------------------------------------------------------------------
# coefficient-list helpers (scalars, index = power)

def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _add_lists(a, b):
    n = max(len(a), len(b))
    return [
        (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
        for i in range(n)
    ]


def _mul_lists(a, b, cap=None):
    """Convolution of coefficient lists, keeping powers <= cap."""
    if not a or not b:
        return []
    top = len(a) + len(b) - 2
    if cap is not None:
        top = min(top, cap)
    out = [0] * (top + 1)
    for i, ai in enumerate(a):
        if ai == 0 or i > top:
            continue
        for j, bj in enumerate(b):
            if i + j > top:
                break
            if bj != 0:
                out[i + j] = out[i + j] + ai * bj
    return out


def _scale_list(a, c):
    return [c * v for v in a]


# ---------------------------------------------------------------------------
# kernels on plain scalar sequences

def seq_mul(a, b, order):
    """Product of two coefficient sequences through the given order."""
    out = _mul_lists(list(a), list(b), cap=order)
    out += [0] * (order + 1 - len(out))
    return tuple(out)


def seq_reciprocal(a, order):
    """Multiplicative inverse of a sequence with nonzero constant term."""
    a = list(a)
    if not a or a[0] == 0:
        raise ValueError("reciprocal requires a nonzero constant term")
    inv0 = invert_scalar(a[0])
    out = [inv0] + [0] * order
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            if k < len(a) and a[k] != 0:
                acc = acc + a[k] * out[n - k]
        out[n] = -acc * inv0
    return tuple(out)


def invert_scalar(c):
    # Exact reciprocal for int, Fraction and GaussianRational alike.
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


def seq_compose(outer, inner, order):
    """outer(inner(u)) through the given order; inner must have no
    constant term."""
    inner = list(inner)
    if inner and inner[0] != 0:
        raise ValueError("composition requires inner constant term 0")
    out = [0] * (order + 1)
    power = [1]
    for k, c in enumerate(outer):
        if k > order:
            break
        if c != 0:
            for i, p in enumerate(power):
                if i > order:
                    break
                out[i] = out[i] + c * p
        power = _mul_lists(power, inner, cap=order)
    return tuple(out)


def compositional_inverse(p, order):
    """Formal compositional inverse of p, with p(0)=0 and p'(0) != 0.

    Uses the Lagrange inversion formula: the n-th coefficient of the
    inverse is [u^(n-1)] (u/p(u))^n / n.  The round trip
    p(inverse(u)) == u holds exactly through the requested order.

    >>> from fractions import Fraction as F
    >>> exp_minus_one = [0] + [F(1, math.factorial(k)) for k in range(1, 6)]
    >>> compositional_inverse(exp_minus_one, 4)
    (0, Fraction(1, 1), Fraction(-1, 2), Fraction(1, 3), Fraction(-1, 4))
    """
    p = list(p)
    if not p or (p[0] != 0):
        raise ValueError("inverse requires constant term 0")
    if len(p) < 2 or p[1] == 0:
        raise ValueError("inverse requires a nonzero linear term")
    w = seq_reciprocal(p[1:], order)  # u/p as a series in u
    out = [0] * (order + 1)
    power = [1]
    for n in range(1, order + 1):
        power = _mul_lists(power, list(w), cap=order)
        out[n] = power[n - 1] * Fraction(1, n) if n - 1 < len(power) else 0
    return tuple(out)


def series_exp(u, order):
    """exp of a sequence with zero constant term, through the order."""
    u = list(u)
    if u and u[0] != 0:
        raise ValueError("series_exp requires constant term 0")
    out = [0] * (order + 1)
    power = [1]
    fact = 1
    for k in range(0, order + 1):
        if k:
            fact *= k
        c = Fraction(1, fact)
        for i, p in enumerate(power):
            if i > order:
                break
            out[i] = out[i] + c * p
        power = _mul_lists(power, u, cap=order)
    return tuple(out)


def series_log(v, order):
    """log of a sequence with constant term 1, through the order."""
    v = list(v)
    if not v or v[0] != 1:
        raise ValueError("series_log requires constant term 1")
    w = v[:]
    w[0] = 0
    out = [0] * (order + 1)
    power = [1]
    for k in range(1, order + 1):
        power = _mul_lists(power, w, cap=order)
        c = Fraction((-1) ** (k - 1), k)
        for i, p in enumerate(power):
            if i > order:
                break
            out[i] = out[i] + c * p
    return tuple(out)


def rational_binomial(r, k):
    """Generalized binomial coefficient C(r, k) for rational r."""
    if k < 0:
        raise ValueError("negative k in binomial coefficient")
    r = Fraction(r)
    num = Fraction(1)
    for j in range(k):
        num *= r - j
    return num / math.factorial(k)


def binomial_power(u, r, order):
    """(1 + u)^r for a sequence u with zero constant term and rational r.

    >>> binomial_power([0, 1], -1, 3)
    (Fraction(1, 1), Fraction(-1, 1), Fraction(1, 1), Fraction(-1, 1))
    """
    u = list(u)
    if u and u[0] != 0:
        raise ValueError("binomial_power requires constant term 0")
    out = [0] * (order + 1)
    power = [1]
    for k in range(0, order + 1):
        c = rational_binomial(r, k)
        if c != 0:
            for i, p in enumerate(power):
                if i > order:
                    break
                out[i] = out[i] + c * p
        power = _mul_lists(power, u, cap=order)
    return tuple(out)


# ---------------------------------------------------------------------------
# XSeries

class XSeries:
    """Polynomial or truncated power series in x over exact scalars.

    ``order is None`` marks an exact polynomial.  A value ``order == M``
    means the coefficients are valid through x^M only; arithmetic takes
    the minimum of the operand orders and derivatives lose one order.
    Coefficients beyond the stored list are zero (when exact) and must
    not be read past the truncation order (ValueError).
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs=(), order=None):
        coeffs = list(coeffs)
        if order is not None:
            if order < 0:
                raise ValueError("truncation order must be >= 0")
            coeffs = coeffs[: order + 1]
        self.coeffs = tuple(_trim(coeffs))
        self.order = order

    # -- constructors -------------------------------------------------
    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def x(cls):
        return cls((0, 1))

    @classmethod
    def constant(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, c, k):
        return cls((0,) * k + (c,))

    # -- structure ----------------------------------------------------
    @property
    def is_exact(self):
        return self.order is None

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        """Degree of an exact polynomial (-1 for the zero polynomial)."""
        if not self.is_exact:
            raise ValueError("degree undefined for a truncated series")
        return len(self.coeffs) - 1

    def coefficient(self, k):
        if self.order is not None and k > self.order:
            raise ValueError(
                "coefficient %d beyond truncation order %d" % (k, self.order)
            )
        return self.coeffs[k] if k < len(self.coeffs) else 0

    @staticmethod
    def _merge_order(a, b):
        if a is None:
            return b
        if b is None:
            return a
        return min(a, b)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, XSeries):
            other = XSeries.constant(other)
        return XSeries(
            _add_lists(self.coeffs, other.coeffs),
            self._merge_order(self.order, other.order),
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, XSeries) else XSeries.constant(-other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return XSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, XSeries):
            order = self._merge_order(self.order, other.order)
            return XSeries(
                _mul_lists(self.coeffs, other.coeffs, cap=order), order
            )
        return XSeries(_scale_list(self.coeffs, other), self.order)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        inv = invert_scalar(scalar)
        return self * inv

    def derivative(self):
        """x-derivative; a truncated series loses one order."""
        order = self.order
        if order is not None:
            if order == 0:
                raise ValueError("cannot differentiate a series known only to x^0")
            order -= 1
        return XSeries(
            [i * c for i, c in enumerate(self.coeffs)][1:] or (),
            order,
        )

    def truncate(self, order):
        return XSeries(self.coeffs, self._merge_order(self.order, order))

    def evaluate(self, value):
        """Evaluate an exact polynomial at a scalar (Horner)."""
        if not self.is_exact:
            raise ValueError("cannot evaluate a truncated series exactly")
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    # -- comparison / misc ---------------------------------------------
    def agrees_with(self, other, through=None):
        """Mathematical equality up to the shared valid order."""
        limit = self._merge_order(self.order, other.order)
        limit = self._merge_order(limit, through)
        if limit is None:
            return self.coeffs == other.coeffs
        return all(
            self.coefficient(k) == other.coefficient(k) for k in range(limit + 1)
        )

    def __eq__(self, other):
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.order == other.order

    def __hash__(self):
        return hash((self.coeffs, self.order))

    def __repr__(self):
        body = _poly_str(self.coeffs, "x")
        if self.order is None:
            return body
        return "%s + O(x^%d)" % (body, self.order + 1)


# ---------------------------------------------------------------------------
# TPoly

class TPoly:
    """Exact polynomial in t over exact scalars."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_trim(list(coeffs)))

    @classmethod
    def zero(cls):
        return cls(())

    @classmethod
    def one(cls):
        return cls((1,))

    @classmethod
    def t(cls):
        return cls((0, 1))

    @classmethod
    def monomial(cls, c, k):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def coefficient(self, k):
        return self.coeffs[k] if k < len(self.coeffs) else 0

    def __add__(self, other):
        if not isinstance(other, TPoly):
            other = TPoly((other,))
        return TPoly(_add_lists(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other if isinstance(other, TPoly) else TPoly((-other,)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return TPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, TPoly):
            return TPoly(_mul_lists(self.coeffs, other.coeffs))
        return TPoly(_scale_list(self.coeffs, other))

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self * invert_scalar(scalar)

    def derivative(self):
        return TPoly([i * c for i, c in enumerate(self.coeffs)][1:] or ())

    def evaluate(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift(self, a):
        """p(t + a), expanded exactly."""
        out = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            term = [c * math.comb(k, j) * a ** (k - j) for j in range(k + 1)]
            out = _add_lists(out, term)
        return TPoly(out)

    def compose(self, inner):
        """p(q(t)) for TPoly inner, exact."""
        acc = TPoly.zero()
        for c in reversed(self.coeffs):
            acc = acc * inner + TPoly((c,))
        return acc

    def __eq__(self, other):
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return _poly_str(self.coeffs, "t")


# ---------------------------------------------------------------------------
# derivative sequences and the binomial convolution

class DerivativeSequence:
    """The tower (f, f', f'', ..., f^(N)) of x-derivatives of one series.

    Addition is entrywise; the product is the binomial convolution
    hurwitz_product, under which the sequence of f*g is the product of
    the sequences of f and g (Leibniz rule).
    """

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)
        if not self.entries:
            raise ValueError("derivative sequence must be nonempty")

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)

    def __add__(self, other):
        if len(self) != len(other):
            raise ValueError("length mismatch")
        return DerivativeSequence(a + b for a, b in zip(self, other))

    def __eq__(self, other):
        if not isinstance(other, DerivativeSequence):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return "DerivativeSequence(%r)" % (list(self.entries),)


def derivative_sequence(f, length):
    """Build (f, f', ..., f^(length-1)) by repeated differentiation."""
    if length < 1:
        raise ValueError("length must be >= 1")
    entries = [f]
    for _ in range(length - 1):
        prev = entries[-1]
        if not prev.is_exact and prev.order == 0:
            entries.append(XSeries.zero())
            continue
        entries.append(prev.derivative())
    return DerivativeSequence(entries)


def hurwitz_product(F, G):
    """Binomial convolution of two derivative sequences.

    Entry n is sum_k C(n,k) F[k] G[n-k]; by the Leibniz rule this is
    the derivative sequence of the product of the underlying series.
    """
    if len(F) != len(G):
        raise ValueError("length mismatch")
    n = len(F)
    out = []
    for m in range(n):
        acc = XSeries.zero()
        for k in range(m + 1):
            acc = acc + math.comb(m, k) * (F[k] * G[m - k])
        out.append(acc)
    return DerivativeSequence(out)


# ---------------------------------------------------------------------------
# pretty printing / serialization helpers

def _poly_str(coeffs, var):
    from .scalars import format_scalar

    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        cs = format_scalar(c)
        if k == 0:
            parts.append(cs)
        else:
            head = "" if cs == "1" else ("-" if cs == "-1" else cs + "*")
            parts.append("%s%s" % (head, var if k == 1 else "%s^%d" % (var, k)))
    return " + ".join(parts).replace("+ -", "- ") or "0"


def coeff_strings(obj):
    """Coefficient list of an XSeries or TPoly as exact-rational strings."""
    from .scalars import format_scalar

    return [format_scalar(c) for c in obj.coeffs]
