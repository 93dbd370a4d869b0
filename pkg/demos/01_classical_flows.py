"""Classical autonomous flows in exact arithmetic.

The flow of phi' = f(phi) with phi(0) = x expands as
x + sum_n A_n(x) t^n/n! where A_1 = f and A_{n+1} = f * A_n'.  This
script builds a few flows, checks the defining differential equation
coefficient by coefficient, and factors a flow into a ring product of
semiflows.
"""

from fractions import Fraction

from deltadyn import (
    XSeries,
    autonomous_sequence,
    aut_add,
    aut_scale,
    classical_flow,
    flow_factorize,
    taylor_compose,
)

X = XSeries.x()

print("== autonomous sequences ==")
for label, f in (("f = x", X), ("f = x^2", X * X), ("f = x(1-x)", X * (1 - X))):
    aut = autonomous_sequence(f, 5)
    print(label.ljust(12), "->", [repr(t) for t in aut.terms])

print()
print("== the flow of f = x^2 is the geometric series x/(1 - x t) ==")
phi = classical_flow(X * X, 8)
for n in range(1, 9):
    print("  coefficient of t^%d:" % n, phi.coefficient(n))

print()
print("== the flow solves d/dt Phi = f(Phi) exactly ==")
f = X * (1 - X)
phi = classical_flow(f, 10)
residual = phi.to_tseries().dt() - taylor_compose(f, phi).truncate(9)
print("  residual for the logistic generator:", "0" if residual.is_zero else residual)

print()
print("== ring structure: scaling and cross terms ==")
ax = autonomous_sequence(X, 6)
print("  A_n(2x) via the sum x (+) x:", [repr(t) for t in aut_add(ax, ax).terms])
print("  A_n(-x) via scaling by -1:  ", [repr(t) for t in aut_scale(-1, ax).terms])

print()
print("== factoring the continuous logistic flow ==")
factored = flow_factorize([X, 1 - X], 8)
direct = classical_flow(X * (1 - X), 8)
print("  factored == direct:", factored.to_tseries() == direct.to_tseries())

print()
print("== evaluating: exponential growth phi' = phi from x = 1/3 ==")
import math

phi = classical_flow(X, 12)
for t in (Fraction(1), Fraction(2)):
    val = phi.evaluate(t, Fraction(1, 3))
    print("  truncated flow at t=%s: %s (~ %.6f, e^%s/3 ~ %.6f)"
          % (t, val, float(val), t, math.exp(t) / 3))
