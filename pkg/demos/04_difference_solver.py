"""Difference maps: brute-force orbits against the umbral closed form.

For y_{n+1} = g(y_n) the forward closed form
x + sum_k A_k(g - x)(x) C(n, k) terminates at integer n.  It
reproduces affine maps exactly for every n and preserves every
polynomial fixed point; the demo also shows, on the logistic map, that
for nonlinear maps the closed form and the orbit part ways from n = 2
on: iteration composes the map with itself, while the closed form
solves the flow equation in the umbral phase space, and the two
operations no longer commute once g is nonlinear.
"""

from fractions import Fraction

from deltadyn import (
    iterate,
    iterate_table,
    solve_forward,
    solve_logistic,
    solve_quadratic_map,
    XSeries,
)
from deltadyn.scalars import GaussianRational
from deltadyn.solver import logistic_map, quadratic_map

F = Fraction
X = XSeries.x()

print("== affine maps: exact agreement at every step ==")
table = iterate_table(XSeries((1, 2)), F(1, 3), 8)  # y -> 2y + 1
for n, closed, iterated, equal in table.rows[:5]:
    print("  n=%d closed=%s iterated=%s equal=%s" % (n, closed, iterated, equal))
print("  all 9 rows equal:", table.all_equal)

print()
print("== logistic map mu = 4 from x0 = 1/3 ==")
table = iterate_table(logistic_map(F(4)), F(1, 3), 5)
print("  n | closed form      | orbit")
for n, closed, iterated, equal in table.rows:
    marker = "" if equal else "   <- differ"
    print("  %d | %-16s | %s%s" % (n, closed, iterated, marker))
print("  the first step always matches (Phi(1) = g(x)); afterwards the")
print("  closed form follows the umbral flow equation, not the orbit.")

print()
print("== fixed points are preserved exactly, for every mu ==")
for mu in (F(2), F(5, 2), F(4)):
    fp = (mu - 1) / mu
    vals = [solve_logistic(mu, fp, n) for n in range(6)]
    print("  mu=%s fixed point %s stays: %s" % (mu, fp, all(v == fp for v in vals)))

print()
print("== quadratic map z^2 + 1/2 over Q(i) ==")
z0 = GaussianRational(0)
orbit = iterate(quadratic_map(F(1, 2)), z0, 4)
print("  orbit:", [str(z) for z in orbit])
closed = [solve_quadratic_map(F(1, 2), z0, n) for n in range(5)]
print("  factored closed form:", [str(z) for z in closed])
alpha = GaussianRational(F(1, 2), F(1, 2))
print("  at the complex fixed point alpha = %s the orbit is constant:" % alpha,
      all(solve_quadratic_map(F(1, 2), alpha, n) == alpha for n in range(6)))

print()
print("== the two closed-form routes always agree with each other ==")
g = logistic_map(F(4))
routes_equal = all(
    solve_logistic(F(4), F(1, 3), n) == solve_forward(g, F(1, 3), n)
    for n in range(9)
)
print("  factored semiflow product == direct binomial form:", routes_equal)
