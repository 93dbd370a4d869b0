"""Float validation of the exponential closed forms.

The exact layers prove coefficient identities; here the summed
statements are checked in binary64.  The affine semiflow over an
operator with series p sums to (ax+b)/a (exp(t pinv(a)) - 1), with
pinv(a) = log(1+a), -log(1-a), W(alpha a)/alpha or exp(a)-1 for the
four classical operators.  The Abel case shows its branch-point
radius: the series in a converges only for |alpha a| < 1/e.
"""

import math

from deltadyn import NumericConfig, SeriesDivergence, lambert_w, numeric_closed_form_check

print("== Lambert W by Halley iteration ==")
for x in (0.0, 1.0, math.e, 10.0, -0.3):
    w = lambert_w(x)
    print("  W(%6.3f) = %18.15f   residual %.2e" % (x, w, abs(w * math.exp(w) - x)))

print()
print("== partial sums against the closed forms ==")
for kind in ("forward", "backward", "abel", "touchard"):
    for a, t in ((0.25, 0.5), (0.5, 0.1)):
        try:
            r = numeric_closed_form_check(kind, a, t, alpha=1.0)
            print("  %-8s a=%-5s t=%-4s deviation %.3e" % (kind, a, t, r.deviation))
        except SeriesDivergence as exc:
            print("  %-8s a=%-5s t=%-4s DIVERGES (%s)" % (kind, a, t, exc))

print()
print("== the Abel convergence boundary is |alpha a| = 1/e ~ 0.3679 ==")
for a in (0.25, 0.35, 0.3678, 0.38, 0.5):
    try:
        r = numeric_closed_form_check("abel", a, 0.1, alpha=1.0,
                                      config=NumericConfig(depth=64))
        print("  a=%-7s converges, deviation %.3e" % (a, r.deviation))
    except SeriesDivergence:
        print("  a=%-7s diverges" % a)

print()
print("== the forward sum collapses to the binomial theorem at integer t ==")
r = numeric_closed_form_check("forward", 1.0, 3.0)
print("  a=1, t=3: partial sum %.1f vs (1+1)^3 - 1 = %.1f, deviation %.1e"
      % (r.partial_sum, r.closed_form, r.deviation))
