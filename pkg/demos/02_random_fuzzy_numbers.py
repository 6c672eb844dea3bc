"""Gaussian random fuzzy numbers: fuzzy evidence with a random mode.

GRFN(mu, sigma2, h) is 'around M' where M is itself N(mu, sigma2):
sigma2 carries probabilistic uncertainty, h possibilistic imprecision.
Special cases: h=inf is an ordinary Gaussian variable, sigma2=0 an
ordinary Gaussian possibility distribution, h=0 total ignorance.
"""

import math

import numpy as np

from erfs.grfn import GRFN, vacuous
from erfs.interval import Interval

g = GRFN(0.0, 1.0, 1.0)

print("== the contour function (pointwise plausibility) ==")
for x in (-2.0, -1.0, 0.0, 1.0, 2.0):
    print(f"  pl({x:+.0f}) = {g.contour(x):.6f}")
print(f"  peak value 1/sqrt(1 + h sigma2) = {1 / math.sqrt(2):.6f}")

print("\n== belief and plausibility of intervals ==")
for b in (Interval(-1.0, 1.0), Interval(-2.0, 2.0), Interval(1.0, 3.0)):
    bel, pl = g.bel_pl(b)
    print(f"  B = [{b.lo:+.0f}, {b.hi:+.0f}]: bel {bel:.6f} <= pl {pl:.6f}")

print("\n== lower and upper cdf curves (plot data) ==")
ys = np.linspace(-3.0, 3.0, 13)
lower, upper = g.cdf_bounds(ys)
print("        y     lower     upper")
for y, lo, up in zip(ys, lower, upper):
    print(f"  {y:+7.2f}  {lo:8.6f}  {up:8.6f}")

print("\n== expectation bounds ==")
lo, hi = g.expectation_bounds()
print(f"  GRFN(0, 1, 1):      [{lo:+.6f}, {hi:+.6f}]")
lo, hi = GRFN(0.0, 1.0, math.pi / 2.0).expectation_bounds()
print(f"  GRFN(0, 1, pi/2):   [{lo:+.6f}, {hi:+.6f}]  (exactly [-1, 1])")
lo, hi = GRFN(7.0, 1.0, math.inf).expectation_bounds()
print(f"  Gaussian N(7, 1):   [{lo:+.6f}, {hi:+.6f}]  (a point: the usual mean)")

print("\n== the special cases ==")
print("  vacuous:        ", vacuous(), "-> contour is constant 1:", vacuous().contour(123.0))
rv = GRFN(0.0, 1.0, math.inf)
print("  random variable:", rv, "-> contour is constant 0:", rv.contour(0.0))
poss = GRFN(2.0, 0.0, 3.0)
print("  possibilistic:  ", poss, "-> contour equals the membership of GFN(2, 3)")
