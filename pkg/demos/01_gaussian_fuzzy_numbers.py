"""Gaussian fuzzy numbers: membership, products, cuts, possibility.

A Gaussian fuzzy number GFN(m, h) encodes the vague statement "the value
is around m", with precision h controlling how quickly membership decays.
h = 0 says nothing at all; h = +inf pins the value exactly.
"""

import math

import numpy as np

from erfs.fuzzy import GFN, linear_combination, possibility_necessity, product
from erfs.interval import Interval

print("== membership ==")
g = GFN(2.0, 0.5)
for x in (0.0, 1.0, 2.0, 3.0, 4.0):
    print(f"  membership of {x} in 'around 2' (h=0.5): {g.membership(x):.4f}")

print("\n== degenerate precisions ==")
print("  GFN(5, 0)   membership at -100:", GFN(5.0, 0.0).membership(-100.0), "(whole line)")
print("  GFN(5, inf) membership at 4.999:", GFN(5.0, math.inf).membership(4.999), "(crisp point)")

print("\n== normalized product intersection ==")
# two independent vague statements about the same quantity reinforce each other
a, b = GFN(0.0, 0.3), GFN(1.0, 0.5)
r = product(a, b)
print(f"  'around 0' (h=0.3) combined with 'around 1' (h=0.5)")
print(f"  -> mode {r.product.mode:.4f}, precision {r.product.precision:.4f}")
print(f"  height of the raw product (degree of agreement): {r.height:.6f}")

print("\n== alpha-cuts are nested intervals ==")
g = GFN(0.0, 2.0)
for alpha in (0.9, 0.5, math.exp(-1.0), 0.1):
    cut = g.alpha_cut(alpha)
    print(f"  alpha={alpha:.4f}: [{cut.lo:+.4f}, {cut.hi:+.4f}]")

print("\n== possibility and necessity of an interval ==")
g = GFN(0.0, 1.0)
for b in (Interval(-1.0, 1.0), Interval(1.0, 2.0), Interval(-math.inf, math.inf)):
    pi, n = possibility_necessity(g, b)
    print(f"  B = [{b.lo}, {b.hi}]: possibility {pi:.4f}, necessity {n:.4f}")

print("\n== arithmetic by the extension principle ==")
total = linear_combination([(1.0, GFN(1.0, 4.0)), (1.0, GFN(2.0, 4.0))])
print(f"  'around 1' + 'around 2' (both h=4) = mode {total.mode}, precision {total.precision}")
scaled = linear_combination([(2.0, GFN(1.0, 4.0))])
print(f"  2 x 'around 1' (h=4)              = mode {scaled.mode}, precision {scaled.precision}")
