"""Multivariate evidence: Gaussian fuzzy vectors and their random version.

GRFV(mu, Sigma, H) carries a Gaussian random mode vector and a precision
matrix.  Combination, marginalization and vacuous extension all have
closed forms; noninteractive (diagonal) vectors factor into independent
one-dimensional pieces.
"""

import numpy as np

from erfs.fuzzy import GFV, product
from erfs.grfn import GRFN
from erfs.grfn import combine as combine_1d
from erfs.grfv import GRFV, combine

np.set_printoptions(precision=4, suppress=True)

print("== Gaussian fuzzy vectors multiply like their scalar cousins ==")
r = product(GFV([0.0, 0.0], np.eye(2)), GFV([1.0, 0.0], np.eye(2)))
print("  product mode:", r.product.mode, " precision:\n", r.product.precision)
print("  height:", f"{r.height:.6f}")

print("\n== combining two-dimensional evidence ==")
g = GRFV([0.0, 0.0], np.eye(2), np.eye(2))
f = combine(g, g)
print("  combined mu:", f.combined.mu)
print("  combined Sigma:\n", f.combined.Sigma)
print("  combined H:\n", f.combined.H)
print("  kappa:", f.kappa)

print("\n== diagonal vectors = independent coordinates ==")
d1 = [(0.5, 1.0, 2.0), (-1.0, 3.0, 0.4)]
d2 = [(0.0, 2.0, 1.0), (1.0, 0.5, 1.5)]
g1 = GRFV([t[0] for t in d1], np.diag([t[1] for t in d1]), np.diag([t[2] for t in d1]))
g2 = GRFV([t[0] for t in d2], np.diag([t[1] for t in d2]), np.diag([t[2] for t in d2]))
fv = combine(g1, g2)
print("  joint combination mu:   ", fv.combined.mu)
per = [combine_1d(GRFN(*a), GRFN(*b)).combined.mu for a, b in zip(d1, d2)]
print("  coordinate-wise result: ", np.array(per))
print("  noninteractive?", g1.is_noninteractive())

print("\n== marginalization uses a Schur complement ==")
g = GRFV([1.0, 2.0], np.eye(2), np.array([[2.0, 1.0], [1.0, 2.0]]))
m = g.marginalize(1)
print("  keep first coordinate: mu", m.mu, " Sigma", m.Sigma.ravel(), " H", m.H.ravel())

print("\n== vacuous extension adds coordinates without adding claims ==")
ext = GRFV([1.0], [[1.0]], [[2.0]]).vacuous_extend(1)
print("  mu:", ext.mu)
print("  Sigma:\n", ext.Sigma)
print("  H (zero block = no constraint on the new coordinate):\n", ext.H)
back = ext.marginalize(1)
print("  marginalizing back recovers:", back.mu, back.Sigma.ravel(), back.H.ravel())
