"""Statistical evidence as a fuzzy set of likely parameter values.

For an iid unit-variance Gaussian sample the relative likelihood of the
mean is exactly a Gaussian fuzzy number GFN(sample mean, n), and the
prediction of one more draw is the random fuzzy number GRFN(mean, 1, n).
Splitting the sample and combining the pieces gives back the full-sample
evidence: the combination rule and the likelihood agree.
"""

import math

import numpy as np

from erfs.fuzzy import product
from erfs.inference import (
    LogLikelihood,
    Sample,
    gaussian_mean_likelihood_fuzzy,
    gaussian_mean_predictive,
    relative_likelihood_contour,
)

rng = np.random.default_rng(2)
obs = rng.normal(loc=1.0, scale=1.0, size=12)
s = Sample(tuple(obs))

print("== evidence about the mean from", s.n, "observations ==")
g = gaussian_mean_likelihood_fuzzy(s)
print(f"  fuzzy set of likely means: mode {g.mode:.4f}, precision {g.precision:.0f}")
for theta in (0.0, 0.5, 1.0, 1.5):
    print(f"  plausibility of mean = {theta}: {g.membership(theta):.4f}")

print("\n== split-and-combine consistency ==")
left = gaussian_mean_likelihood_fuzzy(Sample(tuple(obs[:5])))
right = gaussian_mean_likelihood_fuzzy(Sample(tuple(obs[5:])))
merged = product(left, right).product
print(f"  full sample : GFN({g.mode:.6f}, {g.precision:.1f})")
print(f"  combined    : GFN({merged.mode:.6f}, {merged.precision:.1f})")

print("\n== predicting the next observation ==")
pred = gaussian_mean_predictive(s)
print(f"  predictive random fuzzy number: {pred}")
lo, hi = pred.expectation_bounds()
print(f"  expectation bounds: [{lo:.4f}, {hi:.4f}]")
print(f"  contour at the sample mean: {pred.contour(s.mean):.4f} "
      f"(= 1/sqrt(1+n) = {1 / math.sqrt(1 + s.n):.4f})")

print("\n== the generic relative-likelihood contour ==")


def loglik(theta):
    return -0.5 * float(np.sum((obs - theta) ** 2))


l = LogLikelihood(loglik, s.mean, loglik(s.mean))
l.probe(np.linspace(-5, 5, 1000))
for theta in (0.5, 1.0, 2.0):
    direct = relative_likelihood_contour(l, theta)
    print(f"  theta={theta}: relative likelihood {direct:.4f}, "
          f"fuzzy membership {g.membership(theta):.4f}")
