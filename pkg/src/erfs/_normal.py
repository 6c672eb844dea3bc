"""Standard-normal kernel shared by every closed form in the package.

``Phi`` is evaluated through the complementary error function (absolute
error below 1e-15 over the whole real line), not through a series or a
rational approximation: every belief/plausibility formula in the package
inherits its accuracy from this one function.

``phi_over`` generalizes ``Phi((num) / (den))`` to the degenerate scale
``den == 0``, where the Gaussian cdf collapses to a unit step (with value
1/2 exactly at the jump).  This is what the closed forms of possibilistic
objects (zero mode variance) reduce to, so callers never divide by zero.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtr

SQRT_2PI = float(np.sqrt(2.0 * np.pi))


def Phi(z):
    """Standard normal cdf, elementwise."""
    return ndtr(z)


def phi(z):
    """Standard normal pdf, elementwise."""
    z = np.asarray(z, dtype=float)
    out = np.exp(-0.5 * z * z) / SQRT_2PI
    return out if out.ndim else float(out)


def step(t):
    """Unit step with value 1/2 at 0: the sigma -> 0 limit of Phi(t/sigma)."""
    t = np.asarray(t, dtype=float)
    out = (t > 0).astype(float) + 0.5 * (t == 0)
    return out if out.ndim else float(out)


def phi_over(num, den):
    """``Phi(num / den)`` with the exact step-function limit at ``den == 0``.

    ``den`` must be a nonnegative scalar; ``num`` may be an array.
    """
    if den > 0.0:
        out = ndtr(np.asarray(num, dtype=float) / den)
        return out if np.ndim(out) else float(out)
    return step(num)
