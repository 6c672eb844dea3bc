"""Gaussian random fuzzy numbers.

A Gaussian random fuzzy number ``GRFN(mu, sigma2, h)`` is a Gaussian fuzzy
number with fixed precision ``h`` whose mode is itself Gaussian with mean
``mu`` and variance ``sigma2``.  The three parameters separate location,
probabilistic uncertainty and possibilistic imprecision:

* ``h = 0``       -- vacuous (total ignorance); canonical form ``(0, 1, 0)``
* ``h = +inf``    -- an ordinary Gaussian random variable ``N(mu, sigma2)``
* ``sigma2 = 0``  -- an ordinary Gaussian possibility distribution ``GFN(mu, h)``

All queries (contour, interval belief/plausibility, cdf and expectation
bounds) have closed forms in the standard normal cdf, and two numbers
combine by the generalized product-intersection rule into another GRFN
with an explicit degree of conflict.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from ._normal import Phi, phi_over
from .errors import ContradictoryEvidence, DomainError
from .fuzzy import GFN, effective_pair_precision, _require_extended, _require_number
from .interval import Interval

__all__ = [
    "GRFN",
    "GrfnKind",
    "GrfnFusion",
    "LemmaIntermediates",
    "combine",
    "combine_many",
    "linear_combination",
    "vacuous",
]

# 1 - kappa below this threshold counts as total conflict
_CONFLICT_EPS = 1e-15


class GrfnKind(enum.Enum):
    VACUOUS = "vacuous"
    PROBABILISTIC = "probabilistic"
    POSSIBILISTIC = "possibilistic"
    GENERAL = "general"


@dataclass(frozen=True)
class GRFN:
    mu: float
    sigma2: float
    h: float

    def __post_init__(self):
        mu, s2, h = float(self.mu), float(self.sigma2), float(self.h)
        if not math.isfinite(mu):
            raise DomainError("mu must be finite")
        if not math.isfinite(s2) or s2 < 0.0:
            raise DomainError(f"sigma2 must be a finite nonnegative real, got {s2}")
        if math.isnan(h) or h < 0.0:
            raise DomainError(f"h must be in [0, +inf], got {h}")
        if h == 0.0:
            # every vacuous GRFN is the same object; fix the canonical form
            mu, s2 = 0.0, 1.0
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "sigma2", s2)
        object.__setattr__(self, "h", h)

    @property
    def kind(self) -> GrfnKind:
        if self.h == 0.0:
            return GrfnKind.VACUOUS
        if math.isinf(self.h):
            return GrfnKind.PROBABILISTIC
        if self.sigma2 == 0.0:
            return GrfnKind.POSSIBILISTIC
        return GrfnKind.GENERAL

    @property
    def is_vacuous(self) -> bool:
        return self.h == 0.0

    def contour(self, x):
        """Pointwise plausibility ``pl(x)``.

        ``(1 + h sigma2)^{-1/2} exp(-h (x - mu)^2 / (2 (1 + h sigma2)))``;
        identically 1 for a vacuous number and identically 0 for a random
        variable (except the degenerate point mass, whose contour is the
        indicator of its atom).
        """
        x = np.asarray(x, dtype=float)
        if self.h == 0.0:
            out = np.ones_like(x)
        elif math.isinf(self.h):
            if self.sigma2 > 0.0:
                out = np.zeros_like(x)
            else:
                out = (x == self.mu).astype(float)
        else:
            c = 1.0 + self.h * self.sigma2
            d = x - self.mu
            out = np.exp(-0.5 * self.h * d * d / c) / math.sqrt(c)
        return out if out.ndim else float(out)

    def bel_pl(self, b: Interval) -> tuple[float, float]:
        """Degrees of belief and plausibility of a bounded interval.

        Requires finite endpoints; use :meth:`cdf_bounds` for rays.  Both
        formulas come from conditioning the Gaussian mode on which side of
        the query endpoints it falls: conditional on the mode, the
        endpoint membership averages to the contour value times a Gaussian
        cdf whose mean is shrunk toward the anchoring endpoint,

            m0(t) = (t h sigma2 + mu) / (h sigma2 + 1),
            s0    = sigma / sqrt(1 + h sigma2).

        The zero-variance (possibilistic) case is covered by the same
        expressions through the step-function limit of the normal cdf.
        """
        if not b.is_bounded:
            raise DomainError("bel_pl requires finite endpoints; use cdf_bounds for rays")
        x, y = b.lo, b.hi
        if self.h == 0.0:
            return 0.0, 1.0
        sigma = math.sqrt(self.sigma2)
        if math.isinf(self.h):
            if self.sigma2 == 0.0:
                ind = float(x <= self.mu <= y)
                return ind, ind
            z = float(Phi((y - self.mu) / sigma) - Phi((x - self.mu) / sigma))
            return z, z
        plx = self.contour(x)
        ply = self.contour(y)
        hs2 = self.h * self.sigma2
        inner_den = sigma * math.sqrt(hs2 + 1.0)
        mid = 0.5 * (x + y)

        def inner(t, anchor):
            # Phi((t - m0(anchor)) / s0) without dividing by sigma = 0
            return phi_over(t * (1.0 + hs2) - anchor * hs2 - self.mu, inner_den)

        band = phi_over(y - self.mu, sigma) - phi_over(x - self.mu, sigma)
        bel = band - plx * (inner(mid, x) - inner(x, x)) - ply * (inner(y, y) - inner(mid, y))
        pl = band + plx * inner(x, x) + ply * (1.0 - inner(y, y))
        pl = min(max(pl, 0.0), 1.0)
        bel = min(max(bel, 0.0), pl)
        return bel, pl

    def cdf_bounds(self, y):
        """Lower and upper cdf at ``y`` (elementwise): Bel and Pl of ``(-inf, y]``."""
        y = np.asarray(y, dtype=float)
        if self.h == 0.0:
            lower, upper = np.zeros_like(y), np.ones_like(y)
        elif math.isinf(self.h):
            f = phi_over(y - self.mu, math.sqrt(self.sigma2))
            lower = upper = np.asarray(f, dtype=float)
        else:
            sigma = math.sqrt(self.sigma2)
            ply = np.asarray(self.contour(y), dtype=float)
            f0 = np.asarray(phi_over(y - self.mu, sigma), dtype=float)
            f1 = np.asarray(
                phi_over(y - self.mu, sigma * math.sqrt(self.h * self.sigma2 + 1.0)),
                dtype=float,
            )
            lower = np.maximum(f0 - ply * f1, 0.0)
            upper = np.minimum(f0 + ply * (1.0 - f1), 1.0)
        if lower.ndim:
            return lower, upper
        return float(lower), float(upper)

    def expectation_bounds(self) -> tuple[float, float]:
        """Lower and upper expectations ``mu -+ sqrt(pi / (2h))``; needs ``h > 0``."""
        if self.h == 0.0:
            raise DomainError("expectations of a vacuous number are unbounded")
        if math.isinf(self.h):
            return self.mu, self.mu
        r = math.sqrt(math.pi / (2.0 * self.h))
        return self.mu - r, self.mu + r

    def to_dict(self) -> dict:
        return {
            "mu": self.mu,
            "sigma2": self.sigma2,
            "h": "inf" if math.isinf(self.h) else self.h,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "GRFN":
        return cls(
            _require_number(d, "mu"),
            _require_number(d, "sigma2"),
            _require_extended(d, "h"),
        )


def vacuous() -> GRFN:
    """The canonical vacuous number (total ignorance)."""
    return GRFN(0.0, 1.0, 0.0)


class LemmaIntermediates(NamedTuple):
    """Parameters of the mode pair's soft-conditioned joint Gaussian law."""

    mu1: float
    mu2: float
    var1: float
    var2: float
    rho: float
    hbar: float


@dataclass(frozen=True)
class GrfnFusion:
    combined: GRFN
    kappa: float
    intermediates: LemmaIntermediates

    def to_dict(self) -> dict:
        return {
            "combined": self.combined.to_dict(),
            "kappa": self.kappa,
            "intermediates": self.intermediates._asdict(),
        }


def _intermediates(g1: GRFN, g2: GRFN, hbar: float) -> LemmaIntermediates:
    mu1, v1 = g1.mu, g1.sigma2
    mu2, v2 = g2.mu, g2.sigma2
    s = v1 + v2
    if math.isinf(hbar):
        # both operands probabilistic: conditioning on exact mode agreement
        if s == 0.0:
            return LemmaIntermediates(mu1, mu2, 0.0, 0.0, 0.0, hbar)
        m = (mu1 * v2 + mu2 * v1) / s
        v = v1 * v2 / s
        rho = 1.0 if (v1 > 0.0 and v2 > 0.0) else 0.0
        return LemmaIntermediates(m, m, v, v, rho, hbar)
    denom = 1.0 + hbar * s
    mu1t = (mu1 * (1.0 + hbar * v2) + mu2 * hbar * v1) / denom
    mu2t = (mu2 * (1.0 + hbar * v1) + mu1 * hbar * v2) / denom
    v1t = v1 * (1.0 + hbar * v2) / denom
    v2t = v2 * (1.0 + hbar * v1) / denom
    if v1 > 0.0 and v2 > 0.0:
        rho = hbar * math.sqrt(v1 * v2) / math.sqrt((1.0 + hbar * v1) * (1.0 + hbar * v2))
    else:
        rho = 0.0
    return LemmaIntermediates(mu1t, mu2t, v1t, v2t, rho, hbar)


def log_one_minus_kappa(g1: GRFN, g2: GRFN) -> float:
    """log of the expected height of the pairwise product of the two numbers.

    The double Gaussian integral of the pair height collapses to a single
    Gaussian form in the mode difference ``D ~ N(mu1 - mu2, sigma1^2 +
    sigma2^2)``:

        E[exp(-hbar D^2 / 2)] = (1 + hbar s^2)^{-1/2}
                                exp(-hbar d^2 / (2 (1 + hbar s^2)))

    with ``hbar = h1 h2 / (h1 + h2)``, ``d = mu1 - mu2`` and ``s^2`` the
    variance sum.  Evaluating in log-space keeps distant modes exact.
    """
    hbar = effective_pair_precision(g1.h, g2.h)
    d = g1.mu - g2.mu
    s = g1.sigma2 + g2.sigma2
    if hbar == 0.0:
        return 0.0
    if math.isinf(hbar):
        if s == 0.0:
            return 0.0 if d == 0.0 else -math.inf
        return -math.inf
    c = 1.0 + hbar * s
    return -0.5 * math.log(c) - 0.5 * hbar * d * d / c


def combine(g1: GRFN, g2: GRFN) -> GrfnFusion:
    """Generalized product-intersection combination of two independent GRFNs.

    The combined number has precision ``h1 + h2``; its mode law is the
    precision-weighted mixture of the soft-conditioned pair law (see
    :class:`LemmaIntermediates`).  A vacuous operand is exactly neutral with
    zero conflict.  When both operands are random variables (``h = +inf``)
    the interpretations agree only on a null set, so the reported conflict
    is 1 while the combination itself is the well-defined conditional
    limit: the precision-weighted Gaussian.

    Raises :class:`ContradictoryEvidence` when the evidence is totally
    conflicting (1 - kappa below 1e-15) outside that structural case.
    """
    if g1.is_vacuous and g2.is_vacuous:
        return GrfnFusion(vacuous(), 0.0, _intermediates(g1, g2, 0.0))
    if g1.is_vacuous:
        return GrfnFusion(g2, 0.0, _intermediates(g1, g2, 0.0))
    if g2.is_vacuous:
        return GrfnFusion(g1, 0.0, _intermediates(g1, g2, 0.0))

    h1, h2 = g1.h, g2.h
    hbar = effective_pair_precision(h1, h2)
    inter = _intermediates(g1, g2, hbar)

    if math.isinf(h1) and math.isinf(h2):
        if g1.sigma2 + g2.sigma2 == 0.0:
            if g1.mu != g2.mu:
                raise ContradictoryEvidence(
                    "two distinct deterministic points cannot be combined"
                )
            return GrfnFusion(GRFN(g1.mu, 0.0, math.inf), 0.0, inter)
        combined = GRFN(inter.mu1, inter.var1, math.inf)
        return GrfnFusion(combined, 1.0, inter)

    log1mk = log_one_minus_kappa(g1, g2)
    if log1mk <= math.log(_CONFLICT_EPS):
        raise ContradictoryEvidence(
            f"degree of conflict rounds to 1 (log(1 - kappa) = {log1mk:.3g})"
        )
    kappa = -math.expm1(log1mk)
    kappa = min(max(kappa, 0.0), 1.0)

    if math.isinf(h1):
        combined = GRFN(inter.mu1, inter.var1, math.inf)
    elif math.isinf(h2):
        combined = GRFN(inter.mu2, inter.var2, math.inf)
    else:
        h12 = h1 + h2
        mu12 = (h1 * inter.mu1 + h2 * inter.mu2) / h12
        sd1, sd2 = math.sqrt(inter.var1), math.sqrt(inter.var2)
        var12 = (
            h1 * h1 * inter.var1
            + h2 * h2 * inter.var2
            + 2.0 * inter.rho * h1 * h2 * sd1 * sd2
        ) / (h12 * h12)
        combined = GRFN(mu12, var12, h12)
    return GrfnFusion(combined, kappa, inter)


def combine_many(gs) -> GRFN:
    """Left fold of :func:`combine`; order-independent by associativity."""
    gs = list(gs)
    if not gs:
        raise DomainError("combine_many requires a nonempty list")
    acc = gs[0]
    for g in gs[1:]:
        acc = combine(acc, g).combined
    return acc


def linear_combination(terms) -> GRFN:
    """Linear combination of independent GRFNs with nonzero coefficients.

    Mode means add as ``sum lam_i mu_i``, mode variances as
    ``sum lam_i^2 sigma_i^2``, and the precisions compose like GFN spreads:
    ``h = (sum |lam_i| h_i^{-1/2})^{-2}``.  Every ``h_i`` must be finite
    and positive.
    """
    terms = list(terms)
    if not terms:
        raise DomainError("linear_combination requires a nonempty list of terms")
    mu = 0.0
    var = 0.0
    spread = 0.0
    for lam, g in terms:
        lam = float(lam)
        if lam == 0.0:
            raise DomainError("coefficients must be nonzero")
        if not 0.0 < g.h < math.inf:
            raise DomainError(f"term precision must be in (0, +inf), got {g.h}")
        mu += lam * g.mu
        var += lam * lam * g.sigma2
        spread += abs(lam) / math.sqrt(g.h)
    return GRFN(mu, var, spread ** -2)
