"""Monte-Carlo engine for random (fuzzy) sets.

Every closed form in :mod:`erfs.fuzzy`, :mod:`erfs.grfn` and
:mod:`erfs.grfv` can be checked against an estimator in this module that
never touches the formula under test: belief and plausibility are averages
of alpha-cut events, contours are averages of realized memberships,
conflicts are one minus average pair heights, and the combination rule's
parameters are weighted moments of a soft-conditioned sample.

Randomness contract
-------------------
Streams are counter-based (Philox), keyed by ``(seed, stream-tag,
block-index)`` with a fixed block size.  Workers split work by block and
partial results are reduced in block order, so every estimate is
bit-identical for a fixed ``(seed, samples)`` regardless of the worker
count.  ``alpha`` is drawn uniformly on (0, 1], matching the uniform
mixing measure over cuts that defines belief and plausibility of a random
fuzzy set.
"""

from __future__ import annotations

import math
import zlib
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from ._normal import Phi, phi
from .errors import DomainError, PracticalRejection
from .fuzzy import effective_pair_precision
from .grfn import GRFN
from .interval import Interval

__all__ = [
    "MCConfig",
    "MCEstimate",
    "FuzzySampler",
    "GrfnSampler",
    "TriangularGaussianSampler",
    "GaussianLowerRaySampler",
    "GaussianUpperRaySampler",
    "ConditionalGaussianIntervalSampler",
    "SoftConditioningSample",
    "mc_bel_pl",
    "mc_contour",
    "mc_conflict",
    "mc_expectation_bounds",
    "soft_conditioning_sampler",
    "dempster_gaussian_rays",
    "triangular_gaussian_cdf_bounds",
    "triangular_gaussian_contour",
    "triangular_gaussian_expectation_bounds",
    "oracle_suite",
]

BLOCK_SIZE = 1 << 16


@dataclass(frozen=True)
class MCConfig:
    seed: int = 42
    samples: int = 1_000_000
    workers: int = 1

    def __post_init__(self):
        if not 0 <= int(self.seed) < 2 ** 64:
            raise DomainError("seed must be a 64-bit unsigned integer")
        if self.samples < 1:
            raise DomainError("samples must be >= 1")
        if self.workers < 1:
            raise DomainError("workers must be >= 1")


@dataclass(frozen=True)
class MCEstimate:
    value: float
    stderr: float
    n: int

    def within(self, reference: float, nsigma: float = 3.0) -> bool:
        """True when ``reference`` lies inside the ``nsigma`` band."""
        return abs(self.value - reference) <= nsigma * self.stderr + 1e-12

    def to_dict(self) -> dict:
        return {"value": self.value, "stderr": self.stderr, "n": self.n}


def _block_rng(seed: int, tag: str, block: int) -> np.random.Generator:
    tag_word = (zlib.crc32(tag.encode("utf-8")) << 32) | (block & 0xFFFFFFFF)
    key = np.array([seed, tag_word], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _run_blocks(cfg: MCConfig, tag: str, block_fn):
    """Run ``block_fn(rng, n)`` over all blocks; results in block order."""
    nblocks = (cfg.samples + BLOCK_SIZE - 1) // BLOCK_SIZE
    sizes = [min(BLOCK_SIZE, cfg.samples - i * BLOCK_SIZE) for i in range(nblocks)]
    results = [None] * nblocks

    def work(i: int):
        results[i] = block_fn(_block_rng(cfg.seed, tag, i), sizes[i])

    if cfg.workers == 1 or nblocks == 1:
        for i in range(nblocks):
            work(i)
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            list(pool.map(work, range(nblocks)))
    return results


def _mean_stderr(total: float, total_sq: float, n: int, lo=None, hi=None) -> MCEstimate:
    if lo is not None and lo == hi:
        # constant sample (no randomness): exact value, zero error
        return MCEstimate(lo, 0.0, n)
    mean = total / n
    var = max(total_sq / n - mean * mean, 0.0)
    return MCEstimate(mean, math.sqrt(var / n), n)


def _binomial(count: float, n: int) -> MCEstimate:
    p = count / n
    return MCEstimate(p, math.sqrt(max(p * (1.0 - p), 0.0) / n), n)


class FuzzySampler(ABC):
    """One realized fuzzy number per sample, exposed through its alpha-cuts.

    ``realize`` consumes the per-block stream and returns an opaque state;
    ``cut_bounds`` maps (state, alpha array) to closed-interval endpoints
    (``+-inf`` encode rays and the whole line), and ``membership``
    evaluates the realized membership functions at a point.  Realized cuts
    are nested in alpha by construction.
    """

    @abstractmethod
    def realize(self, rng: np.random.Generator, n: int):
        ...

    @abstractmethod
    def n_realized(self, state) -> int:
        ...

    @abstractmethod
    def cut_bounds(self, state, alphas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        ...

    @abstractmethod
    def membership(self, state, x: float) -> np.ndarray:
        ...


class GrfnSampler(FuzzySampler):
    """Sampler of a GRFN: Gaussian random mode, fixed precision."""

    def __init__(self, g: GRFN):
        self.g = g
        self.gfn_precision = g.h

    def realize(self, rng, n):
        if self.g.sigma2 > 0.0:
            return self.g.mu + math.sqrt(self.g.sigma2) * rng.standard_normal(n)
        return np.full(n, self.g.mu)

    def n_realized(self, state) -> int:
        return state.shape[0]

    def cut_bounds(self, modes, alphas):
        h = self.g.h
        if h == 0.0:
            full = np.full_like(modes, np.inf)
            return -full, full
        if math.isinf(h):
            return modes, modes
        r = np.sqrt(-2.0 * np.log(alphas) / h)
        return modes - r, modes + r

    def membership(self, modes, x):
        h = self.g.h
        if h == 0.0:
            return np.ones_like(modes)
        if math.isinf(h):
            return (modes == x).astype(float)
        d = x - modes
        return np.exp(-0.5 * h * d * d)


class TriangularGaussianSampler(FuzzySampler):
    """Triangular fuzzy number with Gaussian random mode and half-width ``a``."""

    def __init__(self, mu: float, sigma: float, a: float):
        if sigma < 0.0 or a < 0.0:
            raise DomainError("sigma and a must be nonnegative")
        self.mu, self.sigma, self.a = float(mu), float(sigma), float(a)

    def realize(self, rng, n):
        if self.sigma > 0.0:
            return self.mu + self.sigma * rng.standard_normal(n)
        return np.full(n, self.mu)

    def n_realized(self, state) -> int:
        return state.shape[0]

    def cut_bounds(self, modes, alphas):
        half = self.a * (1.0 - alphas)
        return modes - half, modes + half

    def membership(self, modes, x):
        if self.a == 0.0:
            return (modes == x).astype(float)
        return np.clip(1.0 - np.abs(x - modes) / self.a, 0.0, None)


class _IntervalSampler(FuzzySampler):
    """Random closed intervals seen as crisp random fuzzy numbers."""

    is_crisp_interval = True

    def n_realized(self, state) -> int:
        return state[0].shape[0]

    def cut_bounds(self, state, alphas):
        return state

    def membership(self, state, x):
        lo, hi = state
        return ((lo <= x) & (x <= hi)).astype(float)


class GaussianLowerRaySampler(_IntervalSampler):
    """Random ray ``[X, +inf)`` with Gaussian ``X``."""

    def __init__(self, mu: float, sigma: float):
        self.mu, self.sigma = float(mu), float(sigma)

    def realize(self, rng, n):
        x = self.mu + self.sigma * rng.standard_normal(n)
        return x, np.full(n, np.inf)


class GaussianUpperRaySampler(_IntervalSampler):
    """Random ray ``(-inf, X]`` with Gaussian ``X``."""

    def __init__(self, mu: float, sigma: float):
        self.mu, self.sigma = float(mu), float(sigma)

    def realize(self, rng, n):
        x = self.mu + self.sigma * rng.standard_normal(n)
        return np.full(n, -np.inf), x


class ConditionalGaussianIntervalSampler(_IntervalSampler):
    """``[X1, X2]`` under two independent Gaussians conditioned on ``X1 <= X2``.

    Realized by rejection: a block of proposal pairs keeps the ordered
    ones, so the number of realized intervals per block is random but
    reproducible for a fixed stream.
    """

    def __init__(self, mu1, sigma1, mu2, sigma2):
        self.mu1, self.sigma1 = float(mu1), float(sigma1)
        self.mu2, self.sigma2 = float(mu2), float(sigma2)

    def realize(self, rng, n):
        x1 = self.mu1 + self.sigma1 * rng.standard_normal(n)
        x2 = self.mu2 + self.sigma2 * rng.standard_normal(n)
        keep = x1 <= x2
        return x1[keep], x2[keep]

    def rejection_rate(self, cfg: MCConfig) -> MCEstimate:
        def block(rng, n):
            lo, _ = self.realize(rng, n)
            return n - lo.shape[0], n

        parts = _run_blocks(cfg, "rays-rejection", block)
        rejected = sum(p[0] for p in parts)
        total = sum(p[1] for p in parts)
        return _binomial(rejected, total)


def _draw_alphas(rng: np.random.Generator, n: int) -> np.ndarray:
    # uniform on (0, 1]: the cut at alpha = 0 is not a focal set
    return 1.0 - rng.random(n)


def mc_bel_pl(sampler: FuzzySampler, b: Interval, cfg: MCConfig) -> tuple[MCEstimate, MCEstimate]:
    """Belief and plausibility of ``b`` by alpha-cut sampling.

    Each draw is a pair (realized fuzzy number, alpha); the cut counts
    toward belief when contained in ``b`` and toward plausibility when it
    meets ``b``.  The same sample serves both indicators, so the estimated
    belief never exceeds the estimated plausibility.
    """

    def block(rng, n):
        state = sampler.realize(rng, n)
        m = sampler.n_realized(state)
        alphas = _draw_alphas(rng, m)
        lo, hi = sampler.cut_bounds(state, alphas)
        bel = np.count_nonzero((lo >= b.lo) & (hi <= b.hi))
        pl = np.count_nonzero((lo <= b.hi) & (hi >= b.lo))
        return bel, pl, m

    parts = _run_blocks(cfg, "bel-pl", block)
    bel = sum(p[0] for p in parts)
    pl = sum(p[1] for p in parts)
    n = sum(p[2] for p in parts)
    return _binomial(bel, n), _binomial(pl, n)


def mc_contour(sampler: FuzzySampler, x: float, cfg: MCConfig) -> MCEstimate:
    """Pointwise plausibility: mean realized membership at ``x``."""

    def block(rng, n):
        state = sampler.realize(rng, n)
        m = sampler.membership(state, x)
        return float(np.sum(m)), float(np.sum(m * m)), m.shape[0], float(np.min(m)), float(np.max(m))

    parts = _run_blocks(cfg, "contour", block)
    total = sum(p[0] for p in parts)
    total_sq = sum(p[1] for p in parts)
    n = sum(p[2] for p in parts)
    return _mean_stderr(total, total_sq, n, min(p[3] for p in parts), max(p[4] for p in parts))


def mc_expectation_bounds(sampler: FuzzySampler, cfg: MCConfig) -> tuple[MCEstimate, MCEstimate]:
    """Lower/upper expectations: means of sampled alpha-cut endpoints."""

    def block(rng, n):
        state = sampler.realize(rng, n)
        m = sampler.n_realized(state)
        alphas = _draw_alphas(rng, m)
        lo, hi = sampler.cut_bounds(state, alphas)
        unbounded = not (np.all(np.isfinite(lo)) and np.all(np.isfinite(hi)))
        if unbounded:
            return None
        return (
            float(np.sum(lo)), float(np.sum(lo * lo)),
            float(np.sum(hi)), float(np.sum(hi * hi)), m,
            float(np.min(lo)), float(np.max(lo)), float(np.min(hi)), float(np.max(hi)),
        )

    parts = _run_blocks(cfg, "expectation", block)
    if any(p is None for p in parts):
        raise DomainError("a realized alpha-cut is unbounded; expectations undefined")
    n = sum(p[4] for p in parts)
    e_low = _mean_stderr(
        sum(p[0] for p in parts), sum(p[1] for p in parts), n,
        min(p[5] for p in parts), max(p[6] for p in parts),
    )
    e_high = _mean_stderr(
        sum(p[2] for p in parts), sum(p[3] for p in parts), n,
        min(p[7] for p in parts), max(p[8] for p in parts),
    )
    return e_low, e_high


def _pair_heights(s1, s2, st1, st2) -> np.ndarray:
    if hasattr(s1, "gfn_precision") and hasattr(s2, "gfn_precision"):
        hbar = effective_pair_precision(s1.gfn_precision, s2.gfn_precision)
        d = st1 - st2
        if hbar == 0.0:
            return np.ones_like(d)
        if math.isinf(hbar):
            return (d == 0.0).astype(float)
        return np.exp(-0.5 * hbar * d * d)
    if getattr(s1, "is_crisp_interval", False) and getattr(s2, "is_crisp_interval", False):
        lo1, hi1 = st1
        lo2, hi2 = st2
        return ((lo1 <= hi2) & (lo2 <= hi1)).astype(float)
    raise DomainError(
        "no closed-form pair height for these samplers; pass height= explicitly"
    )


def mc_conflict(s1: FuzzySampler, s2: FuzzySampler, cfg: MCConfig, height=None) -> MCEstimate:
    """Degree of conflict: one minus the mean height of independent pair products."""

    def block(rng, n):
        st1 = s1.realize(rng, n)
        st2 = s2.realize(rng, n)
        w = height(st1, st2) if height is not None else _pair_heights(s1, s2, st1, st2)
        return float(np.sum(w)), float(np.sum(w * w)), w.shape[0], float(np.min(w)), float(np.max(w))

    parts = _run_blocks(cfg, "conflict", block)
    consistency = _mean_stderr(
        sum(p[0] for p in parts), sum(p[1] for p in parts), sum(p[2] for p in parts),
        min(p[3] for p in parts), max(p[4] for p in parts),
    )
    return MCEstimate(1.0 - consistency.value, consistency.stderr, consistency.n)


@dataclass(frozen=True)
class SoftConditioningSample:
    """Weighted sample of a mode pair, weights = pairwise product heights.

    Weighted moments estimate the soft-conditioned joint mode law that
    drives the combination rule; the mean weight estimates one minus the
    degree of conflict.  Standard errors use the ratio-estimator
    linearization, with the Fisher approximation for the correlation.
    """

    m1: np.ndarray
    m2: np.ndarray
    weights: np.ndarray

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def effective_sample_size(self) -> float:
        s = float(np.sum(self.weights))
        s2 = float(np.sum(self.weights ** 2))
        return s * s / s2 if s2 > 0.0 else 0.0

    def mean_weight(self) -> MCEstimate:
        w = self.weights
        return _mean_stderr(float(np.sum(w)), float(np.sum(w * w)), self.n)

    def _weighted_mean(self, x: np.ndarray) -> MCEstimate:
        w = self.weights
        sw = float(np.sum(w))
        mean = float(np.sum(w * x)) / sw
        se = math.sqrt(float(np.sum((w * (x - mean)) ** 2))) / sw
        return MCEstimate(mean, se, self.n)

    def _weighted_var(self, x: np.ndarray) -> MCEstimate:
        w = self.weights
        sw = float(np.sum(w))
        mean = float(np.sum(w * x)) / sw
        z = (x - mean) ** 2
        v = float(np.sum(w * z)) / sw
        se = math.sqrt(float(np.sum((w * (z - v)) ** 2))) / sw
        return MCEstimate(v, se, self.n)

    def estimates(self) -> dict[str, MCEstimate]:
        w = self.weights
        sw = float(np.sum(w))
        out = {
            "mu1": self._weighted_mean(self.m1),
            "mu2": self._weighted_mean(self.m2),
            "var1": self._weighted_var(self.m1),
            "var2": self._weighted_var(self.m2),
            "mean_weight": self.mean_weight(),
        }
        c1 = self.m1 - out["mu1"].value
        c2 = self.m2 - out["mu2"].value
        cov = float(np.sum(w * c1 * c2)) / sw
        denom = math.sqrt(out["var1"].value * out["var2"].value)
        rho = cov / denom if denom > 0.0 else 0.0
        ess = self.effective_sample_size
        rho_se = (1.0 - rho * rho) / math.sqrt(ess) if ess > 0.0 else math.inf
        out["rho"] = MCEstimate(rho, rho_se, self.n)
        return out


def soft_conditioning_sampler(g1: GRFN, g2: GRFN, cfg: MCConfig) -> SoftConditioningSample:
    """Importance-weighted oracle for the combination rule's mode law.

    Draws mode pairs from the unconditioned product law and attaches the
    pair height as weight.  Heights lie in (0, 1], so weighting is unbiased
    and strictly more efficient than rejection here; rejection is reserved
    for hard (crisp) conditioning.
    """
    if not (0.0 < g1.h < math.inf and 0.0 < g2.h < math.inf):
        raise DomainError("soft conditioning requires finite positive precisions")
    hbar = effective_pair_precision(g1.h, g2.h)
    sd1, sd2 = math.sqrt(g1.sigma2), math.sqrt(g2.sigma2)

    def block(rng, n):
        m1 = g1.mu + sd1 * rng.standard_normal(n)
        m2 = g2.mu + sd2 * rng.standard_normal(n)
        d = m1 - m2
        return m1, m2, np.exp(-0.5 * hbar * d * d)

    parts = _run_blocks(cfg, "soft-conditioning", block)
    return SoftConditioningSample(
        np.concatenate([p[0] for p in parts]),
        np.concatenate([p[1] for p in parts]),
        np.concatenate([p[2] for p in parts]),
    )


def dempster_gaussian_rays(mu1, sigma1, mu2, sigma2, cfg: MCConfig):
    """Conflict and combined sampler for Gaussian random rays.

    The lower ray ``[X1, +inf)`` and upper ray ``(-inf, X2]`` conflict
    exactly when ``X1 > X2``, so the degree of conflict has the closed form
    ``Phi((mu1 - mu2) / sqrt(sigma1^2 + sigma2^2))``.  The returned sampler
    realizes the combined random interval ``[X1', X2']`` by rejection.
    """
    if sigma1 <= 0.0 or sigma2 <= 0.0:
        raise DomainError("sigma1 and sigma2 must be positive")
    kappa = float(Phi((mu1 - mu2) / math.hypot(sigma1, sigma2)))
    if kappa > 1.0 - 1e-6:
        raise PracticalRejection(
            f"acceptance probability {1.0 - kappa:.2e} too small for rejection sampling"
        )
    return kappa, ConditionalGaussianIntervalSampler(mu1, sigma1, mu2, sigma2)


def triangular_gaussian_cdf_bounds(mu, sigma, a, x):
    """Lower and upper cdf of the triangular random fuzzy number, elementwise.

    Closed forms obtained by integrating the necessity/possibility of
    ``(-inf, x]`` over the Gaussian mode; at ``a = 0`` both collapse to the
    Gaussian cdf.
    """
    if sigma <= 0.0:
        raise DomainError("sigma must be positive")
    if a < 0.0:
        raise DomainError("a must be nonnegative")
    x = np.asarray(x, dtype=float)
    z0 = (x - mu) / sigma
    if a == 0.0:
        out = Phi(z0)
        lower = upper = out if out.ndim else float(out)
        return lower, upper
    z_plus = (x + a - mu) / sigma
    z_minus = (x - a - mu) / sigma
    upper = (
        ((x + a - mu) / a) * Phi(z_plus)
        - ((x - mu) / a) * Phi(z0)
        + (sigma / a) * (phi(z_plus) - phi(z0))
    )
    lower = (
        ((x - mu) / a) * Phi(z0)
        - ((x - a - mu) / a) * Phi(z_minus)
        + (sigma / a) * (phi(z0) - phi(z_minus))
    )
    lower = np.clip(lower, 0.0, 1.0)
    upper = np.clip(upper, 0.0, 1.0)
    if lower.ndim:
        return lower, upper
    return float(lower), float(upper)


def triangular_gaussian_contour(mu, sigma, a, x):
    """Pointwise plausibility of the triangular random fuzzy number."""
    if sigma <= 0.0:
        raise DomainError("sigma must be positive")
    if a < 0.0:
        raise DomainError("a must be nonnegative")
    x = np.asarray(x, dtype=float)
    if a == 0.0:
        out = np.zeros_like(x)
        return out if out.ndim else float(out)
    z_minus = (x - a - mu) / sigma
    z0 = (x - mu) / sigma
    z_plus = (x + a - mu) / sigma
    left = (mu - x + a) * (Phi(z0) - Phi(z_minus)) + sigma * (phi(z_minus) - phi(z0))
    right = (x + a - mu) * (Phi(z_plus) - Phi(z0)) - sigma * (phi(z0) - phi(z_plus))
    out = np.clip((left + right) / a, 0.0, 1.0)
    return out if out.ndim else float(out)


def triangular_gaussian_expectation_bounds(mu, a):
    """Lower and upper expectations ``mu -+ a/2`` of the triangular model."""
    if a < 0.0:
        raise DomainError("a must be nonnegative")
    return mu - 0.5 * a, mu + 0.5 * a


def oracle_suite(cfg: MCConfig):
    """Closed-form-vs-oracle comparisons for the cross-validation command.

    Returns a list of ``(name, reference, estimate)`` triples; a comparison
    passes when the reference lies within three standard errors of the
    estimate.  The battery is fixed, so for a fixed config the outcome is
    reproducible.
    """
    from . import grfn as grfn_mod

    checks: list[tuple[str, float, MCEstimate]] = []

    g = GRFN(0.3, 1.2, 0.8)
    s = GrfnSampler(g)
    for x in (-1.0, 0.3, 1.5):
        checks.append((f"grfn contour x={x}", g.contour(x), mc_contour(s, x, cfg)))
    for b in (Interval(-1.0, 1.0), Interval(0.0, 2.5)):
        bel, pl = g.bel_pl(b)
        mc_bel, mc_pl = mc_bel_pl(s, b, cfg)
        checks.append((f"grfn bel {b.lo}..{b.hi}", bel, mc_bel))
        checks.append((f"grfn pl {b.lo}..{b.hi}", pl, mc_pl))
    lower, upper = g.cdf_bounds(0.7)
    mc_low, mc_up = mc_bel_pl(s, Interval(-math.inf, 0.7), cfg)
    checks.append(("grfn lower cdf y=0.7", lower, mc_low))
    checks.append(("grfn upper cdf y=0.7", upper, mc_up))

    g2 = GRFN(0.0, 1.0, math.pi / 2.0)
    e_low, e_high = g2.expectation_bounds()
    mc_elow, mc_ehigh = mc_expectation_bounds(GrfnSampler(g2), cfg)
    checks.append(("grfn lower expectation", e_low, mc_elow))
    checks.append(("grfn upper expectation", e_high, mc_ehigh))

    ga, gb = GRFN(0.0, 1.0, 1.0), GRFN(0.5, 0.5, 2.0)
    fusion = grfn_mod.combine(ga, gb)
    checks.append(
        ("grfn conflict", fusion.kappa, mc_conflict(GrfnSampler(ga), GrfnSampler(gb), cfg))
    )
    soft = soft_conditioning_sampler(ga, gb, cfg).estimates()
    inter = fusion.intermediates
    checks.append(("soft-conditioning mu1", inter.mu1, soft["mu1"]))
    checks.append(("soft-conditioning var1", inter.var1, soft["var1"]))
    checks.append(("soft-conditioning rho", inter.rho, soft["rho"]))
    checks.append(("soft-conditioning 1-kappa", 1.0 - fusion.kappa, soft["mean_weight"]))

    kappa, combined = dempster_gaussian_rays(0.0, 1.0, 1.0, 1.0, cfg)
    checks.append(("gaussian rays conflict", kappa, combined.rejection_rate(cfg)))
    x = 0.6
    pl_closed = float(Phi(x - 0.0) * (1.0 - Phi(x - 1.0)) / (1.0 - kappa))
    checks.append(("gaussian rays combined contour", pl_closed, mc_contour(combined, x, cfg)))

    tri = TriangularGaussianSampler(0.0, 1.0, 1.5)
    for x in (-1.0, 0.0, 1.0):
        bel_c, pl_c = triangular_gaussian_cdf_bounds(0.0, 1.0, 1.5, x)
        mc_bel, mc_pl = mc_bel_pl(tri, Interval(-math.inf, x), cfg)
        checks.append((f"triangular lower cdf x={x}", bel_c, mc_bel))
        checks.append((f"triangular upper cdf x={x}", pl_c, mc_pl))
    e_low, e_high = triangular_gaussian_expectation_bounds(0.0, 1.5)
    mc_elow, mc_ehigh = mc_expectation_bounds(tri, cfg)
    checks.append(("triangular lower expectation", e_low, mc_elow))
    checks.append(("triangular upper expectation", e_high, mc_ehigh))

    return checks
