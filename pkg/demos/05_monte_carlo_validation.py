"""Every closed form is validated by an independent random-set sampler.

The Monte-Carlo engine never evaluates the formula it checks: belief and
plausibility are frequencies of alpha-cut events, contours are average
realized memberships, conflicts are one minus average pair heights.
Streams are counter-based, so results are bit-identical for any worker
count.
"""

import math

from erfs.grfn import GRFN, combine
from erfs.interval import Interval
from erfs.randomset import (
    GrfnSampler,
    MCConfig,
    mc_bel_pl,
    mc_conflict,
    mc_contour,
    oracle_suite,
    soft_conditioning_sampler,
)

cfg = MCConfig(seed=42, samples=300_000)
g = GRFN(0.3, 1.2, 0.8)
s = GrfnSampler(g)

print("== closed forms vs the sampler ==")
b = Interval(-1.0, 1.0)
bel, pl = mc_bel_pl(s, b, cfg)
cb, cp = g.bel_pl(b)
print(f"  bel[-1,1]: closed {cb:.6f}   sampled {bel.value:.6f} (+- {bel.stderr:.6f})")
print(f"  pl [-1,1]: closed {cp:.6f}   sampled {pl.value:.6f} (+- {pl.stderr:.6f})")
est = mc_contour(s, 0.5, cfg)
print(f"  contour(0.5): closed {g.contour(0.5):.6f}   sampled {est.value:.6f}")

print("\n== the combination rule's parameters, from weighted samples ==")
g1 = g2 = GRFN(0.0, 1.0, 1.0)
f = combine(g1, g2)
soft = soft_conditioning_sampler(g1, g2, cfg)
est = soft.estimates()
print(f"  conditioned variance: closed {f.intermediates.var1:.4f}  sampled {est['var1'].value:.4f}")
print(f"  conditioned corr:     closed {f.intermediates.rho:.4f}  sampled {est['rho'].value:.4f}")
print(f"  1 - kappa:            closed {1 - f.kappa:.4f}  sampled {est['mean_weight'].value:.4f}")
print(f"  effective sample size: {soft.effective_sample_size:,.0f} of {soft.n:,}")
k = mc_conflict(GrfnSampler(g1), GrfnSampler(g2), cfg)
print(f"  kappa by direct pair sampling: {k.value:.4f} (+- {k.stderr:.4f})")

print("\n== determinism across worker counts ==")
c1 = MCConfig(seed=42, samples=200_000, workers=1)
c4 = MCConfig(seed=42, samples=200_000, workers=4)
r1 = mc_contour(s, 0.5, c1)
r4 = mc_contour(s, 0.5, c4)
print(f"  workers=1: {r1.value!r}")
print(f"  workers=4: {r4.value!r}")
print(f"  bit-identical: {r1 == r4}")

print("\n== the full cross-check battery (also: erfs mc-check) ==")
failures = 0
for name, ref, est in oracle_suite(MCConfig(seed=42, samples=100_000)):
    ok = est.within(ref)
    failures += not ok
    print(f"  {'PASS' if ok else 'FAIL'} {name}: closed={ref:.4f} mc={est.value:.4f}")
print(f"  -> {failures} failures")
