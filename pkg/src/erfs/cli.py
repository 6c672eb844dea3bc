"""Command-line front end.

Evidence documents are JSON objects with a ``type`` discriminator
(``gfn``, ``gfv``, ``grfn``, ``grfv``, ``triangular-gaussian``) whose
remaining fields follow the owning module's schema.  Documents are read
from files or stdin (``-``); results go to stdout as JSON for point
queries and as plain CSV ('.' decimal, no locale) for grids.

Grids are written ``start:stop:step``; the stop value is included when it
falls on the grid (within half a step).  ``ERFS_SEED`` overrides
``--seed`` for the Monte-Carlo commands.

Exit codes: 0 success, 1 fully conflicting evidence, 2 argument or
validation errors, 3 Monte-Carlo cross-check failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import fuzzy, grfn, grfv, randomset
from .errors import ContradictoryEvidence, ErfsError
from .fuzzy import GFN, GFV
from .grfn import GRFN
from .grfv import GRFV
from .interval import Interval


@dataclass(frozen=True)
class TriangularGaussian:
    """Triangular fuzzy number with Gaussian random mode (closed-form model)."""

    mu: float
    sigma: float
    a: float

    def to_dict(self) -> dict:
        return {"mu": self.mu, "sigma": self.sigma, "a": self.a}


_TYPES = ("gfn", "gfv", "grfn", "grfv", "triangular-gaussian")


def parse_document(d: dict):
    if not isinstance(d, dict):
        raise ErfsError("document must be a JSON object")
    kind = d.get("type")
    if kind is None:
        raise ErfsError("missing field 'type'")
    if kind == "gfn":
        return GFN.from_dict(d)
    if kind == "gfv":
        return GFV.from_dict(d)
    if kind == "grfn":
        return GRFN.from_dict(d)
    if kind == "grfv":
        return GRFV.from_dict(d)
    if kind == "triangular-gaussian":
        for field in ("mu", "sigma", "a"):
            if field not in d:
                raise ErfsError(f"missing field '{field}'")
        return TriangularGaussian(float(d["mu"]), float(d["sigma"]), float(d["a"]))
    raise ErfsError(f"field 'type' must be one of {_TYPES}, got '{kind}'")


def document_to_dict(obj) -> dict:
    if isinstance(obj, GFN):
        return {"type": "gfn", **obj.to_dict()}
    if isinstance(obj, GFV):
        return {"type": "gfv", **obj.to_dict()}
    if isinstance(obj, GRFN):
        return {"type": "grfn", **obj.to_dict()}
    if isinstance(obj, GRFV):
        return {"type": "grfv", **obj.to_dict()}
    if isinstance(obj, TriangularGaussian):
        return {"type": "triangular-gaussian", **obj.to_dict()}
    raise ErfsError(f"cannot serialize object of type {type(obj).__name__}")


def load_document(path: str):
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ErfsError(f"cannot read document '{path}': {exc}") from exc
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ErfsError(f"document '{path}' is not valid JSON: {exc}") from exc
    return parse_document(payload)


def _inline_document(args):
    if args.type is None:
        return None
    d = {"type": args.type}
    for field in ("mode", "precision", "mu", "sigma2", "sigma", "h", "a"):
        v = getattr(args, field, None)
        if v is not None:
            d[field] = math.inf if v == "inf" else float(v)
    if "h" in d and math.isinf(d["h"]):
        d["h"] = "inf"
    if "precision" in d and isinstance(d["precision"], float) and math.isinf(d["precision"]):
        d["precision"] = "inf"
    return parse_document(d)


def _resolve_document(args):
    doc = _inline_document(args)
    if doc is not None:
        if getattr(args, "document", None):
            raise ErfsError("give either a document file or --type parameters, not both")
        return doc
    if not getattr(args, "document", None):
        raise ErfsError("missing evidence document (file argument or --type ...)")
    return load_document(args.document)


def parse_grid(text: str) -> np.ndarray:
    parts = text.split(":")
    if len(parts) != 3:
        raise ErfsError(f"field 'grid' must be start:stop:step, got '{text}'")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as exc:
        raise ErfsError(f"field 'grid' has non-numeric parts: '{text}'") from exc
    if step <= 0.0 or stop < start:
        raise ErfsError("field 'grid' requires start <= stop and step > 0")
    return np.arange(start, stop + 0.5 * step, step)


def _mc_config(args) -> randomset.MCConfig:
    seed = args.seed
    env = os.environ.get("ERFS_SEED")
    if env is not None:
        try:
            seed = int(env)
        except ValueError as exc:
            raise ErfsError(f"ERFS_SEED must be an integer, got '{env}'") from exc
    return randomset.MCConfig(seed=seed, samples=args.samples, workers=args.workers)


def _print_json(obj) -> None:
    print(json.dumps(obj))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_eval(args) -> int:
    doc = _resolve_document(args)
    xs = _points(args)
    for x in xs:
        if isinstance(doc, GFN):
            v = doc.membership(float(x))
        elif isinstance(doc, GRFN):
            v = doc.contour(float(x))
        elif isinstance(doc, TriangularGaussian):
            v = randomset.triangular_gaussian_contour(doc.mu, doc.sigma, doc.a, float(x))
        elif isinstance(doc, GFV):
            v = doc.membership(_vector(x, doc.dim))
        else:
            v = doc.contour(_vector(x, doc.dim))
        label = x if isinstance(x, str) else f"{float(x):.12g}"
        print(f"{label},{v:.12g}")
    return 0


def _points(args):
    if args.grid is not None:
        if args.at:
            raise ErfsError("give either --at or --grid, not both")
        return list(parse_grid(args.grid))
    if not args.at:
        raise ErfsError("missing query points: use --at or --grid")
    return args.at


def _vector(text, dim: int) -> np.ndarray:
    try:
        v = np.array([float(p) for p in str(text).split(",")])
    except ValueError as exc:
        raise ErfsError(f"point '{text}' is not a comma-separated vector") from exc
    if v.shape[0] != dim:
        raise ErfsError(f"point '{text}' has dim {v.shape[0]}, document has dim {dim}")
    return v


def _lift_grfn(doc):
    if isinstance(doc, GFN):
        return GRFN(doc.mode, 0.0, doc.precision)
    return doc


def _combine_pair(a, b):
    """Combine two documents; returns (combined document, kappa)."""
    if isinstance(a, GFN) and isinstance(b, GFN):
        r = fuzzy.product(a, b)
        return r.product, 1.0 - r.height
    if isinstance(a, (GFN, GRFN)) and isinstance(b, (GFN, GRFN)):
        f = grfn.combine(_lift_grfn(a), _lift_grfn(b))
        return f.combined, f.kappa
    if isinstance(a, GFV) and isinstance(b, GFV):
        r = fuzzy.product(a, b)
        return r.product, 1.0 - r.height
    if isinstance(a, GRFV) and isinstance(b, GRFV):
        f = grfv.combine(a, b)
        return f.combined, f.kappa
    raise ErfsError(
        f"cannot combine documents of types "
        f"'{type(a).__name__}' and '{type(b).__name__}'"
    )


def _cmd_combine(args) -> int:
    docs = [load_document(p) for p in args.documents]
    if len(docs) < 2:
        raise ErfsError("combine needs at least two documents")
    acc = docs[0]
    for i, doc in enumerate(docs[1:], start=1):
        acc, kappa = _combine_pair(acc, doc)
        print(f"step {i}: kappa={kappa:.12g}")
    _print_json(document_to_dict(acc))
    return 0


def _cmd_belpl(args) -> int:
    doc = _resolve_document(args)
    b = Interval(args.lo, args.hi)
    if isinstance(doc, GFN):
        pi, n = fuzzy.possibility_necessity(doc, b)
        _print_json({"bel": n, "pl": pi})
    elif isinstance(doc, GRFN):
        bel, pl = doc.bel_pl(b)
        _print_json({"bel": bel, "pl": pl})
    else:
        raise ErfsError(
            f"no closed-form interval query for type '{type(doc).__name__}'; "
            "vector set queries are Monte-Carlo only"
        )
    return 0


def _as_cdf_provider(doc):
    if isinstance(doc, GFN):
        doc = _lift_grfn(doc)
    if isinstance(doc, GRFN):
        return lambda y: doc.cdf_bounds(y)
    if isinstance(doc, TriangularGaussian):
        return lambda y: randomset.triangular_gaussian_cdf_bounds(doc.mu, doc.sigma, doc.a, y)
    raise ErfsError(f"no closed-form cdf for type '{type(doc).__name__}'")


def _cmd_cdf(args) -> int:
    doc = _resolve_document(args)
    bounds = _as_cdf_provider(doc)
    if args.grid is not None:
        xs = parse_grid(args.grid)
        lower, upper = bounds(xs)
        print("x,lower,upper")
        for x, lo, up in zip(xs, np.atleast_1d(lower), np.atleast_1d(upper)):
            print(f"{x:.12g},{lo:.12g},{up:.12g}")
    else:
        if args.at is None:
            raise ErfsError("missing query point: use --at or --grid")
        lower, upper = bounds(float(args.at))
        _print_json({"y": float(args.at), "lower": lower, "upper": upper})
    return 0


def _cmd_expect(args) -> int:
    doc = _resolve_document(args)
    if isinstance(doc, GFN):
        doc = _lift_grfn(doc)
    if isinstance(doc, GRFN):
        lo, hi = doc.expectation_bounds()
    elif isinstance(doc, TriangularGaussian):
        lo, hi = randomset.triangular_gaussian_expectation_bounds(doc.mu, doc.a)
    else:
        raise ErfsError(f"no closed-form expectations for type '{type(doc).__name__}'")
    _print_json({"lower": lo, "upper": hi})
    return 0


def _cmd_conflict(args) -> int:
    a = load_document(args.doc1)
    b = load_document(args.doc2)
    _, kappa = _combine_pair(a, b)
    _print_json({"kappa": kappa})
    return 0


def _cmd_mc_check(args) -> int:
    cfg = _mc_config(args)
    checks = randomset.oracle_suite(cfg)
    failures = 0
    for name, reference, estimate in checks:
        ok = estimate.within(reference)
        failures += 0 if ok else 1
        status = "PASS" if ok else "FAIL"
        print(
            f"{status} {name}: closed={reference:.6g} "
            f"mc={estimate.value:.6g} stderr={estimate.stderr:.2g}"
        )
    print(f"{len(checks) - failures}/{len(checks)} checks passed (3-stderr bands)")
    return 0 if failures == 0 else 3


def _cmd_plotdata(args) -> int:
    if args.example3:
        if args.mu is None or args.sigma is None or args.a is None:
            raise ErfsError("--example3 requires --mu, --sigma and --a")
        doc = TriangularGaussian(args.mu, args.sigma, args.a)
    else:
        doc = _resolve_document(args)
    if args.grid is None:
        raise ErfsError("missing --grid for plotdata")
    xs = parse_grid(args.grid)
    bounds = _as_cdf_provider(doc)
    lower, upper = bounds(xs)
    if isinstance(doc, TriangularGaussian):
        contour = randomset.triangular_gaussian_contour(doc.mu, doc.sigma, doc.a, xs)
    elif isinstance(doc, GFN):
        contour = doc.membership(xs)
    else:
        contour = doc.contour(xs)
    print("x,lower,upper,contour")
    for x, lo, up, c in zip(xs, np.atleast_1d(lower), np.atleast_1d(upper), np.atleast_1d(contour)):
        print(f"{x:.12g},{lo:.12g},{up:.12g},{c:.12g}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def _add_document_args(p: argparse.ArgumentParser, positional: bool = True):
    if positional:
        p.add_argument("document", nargs="?", help="evidence document file or '-' for stdin")
    p.add_argument("--type", choices=_TYPES, help="inline document type")
    p.add_argument("--mode", type=float, help="gfn mode")
    p.add_argument("--precision", help="gfn precision (number or 'inf')")
    p.add_argument("--mu", type=float, help="grfn/triangular location")
    p.add_argument("--sigma2", type=float, help="grfn mode variance")
    p.add_argument("--sigma", type=float, help="triangular mode standard deviation")
    p.add_argument("--h", help="grfn precision (number or 'inf')")
    p.add_argument("--a", type=float, help="triangular half-width")


def _add_mc_args(p: argparse.ArgumentParser, samples: int):
    p.add_argument("--seed", type=int, default=42, help="RNG seed (ERFS_SEED overrides)")
    p.add_argument("--samples", type=int, default=samples, help="Monte-Carlo sample count")
    p.add_argument("--workers", type=int, default=1, help="worker threads")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="erfs",
        description="Evidence algebra for Gaussian random fuzzy numbers and vectors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="contour/membership at points")
    _add_document_args(p)
    p.add_argument("--at", action="append", help="query point (repeatable; vectors as x1,x2)")
    p.add_argument("--grid", help="grid start:stop:step")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("combine", help="fuse evidence documents")
    p.add_argument("documents", nargs="+", help="two or more document files")
    p.set_defaults(fn=_cmd_combine)

    p = sub.add_parser("belpl", help="belief/plausibility of an interval")
    _add_document_args(p)
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.set_defaults(fn=_cmd_belpl)

    p = sub.add_parser("cdf", help="lower/upper cdf at a point or grid")
    _add_document_args(p)
    p.add_argument("--at", help="query point")
    p.add_argument("--grid", help="grid start:stop:step")
    p.set_defaults(fn=_cmd_cdf)

    p = sub.add_parser("expect", help="expectation bounds")
    _add_document_args(p)
    p.set_defaults(fn=_cmd_expect)

    p = sub.add_parser("conflict", help="degree of conflict between two documents")
    p.add_argument("doc1")
    p.add_argument("doc2")
    p.set_defaults(fn=_cmd_conflict)

    p = sub.add_parser("mc-check", help="closed forms vs Monte-Carlo oracle")
    _add_mc_args(p, samples=200_000)
    p.set_defaults(fn=_cmd_mc_check)

    p = sub.add_parser("plotdata", help="CSV curve data over a grid")
    _add_document_args(p)
    p.add_argument("--example3", action="store_true",
                   help="triangular-with-Gaussian-mode closed forms")
    p.add_argument("--grid", help="grid start:stop:step")
    p.set_defaults(fn=_cmd_plotdata)

    return parser


def _merge_dash_values(argv):
    """Join ``--grid -4:4:0.01`` style pairs so argparse does not read the
    value (which starts with '-') as an option string."""
    merged = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok in ("--grid", "--at") and i + 1 < len(argv) and argv[i + 1].startswith("-") \
                and argv[i + 1] != "-":
            merged.append(f"{tok}={argv[i + 1]}")
            skip = True
        else:
            merged.append(tok)
    return merged


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_merge_dash_values(list(argv)))
    try:
        return args.fn(args)
    except ContradictoryEvidence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ErfsError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
