"""Epistemic random fuzzy sets.

Gaussian fuzzy numbers and vectors, Gaussian random fuzzy numbers and
vectors, generalized product-intersection combination with degrees of
conflict, likelihood-based evidence, and a Monte-Carlo random-set oracle
validating every closed form.
"""

from . import fuzzy, grfn, grfv, inference, randomset
from .errors import (
    ContradictoryEvidence,
    DomainError,
    ErfsError,
    NotPositiveDefinite,
    PracticalRejection,
    SingularBlock,
)
from .fuzzy import GFN, GFV, ProductResult
from .grfn import GRFN, GrfnFusion, GrfnKind
from .grfv import GRFV, GrfvFusion
from .interval import Interval, WHOLE_LINE
from .randomset import MCConfig, MCEstimate

__version__ = "0.1.0"

__all__ = [
    "GFN",
    "GFV",
    "GRFN",
    "GRFV",
    "GrfnFusion",
    "GrfnKind",
    "GrfvFusion",
    "Interval",
    "MCConfig",
    "MCEstimate",
    "ProductResult",
    "WHOLE_LINE",
    "ErfsError",
    "DomainError",
    "ContradictoryEvidence",
    "NotPositiveDefinite",
    "SingularBlock",
    "PracticalRejection",
    "fuzzy",
    "grfn",
    "grfv",
    "inference",
    "randomset",
]
