"""Exact computational engine for the PROP of the Lie operad, its two-term
DG category, and the universal Chevalley-Eilenberg complex."""

from . import catlie, cecomplex, dgcat, exactla, freelie, mudelta, schur_oracle

__all__ = [
    "catlie",
    "cecomplex",
    "dgcat",
    "exactla",
    "freelie",
    "mudelta",
    "schur_oracle",
]

__version__ = "0.1.0"
