"""Family expressions: parsing, symbolic evaluation, compilation and generator enumeration."""

from .compile import compile_expr
from .evaluate import canon_expand, evaluate, profile_of
from .expr import (
    Canon,
    DiagSum,
    DisjointUnion,
    Empty,
    FamilyExpr,
    FullSpace,
    OmegaSum,
    Singleton,
    format_expr,
)
from .generators import enumerate_generators
from .parser import parse

__all__ = [
    "Canon",
    "DiagSum",
    "DisjointUnion",
    "Empty",
    "FamilyExpr",
    "FullSpace",
    "OmegaSum",
    "Singleton",
    "canon_expand",
    "compile_expr",
    "enumerate_generators",
    "evaluate",
    "format_expr",
    "parse",
    "profile_of",
]
