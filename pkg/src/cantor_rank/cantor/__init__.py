"""Points and clopen sets of Cantor space."""

from .clopen import Clopen, parse_clopen
from .words import UPWord, first_difference, parse_upword, up_canonicalize, up_eq, word_bit

__all__ = [
    "Clopen",
    "UPWord",
    "first_difference",
    "parse_clopen",
    "parse_upword",
    "up_canonicalize",
    "up_eq",
    "word_bit",
]
