"""Exact computations in the group algebra of a free group over Q."""
from .algebra import Element, classify, format_element
from .commute import analyze, centralizer_basis, commutes
from .errors import DomainError
from .grading import NEG_INF, Weighting, decompose, degree, leading
from .hull import construct_weighting
from .parsing import parse_element, parse_word_expr
from .series import bi_order_compare, embed
from .subgroup import fold
from .tsets import TParams, factorize3, membership, middle_split
from .words import Word, format_word, parse_word, primitive_root

__all__ = [
    "Element", "classify", "format_element",
    "analyze", "centralizer_basis", "commutes",
    "DomainError",
    "NEG_INF", "Weighting", "decompose", "degree", "leading",
    "construct_weighting",
    "parse_element", "parse_word_expr",
    "bi_order_compare", "embed",
    "fold",
    "TParams", "factorize3", "membership", "middle_split",
    "Word", "format_word", "parse_word", "primitive_root",
]
