from misere.algebra.enumeration import monoid_from_presentation
from misere.algebra.isomorphism import iso_check
from misere.algebra.monoid import BipartiteMonoid, best_first_words, lex_least_preimages
from misere.algebra.presentation import extract_presentation
from misere.algebra.reduction import indistinguishability_classes, is_reduced, reduce_bipartite
from misere.algebra.words import (
    MonoidWord,
    Presentation,
    generator_names,
    parse_word,
    render_word,
)

__all__ = [
    "BipartiteMonoid",
    "MonoidWord",
    "Presentation",
    "best_first_words",
    "extract_presentation",
    "generator_names",
    "indistinguishability_classes",
    "is_reduced",
    "iso_check",
    "lex_least_preimages",
    "monoid_from_presentation",
    "parse_word",
    "render_word",
    "reduce_bipartite",
]
