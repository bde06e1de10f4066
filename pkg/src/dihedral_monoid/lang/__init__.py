"""Regular languages of normal words: automata, counting and growth series."""

from .automata import (
    Dfa,
    Nfa,
    StateLimitExceeded,
    all_words_dfa,
    count_sequence,
    count_words,
    determinize,
    dfa_equivalent,
    minimize,
)
from .growth import GrowthSeries, growth_series
from .languages import irreducible_dfa, theorem_language_dfa
from .serialize import dfa_from_dict, dfa_to_dot, dfa_to_json

__all__ = [
    "Dfa",
    "Nfa",
    "GrowthSeries",
    "StateLimitExceeded",
    "all_words_dfa",
    "count_sequence",
    "count_words",
    "determinize",
    "dfa_equivalent",
    "dfa_from_dict",
    "dfa_to_dot",
    "dfa_to_json",
    "growth_series",
    "irreducible_dfa",
    "minimize",
    "theorem_language_dfa",
]
