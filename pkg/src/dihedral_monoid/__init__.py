"""Rewriting, normal forms and normal-word automata for the monoids S_n(H)
of dihedral type.

S_n(H) has generators a_1 .. a_n, and every length-n word a_{s(1)} .. a_{s(n)}
with s in the dihedral group H is equal to z = a_1 .. a_n.
"""

from .oracle import BudgetExceeded, Inconclusive, congruence_class, count_classes, oracle_equal
from .presentation import (
    InvalidK,
    InvalidN,
    InvalidWord,
    Presentation,
    PresentationError,
    group_H,
    new_presentation,
    relation_words,
)
from .rewrite import (
    RuleInstance,
    RuleKind,
    apply_rule,
    decompose,
    find_redexes,
    instantiate,
    is_irreducible,
    normal_form,
    normal_form_random,
    reduce_trace,
)

__version__ = "0.1.0"

MATRIX = ((4, 3), (5, 4), (6, 5), (8, 3), (8, 5), (8, 7))

__all__ = [
    "BudgetExceeded",
    "Inconclusive",
    "InvalidK",
    "InvalidN",
    "InvalidWord",
    "MATRIX",
    "Presentation",
    "PresentationError",
    "RuleInstance",
    "RuleKind",
    "apply_rule",
    "congruence_class",
    "count_classes",
    "decompose",
    "find_redexes",
    "group_H",
    "instantiate",
    "is_irreducible",
    "new_presentation",
    "normal_form",
    "normal_form_random",
    "oracle_equal",
    "reduce_trace",
    "relation_words",
]
