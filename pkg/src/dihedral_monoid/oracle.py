"""Brute-force ground truth for the word problem.

Only the defining relations are used here (replace any factor that is a
relation word by any other relation word), never the rewriting rules, so
these routines can be used to check the rewriting engine.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .presentation import Presentation, Word, sorted_length_lex

DEFAULT_CAP = 10**6
DEFAULT_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    pass


class Inconclusive(RuntimeError):
    pass


@dataclass(frozen=True)
class CongruenceClass:
    representative: Word
    members: frozenset[Word]
    truncated: bool

    def sorted_members(self) -> list[Word]:
        return sorted_length_lex(self.members)


def relation_neighbours(p: Presentation, w: Word):
    n = p.n
    rels = p.relation_set
    for s in range(len(w) - n + 1):
        f = w[s:s + n]
        if f in rels:
            head, tail = w[:s], w[s + n:]
            for r in rels:
                if r != f:
                    yield head + r + tail


def congruence_class(p: Presentation, w: Sequence[int], cap: int = DEFAULT_CAP) -> CongruenceClass:
    if cap <= 0:
        raise ValueError("cap must be positive")
    w = p.check_word(w)
    seen = {w}
    queue = deque([w])
    truncated = False
    while queue:
        x = queue.popleft()
        for y in relation_neighbours(p, x):
            if y not in seen:
                if len(seen) >= cap:
                    truncated = True
                    queue.clear()
                    break
                seen.add(y)
                queue.append(y)
    return CongruenceClass(w, frozenset(seen), truncated)


def oracle_equal(p: Presentation, w1: Sequence[int], w2: Sequence[int], cap: int = DEFAULT_CAP) -> bool:
    w1, w2 = p.check_word(w1), p.check_word(w2)
    if len(w1) != len(w2):
        return False
    if w1 == w2:
        return True
    # bidirectional BFS; the smaller frontier is expanded first
    seen = [{w1}, {w2}]
    frontier = [[w1], [w2]]
    while frontier[0] and frontier[1]:
        side = 0 if len(frontier[0]) <= len(frontier[1]) else 1
        mine, other = seen[side], seen[1 - side]
        nxt = []
        for x in frontier[side]:
            for y in relation_neighbours(p, x):
                if y in other:
                    return True
                if y not in mine:
                    if len(seen[0]) + len(seen[1]) >= cap:
                        raise Inconclusive(f"search from {w1} and {w2} exceeded cap={cap}")
                    mine.add(y)
                    nxt.append(y)
        frontier[side] = nxt
    return False


def _check_budget(p: Presentation, length: int, budget: int) -> None:
    if length < 0:
        raise ValueError("length must be >= 0")
    if p.n ** length > budget:
        raise BudgetExceeded(f"n^length = {p.n}^{length} exceeds the enumeration budget {budget}")


def class_labels(p: Presentation, length: int, budget: int = DEFAULT_BUDGET):
    """Class label of every word of the given length.

    Words are indexed by their base-n code (first letter most significant,
    letter a maps to digit a-1). Returns an array whose entry is the
    smallest code in the word's class.
    """
    _check_budget(p, length, budget)
    return kernels.class_labels(p.n, length, sorted(p.relation_set))


def count_classes(p: Presentation, length: int, budget: int = DEFAULT_BUDGET) -> int:
    """Number of elements of S_n of the given length."""
    _check_budget(p, length, budget)
    if length < p.n:
        return p.n ** length
    labels = class_labels(p, length, budget)
    return kernels.count_roots(labels)


def encode(p: Presentation, w: Sequence[int]) -> int:
    c = 0
    for a in w:
        c = c * p.n + (a - 1)
    return c


def decode(p: Presentation, code: int, length: int) -> Word:
    out = [0] * length
    for t in range(length - 1, -1, -1):
        code, d = divmod(code, p.n)
        out[t] = d + 1
    return tuple(out)
