"""Finite automata over the alphabet {1..n}.

NFAs are built with Thompson-style combinators (union, concatenation, star)
and turned into DFAs by subset construction. DFAs are total: a dead state is
kept explicitly. Letter 0 is reserved for epsilon moves inside NFAs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

EPS = 0
MAX_DFA_STATES = 10**6


class StateLimitExceeded(RuntimeError):
    pass


class AlphabetMismatch(ValueError):
    pass


@dataclass
class Nfa:
    """Mutable NFA; states are 0 .. state_count-1."""

    alphabet_size: int
    edges: list[dict[int, set[int]]] = field(default_factory=list)
    start: int = 0
    accepting: set[int] = field(default_factory=set)

    @property
    def state_count(self) -> int:
        return len(self.edges)

    def add_state(self) -> int:
        self.edges.append({})
        return len(self.edges) - 1

    def add_edge(self, s: int, letter: int, t: int) -> None:
        self.edges[s].setdefault(letter, set()).add(t)

    def add_word(self, s: int, word: Sequence[int], t: int | None = None) -> int:
        """Path from ``s`` reading ``word``; ends in ``t`` (fresh if None)."""
        cur = s
        for idx, a in enumerate(word):
            nxt = t if (t is not None and idx == len(word) - 1) else self.add_state()
            self.add_edge(cur, a, nxt)
            cur = nxt
        if not word and t is not None:
            self.add_edge(cur, EPS, t)
            cur = t
        return cur

    def add_loop_all(self, s: int) -> None:
        for a in range(1, self.alphabet_size + 1):
            self.add_edge(s, a, s)

    def embed(self, other: "Nfa") -> tuple[int, set[int]]:
        """Copy ``other`` into self; return its (start, accepting) here."""
        if other.alphabet_size != self.alphabet_size:
            raise AlphabetMismatch("alphabet sizes differ")
        off = self.state_count
        for row in other.edges:
            self.edges.append({a: {t + off for t in ts} for a, ts in row.items()})
        return other.start + off, {f + off for f in other.accepting}

    def transitions(self) -> set[tuple[int, int, int]]:
        return {(s, a, t) for s, row in enumerate(self.edges) for a, ts in row.items() for t in ts}


# -- NFA combinators ---------------------------------------------------------------


def nfa_words(n: int, words: Iterable[Sequence[int]]) -> Nfa:
    """Finite language."""
    A = Nfa(n)
    A.start = A.add_state()
    for w in words:
        A.accepting.add(A.add_word(A.start, tuple(w)))
    return A


def nfa_all(n: int) -> Nfa:
    A = Nfa(n)
    A.start = A.add_state()
    A.add_loop_all(A.start)
    A.accepting.add(A.start)
    return A


def nfa_union(*parts: Nfa) -> Nfa:
    n = parts[0].alphabet_size
    A = Nfa(n)
    A.start = A.add_state()
    for P in parts:
        s, fs = A.embed(P)
        A.add_edge(A.start, EPS, s)
        A.accepting |= fs
    return A


def nfa_concat(*parts: Nfa) -> Nfa:
    n = parts[0].alphabet_size
    A = Nfa(n)
    A.start = A.add_state()
    ends = {A.start}
    for P in parts:
        s, fs = A.embed(P)
        for e in ends:
            A.add_edge(e, EPS, s)
        ends = fs
    A.accepting = set(ends)
    return A


def nfa_star(P: Nfa) -> Nfa:
    """Kleene star including the empty word."""
    A = Nfa(P.alphabet_size)
    A.start = A.add_state()
    s, fs = A.embed(P)
    A.add_edge(A.start, EPS, s)
    for f in fs:
        A.add_edge(f, EPS, A.start)
    A.accepting.add(A.start)
    return A


def factor_ideal(P: Nfa) -> Nfa:
    """Sigma* L Sigma*."""
    n = P.alphabet_size
    return nfa_concat(nfa_all(n), P, nfa_all(n))


def prefix_ideal(P: Nfa) -> Nfa:
    """L Sigma*."""
    return nfa_concat(P, nfa_all(P.alphabet_size))


# -- DFAs --------------------------------------------------------------------------


@dataclass(frozen=True)
class Dfa:
    """Total DFA. ``delta[s][a-1]`` is the successor of state s on letter a."""

    alphabet_size: int
    delta: tuple[tuple[int, ...], ...]
    start: int
    accepting: frozenset[int]

    @property
    def state_count(self) -> int:
        return len(self.delta)

    def step(self, s: int, a: int) -> int:
        return self.delta[s][a - 1]

    def run(self, word: Sequence[int]) -> int:
        s = self.start
        for a in word:
            s = self.delta[s][a - 1]
        return s

    def accepts(self, word: Sequence[int]) -> bool:
        return self.run(word) in self.accepting

    def transitions(self) -> list[tuple[int, int, int]]:
        return [(s, a + 1, t) for s, row in enumerate(self.delta) for a, t in enumerate(row)]

    def complement(self) -> "Dfa":
        return Dfa(self.alphabet_size, self.delta, self.start, frozenset(range(self.state_count)) - self.accepting)

    def to_nfa(self) -> Nfa:
        A = Nfa(self.alphabet_size)
        for _ in range(self.state_count):
            A.add_state()
        for s, a, t in self.transitions():
            A.add_edge(s, a, t)
        A.start = self.start
        A.accepting = set(self.accepting)
        return A

    def minimize(self) -> "Dfa":
        return minimize(self)


def all_words_dfa(n: int) -> Dfa:
    return Dfa(n, ((0,) * n,), 0, frozenset({0}))


def _closure(A: Nfa, states: Iterable[int]) -> frozenset[int]:
    stack = list(states)
    seen = set(stack)
    while stack:
        s = stack.pop()
        for t in A.edges[s].get(EPS, ()):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return frozenset(seen)


def determinize(A: Nfa, max_states: int = MAX_DFA_STATES) -> Dfa:
    """Subset construction. The empty subset becomes the dead state."""
    n = A.alphabet_size
    start = _closure(A, [A.start])
    index = {start: 0}
    order = [start]
    delta: list[list[int]] = []
    i = 0
    while i < len(order):
        S = order[i]
        row = []
        for a in range(1, n + 1):
            nxt = set()
            for s in S:
                nxt |= A.edges[s].get(a, set())
            T = _closure(A, nxt)
            if T not in index:
                if len(order) >= max_states:
                    raise StateLimitExceeded(f"determinization exceeded {max_states} states")
                index[T] = len(order)
                order.append(T)
            row.append(index[T])
        delta.append(row)
        i += 1
    accepting = frozenset(idx for S, idx in index.items() if S & A.accepting)
    return Dfa(n, tuple(map(tuple, delta)), 0, accepting)


def _reachable(D: Dfa) -> list[int]:
    """States reachable from start, in BFS order with ascending letters."""
    seen = {D.start}
    order = [D.start]
    queue = deque(order)
    while queue:
        s = queue.popleft()
        for t in D.delta[s]:
            if t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def minimize(D: Dfa) -> Dfa:
    """Drop unreachable states and merge equivalent ones (Moore refinement).

    States of the result are numbered in BFS order from the start state, so
    equal languages give identical minimal DFAs.
    """
    states = _reachable(D)
    n = D.alphabet_size
    block = {s: (1 if s in D.accepting else 0) for s in states}
    count = len(set(block.values()))
    while True:
        sigs: dict[tuple, int] = {}
        new_block = {}
        for s in states:
            sig = (block[s],) + tuple(block[t] for t in D.delta[s])
            new_block[s] = sigs.setdefault(sig, len(sigs))
        block = new_block
        if len(sigs) == count:
            break
        count = len(sigs)
    # renumber classes canonically
    rep: dict[int, int] = {}
    for s in states:
        rep.setdefault(block[s], s)
    numbering = {block[D.start]: 0}
    queue = deque([block[D.start]])
    while queue:
        b = queue.popleft()
        for a in range(n):
            c = block[D.delta[rep[b]][a]]
            if c not in numbering:
                numbering[c] = len(numbering)
                queue.append(c)
    delta = [None] * len(numbering)
    for b, idx in numbering.items():
        delta[idx] = tuple(numbering[block[t]] for t in D.delta[rep[b]])
    accepting = frozenset(numbering[block[s]] for s in states if s in D.accepting)
    return Dfa(n, tuple(delta), 0, accepting)


def product(A: Dfa, B: Dfa, op) -> Dfa:
    """Product automaton accepting where ``op(inA, inB)`` holds."""
    if A.alphabet_size != B.alphabet_size:
        raise AlphabetMismatch("alphabet sizes differ")
    n = A.alphabet_size
    start = (A.start, B.start)
    index = {start: 0}
    order = [start]
    delta = []
    i = 0
    while i < len(order):
        s, t = order[i]
        row = []
        for a in range(n):
            pair = (A.delta[s][a], B.delta[t][a])
            if pair not in index:
                index[pair] = len(order)
                order.append(pair)
            row.append(index[pair])
        delta.append(tuple(row))
        i += 1
    accepting = frozenset(idx for (s, t), idx in index.items() if op(s in A.accepting, t in B.accepting))
    return Dfa(n, tuple(delta), 0, accepting)


def dfa_equivalent(A: Dfa, B: Dfa) -> tuple[bool, tuple[int, ...] | None]:
    """Language equality, with a shortest distinguishing word on failure.

    The product is explored breadth-first with letters in ascending order, so
    the witness is also the length-lex smallest word in the symmetric
    difference.
    """
    if A.alphabet_size != B.alphabet_size:
        raise AlphabetMismatch("alphabet sizes differ")
    n = A.alphabet_size
    start = (A.start, B.start)
    parent: dict[tuple[int, int], tuple[tuple[int, int], int] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        s, t = pair
        if (s in A.accepting) != (t in B.accepting):
            word = []
            cur = pair
            while parent[cur] is not None:
                prev, a = parent[cur]
                word.append(a)
                cur = prev
            return False, tuple(reversed(word))
        for a in range(1, n + 1):
            nxt = (A.delta[s][a - 1], B.delta[t][a - 1])
            if nxt not in parent:
                parent[nxt] = (pair, a)
                queue.append(nxt)
    return True, None


def nfa_to_min_dfa(A: Nfa, max_states: int = MAX_DFA_STATES) -> Dfa:
    return minimize(determinize(A, max_states))


def complement_nfa(A: Nfa, max_states: int = MAX_DFA_STATES) -> Nfa:
    return nfa_to_min_dfa(A, max_states).complement().to_nfa()


def count_words(A: Dfa, length: int) -> int:
    """Number of accepted words of exactly ``length`` letters (exact)."""
    return count_sequence(A, length)[length]


def count_sequence(A: Dfa, max_length: int) -> list[int]:
    """Accepted-word counts for lengths 0..max_length (transfer matrix)."""
    if max_length < 0:
        raise ValueError("length must be >= 0")
    vec = [0] * A.state_count
    vec[A.start] = 1
    out = []
    for ell in range(max_length + 1):
        out.append(sum(vec[s] for s in A.accepting))
        if ell == max_length:
            break
        nxt = [0] * A.state_count
        for s, c in enumerate(vec):
            if c:
                for t in A.delta[s]:
                    nxt[t] += c
        vec = nxt
    return out
