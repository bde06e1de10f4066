"""The normal-word language of S_n, built two independent ways.

``irreducible_dfa`` avoids every left-hand side of the rewriting rules as a
factor. ``theorem_language_dfa`` transcribes the closed-form regular
expression for the normal words term by term (union, concatenation, star,
complement and factor ideals), without reference to the rewriting engine.
"""

from __future__ import annotations

from ..presentation import Presentation
from .automata import (
    Dfa,
    Nfa,
    complement_nfa,
    factor_ideal,
    nfa_all,
    nfa_concat,
    nfa_star,
    nfa_to_min_dfa,
    nfa_union,
    nfa_words,
    prefix_ideal,
)


def _chain_word(p: Presentation, use_b: bool, first: int, count: int) -> tuple[int, ...]:
    block = p.block_b if use_b else p.block_c
    out: list[int] = []
    for t in range(count):
        out.extend(block(p.res(first - t * (p.k + 1))))
    return tuple(out)


def _add_tail_cycle(A: Nfa, entry: int, final: int, p: Presentation, i: int, use_b: bool) -> None:
    """Paths from ``entry`` to ``final`` reading every
    block(i) block(i-(k+1)) .. block(i-q(k+1)) a_{i-shift-q(k+1)}, q >= 0.

    The block subscripts repeat with period ``p.chain_period``, so the chain
    is a cycle of that many blocks with an exit after each one.
    """
    n, k = p.n, p.k
    block = p.block_b if use_b else p.block_c
    shift = 1 if use_b else k
    period = p.chain_period
    L = n - 2
    letters: list[int] = []
    for t in range(period):
        letters.extend(block(p.res(i - t * (k + 1))))
    size = period * L
    cyc = [A.add_state() for _ in range(size)]
    # cyc[c] is the state after reading c letters of the unrolled cycle (mod size);
    # entry stands in for cyc[0] on the very first letter only
    A.add_edge(entry, letters[0], cyc[1 % size])
    for c in range(1, size + 1):
        src = cyc[c % size]
        if c < size:
            A.add_edge(src, letters[c], cyc[(c + 1) % size])
        if c % L == 0:
            blk = c // L - 1
            A.add_edge(src, p.res(i - shift - blk * (k + 1)), final)
    # leaving cyc[0] after a full lap: first letter of block 0 again
    A.add_edge(cyc[0], letters[0], cyc[1 % size])


def forbidden_factor_nfa(p: Presentation) -> Nfa:
    """Sigma* F Sigma* with F the set of all rule left-hand sides."""
    n = p.n
    A = Nfa(n)
    start = A.add_state()
    A.start = start
    A.add_loop_all(start)
    final = A.add_state()
    A.add_loop_all(final)
    A.accepting.add(final)

    for i in range(2, n + 1):
        A.add_word(start, p.rotation(i), final)
    for i in range(1, n + 1):
        A.add_word(start, p.skip_word(i), final)

    # R: a_j a_1 a_1* a_2 .. a_n, j >= 2
    r1 = A.add_state()
    for j in range(2, n + 1):
        A.add_edge(start, j, r1)
    r2 = A.add_state()
    A.add_edge(r1, 1, r2)
    A.add_edge(r2, 1, r2)
    A.add_word(r2, p.z_tail, final)

    # D, E, S, U: z Sigma* tail
    zstate = A.add_word(start, p.z)
    A.add_loop_all(zstate)
    for i in p.d_range:
        _add_tail_cycle(A, zstate, final, p, i, True)
    for i in p.e_range:
        _add_tail_cycle(A, zstate, final, p, i, False)
    for i in range(1, n + 1):
        for use_b in (True, False):
            entry = A.add_state()
            A.add_edge(zstate, i, entry)
            _add_tail_cycle(A, entry, final, p, i, use_b)
    return A


def irreducible_dfa(p: Presentation) -> Dfa:
    """Minimal DFA of the words no rule applies to."""
    return nfa_to_min_dfa(forbidden_factor_nfa(p)).complement().minimize()


# -- literal transcription of the closed-form expression ---------------------------


def _compact(A: Nfa) -> Nfa:
    """Same language, as the NFA view of its minimal DFA."""
    return nfa_to_min_dfa(A).to_nfa()


def _ideal_sets(p: Presentation) -> dict[str, Nfa]:
    n, k = p.n, p.k
    one = nfa_words(n, [()])

    def word(w):
        return nfa_words(n, [w])

    I = factor_ideal(nfa_words(n, sorted(p.relation_set)))

    def chain_ideal(indices, use_b: bool, with_letter: bool) -> Nfa:
        shift = 1 if use_b else k
        parts = []
        for i in indices:
            full = nfa_star(word(_chain_word(p, use_b, i, n)))
            lead = word((i,)) if with_letter else one
            for q in range(n):
                tail = _chain_word(p, use_b, i, q + 1) + (p.res(i - shift - q * (k + 1)),)
                parts.append(nfa_concat(lead, full, word(tail)))
        # FM (u patterns) FM, the same set as u (FM pattern FM)
        return factor_ideal(nfa_union(*parts))

    sets = {
        "I": I,
        "a1": prefix_ideal(word((1,))),
        "z_tail": prefix_ideal(word(p.z_tail)),
        "zeta": chain_ideal(p.d_range, True, False),
        "eta": chain_ideal(p.e_range, False, False),
        "theta": chain_ideal(range(1, n + 1), True, True),
        "iota": chain_ideal(range(1, n + 1), False, True),
    }
    return {name: _compact(A) for name, A in sets.items()}


def theorem_language_dfa(p: Presentation) -> Dfa:
    """Minimal DFA for

        a_1* (FM - (I u a_2..a_n FM))
      u (a_2..a_n)* (FM - (I u a_1 FM))
      u a_1 a_1* (a_2..a_n) (a_2..a_n)* (FM - (I u a_1 FM u a_2..a_n FM
                                                u I_zeta u I_eta u I_theta u I_iota))

    with I the factor ideal of all 2n relation words (sigma ranges over all
    of H, identity included) and the four chain ideals taken verbatim,
    including the starred full-period chains and q = 0 .. n-1.
    """
    n = p.n
    sets = _ideal_sets(p)
    a1 = nfa_words(n, [(1,)])
    zt = nfa_words(n, [p.z_tail])

    first = nfa_concat(nfa_star(a1), complement_nfa(nfa_union(sets["I"], sets["z_tail"])))
    second = nfa_concat(nfa_star(zt), complement_nfa(nfa_union(sets["I"], sets["a1"])))
    banned = sets["I"]
    for name in ("a1", "z_tail", "zeta", "eta", "theta", "iota"):
        banned = _compact(nfa_union(banned, sets[name]))
    third = nfa_concat(a1, nfa_star(a1), zt, nfa_star(zt), complement_nfa(banned))
    return nfa_to_min_dfa(nfa_union(_compact(first), _compact(second), _compact(third)))
