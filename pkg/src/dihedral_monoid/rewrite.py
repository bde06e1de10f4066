"""The length-lexicographically decreasing rewriting system on words.

Seven rule families act on words over ``a_1 .. a_n``:

T  a_i a_{i+1} .. a_{i-1}                 -> z                 (2 <= i <= n)
R  a_j a_1^m a_2 .. a_n                    -> z a_j a_1^{m-1}   (2 <= j <= n, m >= 1)
H  a_i a_{i+k} .. a_{i-k}                  -> z                 (1 <= i <= n)
D  z v b_i b_{i-(k+1)} .. b_{i-q(k+1)} a_{i-1-q(k+1)}
                                           -> z v a_{i+k} c_{i+k} .. c_{i+k-q(k+1)}
E  z v c_i c_{i-(k+1)} .. c_{i-q(k+1)} a_{i-k-q(k+1)}
                                           -> z v a_{i+1} b_{i+1} .. b_{i+1-q(k+1)}
S  z v a_i b_i .. b_{i-q(k+1)} a_{i-1-q(k+1)}
                                           -> a_1^2 (a_2..a_n)^2 v c_{i-1} .. c_{i+k-q(k+1)}
U  z v a_i c_i .. c_{i-q(k+1)} a_{i-k-q(k+1)}
                                           -> a_1^2 (a_2..a_n)^2 v b_{i-k} .. b_{i+1-q(k+1)}

with z = a_1 .. a_n, D restricted to n-k+1 <= i <= n-1 and E to 0 <= i <= n-k.
Every rule preserves length and strictly decreases length-lex order, and
the system is confluent, so each word reduces to a unique irreducible word.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .presentation import Presentation, Word, length_lex_key


class RuleMismatch(ValueError):
    pass


class NonDecreasingStep(RuntimeError):
    pass


class NotNormalForm(ValueError):
    pass


class RuleKind(enum.IntEnum):
    # value order is the priority used by the deterministic strategy
    T = 0
    R = 1
    H = 2
    D = 3
    E = 4
    S = 5
    U = 6

    @property
    def gapped(self) -> bool:
        return self >= RuleKind.D


@dataclass(frozen=True)
class RuleInstance:
    """One applicable rule at a fixed place in a host word.

    ``i`` holds j for the R family. For the gapped families (D, E, S, U) the
    match begins with an occurrence of z, ``v_len`` letters of the host word
    follow it, and then the tail pattern.
    """

    kind: RuleKind
    i: int
    match_start: int
    match_len: int
    m: int = 0
    q: int = 0
    v_len: int = 0

    @property
    def match_end(self) -> int:
        return self.match_start + self.match_len

    def sort_key(self) -> tuple[int, int, int, int, int]:
        return (int(self.kind), self.match_start, self.q, self.v_len, self.i)

    def describe(self) -> str:
        if self.kind is RuleKind.R:
            params = f"j={self.i} m={self.m}"
        elif self.kind.gapped:
            params = f"i={self.i} q={self.q} |v|={self.v_len}"
        else:
            params = f"i={self.i}"
        return f"{self.kind.name}({params})@{self.match_start}"


@dataclass(frozen=True)
class NormalFormDecomposition:
    i: int
    j: int
    b: Word

    def reassemble(self, p: Presentation) -> Word:
        return (1,) * self.i + p.z_tail * self.j + tuple(self.b)


# -- rule sides ----------------------------------------------------------------


def _chain(p: Presentation, block, first: int, count: int) -> Word:
    """block(first) block(first-(k+1)) ... for ``count`` blocks."""
    out: list[int] = []
    step = p.k + 1
    for t in range(count):
        out.extend(block(p.res(first - t * step)))
    return tuple(out)


def instantiate(
    p: Presentation,
    kind: RuleKind,
    i: int,
    *,
    m: int = 1,
    q: int = 0,
    v: Sequence[int] = (),
) -> tuple[Word, Word]:
    """Left and right sides of the rule ``kind`` with the given parameters.

    No range checks on ``i`` are made here; callers that need the guarded
    families use :func:`allowed_indices`.
    """
    n, k = p.n, p.k
    z = p.z
    v = tuple(v)
    i = p.res(i)
    step = k + 1
    if kind is RuleKind.T:
        return p.rotation(i), z
    if kind is RuleKind.H:
        return p.skip_word(i), z
    if kind is RuleKind.R:
        if m < 1:
            raise ValueError("m must be >= 1")
        return (i,) + (1,) * m + p.z_tail, z + (i,) + (1,) * (m - 1)
    if q < 0:
        raise ValueError("q must be >= 0")
    head = z + v
    zz = (1, 1) + p.z_tail * 2 + v
    if kind is RuleKind.D:
        lhs = head + _chain(p, p.block_b, i, q + 1) + (p.res(i - 1 - q * step),)
        rhs = head + (p.res(i + k),) + _chain(p, p.block_c, i + k, q + 1)
    elif kind is RuleKind.E:
        lhs = head + _chain(p, p.block_c, i, q + 1) + (p.res(i - k - q * step),)
        rhs = head + (p.res(i + 1),) + _chain(p, p.block_b, i + 1, q + 1)
    elif kind is RuleKind.S:
        lhs = head + (i,) + _chain(p, p.block_b, i, q + 1) + (p.res(i - 1 - q * step),)
        rhs = zz + _chain(p, p.block_c, i + k - step, q)
    elif kind is RuleKind.U:
        lhs = head + (i,) + _chain(p, p.block_c, i, q + 1) + (p.res(i - k - q * step),)
        rhs = zz + _chain(p, p.block_b, i + 1 - step, q)
    else:  # pragma: no cover
        raise ValueError(kind)
    return lhs, rhs


def allowed_indices(p: Presentation, kind: RuleKind) -> tuple[int, ...]:
    n = p.n
    if kind in (RuleKind.T, RuleKind.R):
        return tuple(range(2, n + 1))
    if kind is RuleKind.D:
        return p.d_range
    if kind is RuleKind.E:
        return p.e_range
    return tuple(range(1, n + 1))


# -- redex search --------------------------------------------------------------


def _chain_ends(p: Presentation, w: Word, start: int, i: int, use_b: bool, trail_shift: int) -> Iterator[tuple[int, int]]:
    """Yield (q, end) for each chain block(i) .. block(i-q(k+1)) a_{i-shift-q(k+1)}
    matched in ``w`` beginning at ``start``."""
    n, step = p.n, p.k + 1
    block = p.block_b if use_b else p.block_c
    L = n - 2
    pos = start
    idx = i
    q = 0
    while pos + L < len(w):
        if w[pos:pos + L] != block(idx):
            return
        pos += L
        if w[pos] == p.res(idx - trail_shift):
            yield q, pos + 1
        idx = p.res(idx - step)
        q += 1


def _z_starts(p: Presentation, w: Word) -> list[int]:
    n = p.n
    z = p.z
    return [s for s in range(len(w) - n + 1) if w[s] == 1 and w[s:s + n] == z]


def find_redexes(p: Presentation, w: Sequence[int], all_gaps: bool = False) -> list[RuleInstance]:
    """Every rule instance applicable somewhere in ``w``.

    Gapped instances use the closest occurrence of z ending at or before the
    tail; with ``all_gaps`` one instance per usable occurrence of z is
    reported instead. The list is sorted by the strategy priority.
    """
    w = tuple(w)
    n, k = p.n, p.k
    N = len(w)
    out: list[RuleInstance] = []
    if N < n:
        return out

    rotation_index = {p.rotation(i): i for i in range(2, n + 1)}
    skip_index = {p.skip_word(i): i for i in range(1, n + 1)}
    z_tail = p.z_tail
    for s in range(N - n + 1):
        f = w[s:s + n]
        if f in rotation_index:
            out.append(RuleInstance(RuleKind.T, rotation_index[f], s, n))
        if f in skip_index:
            out.append(RuleInstance(RuleKind.H, skip_index[f], s, n))
        j = w[s]
        if j != 1 and s + 1 < N and w[s + 1] == 1:
            t = s + 1
            while t < N and w[t] == 1:
                t += 1
            m = t - s - 1
            if w[t:t + n - 1] == z_tail:
                out.append(RuleInstance(RuleKind.R, j, s, m + n, m=m))

    zs = _z_starts(p, w)
    if zs:
        d_ok = set(p.d_range)
        e_ok = set(p.e_range)
        first_tail = zs[0] + n
        for t in range(first_tail, N):
            usable = [s for s in zs if s + n <= t]
            starts = usable if all_gaps else usable[-1:]
            a = w[t]
            cands = []
            i = p.res(a - 1)
            if i in d_ok:
                cands.append((RuleKind.D, i, t, True, 1))
            i = p.res(a - k)
            if i in e_ok:
                cands.append((RuleKind.E, i, t, False, k))
            cands.append((RuleKind.S, a, t + 1, True, 1))
            cands.append((RuleKind.U, a, t + 1, False, k))
            for kind, i, chain_start, use_b, shift in cands:
                for q, end in _chain_ends(p, w, chain_start, i, use_b, shift):
                    for s in starts:
                        out.append(RuleInstance(kind, i, s, end - s, q=q, v_len=t - s - n))
    out.sort(key=RuleInstance.sort_key)
    return out


def rule_sides(p: Presentation, w: Sequence[int], r: RuleInstance) -> tuple[Word, Word]:
    """Instantiated (lhs, rhs) of ``r`` using the gap word read from ``w``."""
    w = tuple(w)
    v = ()
    if r.kind.gapped:
        v0 = r.match_start + p.n
        v = w[v0:v0 + r.v_len]
    return instantiate(p, r.kind, r.i, m=max(r.m, 1), q=r.q, v=v)


def apply_rule(p: Presentation, w: Sequence[int], r: RuleInstance) -> Word:
    w = tuple(w)
    lhs, rhs = rule_sides(p, w, r)
    if w[r.match_start:r.match_end] != lhs:
        raise RuleMismatch(f"{r.describe()} does not match {w}")
    return w[:r.match_start] + rhs + w[r.match_end:]


def compare_length_lex(w1: Sequence[int], w2: Sequence[int]) -> int:
    """-1, 0 or 1 as ``w1`` is below, equal to or above ``w2``."""
    a, b = length_lex_key(w1), length_lex_key(w2)
    return (a > b) - (a < b)


def _step(p: Presentation, w: Word, r: RuleInstance) -> Word:
    out = apply_rule(p, w, r)
    if compare_length_lex(out, w) >= 0:
        raise NonDecreasingStep(f"{r.describe()} maps {w} to {out}")
    return out


def reduce_trace(p: Presentation, w: Sequence[int]) -> list[tuple[RuleInstance, Word]]:
    """Deterministic reduction of ``w``; one (rule, result) pair per step."""
    w = p.check_word(w)
    trace = []
    while True:
        redexes = find_redexes(p, w)
        if not redexes:
            return trace
        r = redexes[0]
        w = _step(p, w, r)
        trace.append((r, w))


def normal_form(p: Presentation, w: Sequence[int]) -> Word:
    w = p.check_word(w)
    while True:
        redexes = find_redexes(p, w)
        if not redexes:
            return w
        w = _step(p, w, redexes[0])


def normal_form_random(p: Presentation, w: Sequence[int], rng: random.Random) -> Word:
    """Reduce by picking a uniformly random redex (any gap) at every step."""
    w = p.check_word(w)
    while True:
        redexes = find_redexes(p, w, all_gaps=True)
        if not redexes:
            return w
        w = _step(p, w, rng.choice(redexes))


def is_irreducible(p: Presentation, w: Sequence[int]) -> bool:
    return not find_redexes(p, w)


def decompose(p: Presentation, w: Sequence[int]) -> NormalFormDecomposition:
    w = p.check_word(w)
    if not is_irreducible(p, w):
        raise NotNormalForm(f"{w} is reducible")
    i = 0
    while i < len(w) and w[i] == 1:
        i += 1
    tail = p.z_tail
    L = len(tail)
    j = 0
    pos = i
    while w[pos:pos + L] == tail:
        pos += L
        j += 1
    return NormalFormDecomposition(i, j, w[pos:])
