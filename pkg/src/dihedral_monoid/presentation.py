"""Presentations of the monoids S_n(H) of dihedral type.

A presentation is fixed by the pair ``(n, k)``: the monoid has generators
``a_1 .. a_n`` and every rotation of ``a_1 a_2 .. a_n`` as well as every
"skip-k" word ``a_i a_{i+k} a_{i+2k} .. a_{i-k}`` is declared equal to
``a_1 a_2 .. a_n``.

Words are plain tuples of ints in ``[1..n]``; index arithmetic always
renormalises into ``[1..n]`` (residue 0 is written as ``n``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

Word = tuple[int, ...]
Permutation = tuple[int, ...]


class PresentationError(ValueError):
    """Base class for bad ``(n, k)`` parameters."""


class InvalidN(PresentationError):
    pass


class InvalidK(PresentationError):
    pass


class InvalidWord(ValueError):
    pass


class StructureViolation(RuntimeError):
    """The computed group H failed one of its structural checks."""


@dataclass(frozen=True)
class Presentation:
    n: int
    k: int

    def __post_init__(self):
        n, k = self.n, self.k
        if not isinstance(n, int) or n <= 3:
            raise InvalidN(f"n must be an integer > 3, got {n!r}")
        if not isinstance(k, int) or k <= 1 or k >= n:
            raise InvalidK(f"k must satisfy 1 < k < n and k^2 ≡ 1 mod n, got k={k!r} for n={n}")
        if (k * k) % n != 1:
            raise InvalidK(f"k must satisfy k^2 ≡ 1 mod n, got k={k}, n={n} (k^2 mod n = {k * k % n})")

    # -- index arithmetic -------------------------------------------------

    def res(self, a: int) -> int:
        """Representative of ``a`` modulo n in ``[1..n]``."""
        return (a - 1) % self.n + 1

    def add(self, a: int, b: int) -> int:
        return (a + b - 1) % self.n + 1

    # -- words --------------------------------------------------------------

    def check_word(self, w: Iterable[int]) -> Word:
        w = tuple(w)
        for x in w:
            if not isinstance(x, int) or not 1 <= x <= self.n:
                raise InvalidWord(f"letter {x!r} is not a generator index in [1..{self.n}]")
        return w

    @cached_property
    def z(self) -> Word:
        """The central element a_1 a_2 .. a_n."""
        return tuple(range(1, self.n + 1))

    @cached_property
    def z_tail(self) -> Word:
        """a_2 .. a_n."""
        return tuple(range(2, self.n + 1))

    def rotation(self, i: int) -> Word:
        """a_i a_{i+1} .. a_{i-1}."""
        return tuple(self.add(i, t) for t in range(self.n))

    def skip_word(self, i: int) -> Word:
        """a_i a_{i+k} .. a_{i-k}."""
        return tuple(self.add(i, t * self.k) for t in range(self.n))

    def block_b(self, p: int) -> Word:
        """b_p = a_{p+1} a_{p+2} .. a_{p-2}, length n-2."""
        return tuple(self.add(p, t) for t in range(1, self.n - 1))

    def block_c(self, p: int) -> Word:
        """c_p = a_{p+k} a_{p+2k} .. a_{p-2k}, length n-2."""
        return tuple(self.add(p, t * self.k) for t in range(1, self.n - 1))

    @cached_property
    def rotations(self) -> tuple[Word, ...]:
        return tuple(self.rotation(i) for i in range(1, self.n + 1))

    @cached_property
    def skip_words(self) -> tuple[Word, ...]:
        return tuple(self.skip_word(i) for i in range(1, self.n + 1))

    @cached_property
    def relation_set(self) -> frozenset[Word]:
        return frozenset(self.rotations) | frozenset(self.skip_words)

    @cached_property
    def d_range(self) -> tuple[int, ...]:
        """Residues i allowed for the d-family: n-k+1 <= i <= n-1."""
        return tuple(range(self.n - self.k + 1, self.n))

    @cached_property
    def e_range(self) -> tuple[int, ...]:
        """Residues i allowed for the e-family: 0 <= i <= n-k, with 0 stored as n."""
        return tuple(self.res(i) for i in range(0, self.n - self.k + 1))

    @cached_property
    def chain_period(self) -> int:
        """Period of the block subscripts i, i-(k+1), i-2(k+1), ... modulo n."""
        return self.n // gcd(self.n, self.k + 1)


def new_presentation(n: int, k: int) -> Presentation:
    return Presentation(n, k)


def residue_add(p: Presentation, a: int, b: int) -> int:
    return p.add(a, b)


def relation_words(p: Presentation) -> set[Word]:
    """All 2n length-n words identified with a_1 .. a_n (including it)."""
    return set(p.relation_set)


def block_b(p: Presentation, q: int) -> Word:
    return p.block_b(q)


def block_c(p: Presentation, q: int) -> Word:
    return p.block_c(q)


def length_lex_key(w: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    return len(w), tuple(w)


def sorted_length_lex(words: Iterable[Sequence[int]]) -> list[Word]:
    return sorted((tuple(w) for w in words), key=length_lex_key)


# -- the permutation group H -------------------------------------------------


def _compose(s: Permutation, t: Permutation) -> Permutation:
    """(s o t)(x) = s(t(x)); permutations stored 1-based as tuples."""
    return tuple(s[t[x] - 1] for x in range(len(t)))


def _inverse(s: Permutation) -> Permutation:
    inv = [0] * len(s)
    for x, y in enumerate(s, start=1):
        inv[y - 1] = x
    return tuple(inv)


def group_H(p: Presentation) -> set[Permutation]:
    """Permutations sigma with a_{sigma(1)} .. a_{sigma(n)} a relation word.

    The relation word itself is the one-line notation of sigma. The result is
    checked to be a group of order 2n containing lambda = (1 2 .. n) as a
    normal subgroup of index 2, with mu^2 in <lambda> and mu lambda mu^-1 a
    power of lambda.
    """
    n = p.n
    H = set(p.relation_set)
    ident = p.z
    lam = p.rotation(2)  # lambda(x) = x + 1
    cyclic = set()
    g = ident
    for _ in range(n):
        cyclic.add(g)
        g = _compose(lam, g)

    if len(H) != 2 * n:
        raise StructureViolation(f"|H| = {len(H)}, expected {2 * n}")
    if ident not in H or not cyclic <= H:
        raise StructureViolation("H does not contain <lambda>")
    for s in H:
        if _inverse(s) not in H:
            raise StructureViolation(f"H not closed under inverses at {s}")
        for t in H:
            if _compose(s, t) not in H:
                raise StructureViolation(f"H not closed under composition at {s}, {t}")
    # <lambda> normal of index 2
    for s in H:
        si = _inverse(s)
        if {_compose(_compose(s, c), si) for c in cyclic} != cyclic:
            raise StructureViolation("<lambda> is not normal in H")
    outside = sorted(H - cyclic)
    if len(outside) != n:
        raise StructureViolation("<lambda> does not have index 2 in H")
    mu = outside[0]
    if _compose(mu, mu) not in cyclic:
        raise StructureViolation("mu^2 not in <lambda>")
    return H


def conjugation_exponent(p: Presentation) -> int:
    """The exponent e with mu lambda mu^-1 = lambda^e, for any mu outside <lambda>."""
    H = group_H(p)
    lam = p.rotation(2)
    cyclic = []
    g = p.z
    for _ in range(p.n):
        cyclic.append(g)
        g = _compose(lam, g)
    mu = sorted(H - set(cyclic))[0]
    conj = _compose(_compose(mu, lam), _inverse(mu))
    return cyclic.index(conj)
