"""Desk-scale property suites cross-checking rewrite, oracle and lang.

Each suite returns a :class:`SuiteReport`; an empty failure list means the
suite passed. Bounds (all optional) are ``max_len``, ``max_q``, ``max_v``,
``sample_count`` and ``seed``.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from . import kernels, oracle
from .lang import count_words, dfa_equivalent, irreducible_dfa, theorem_language_dfa
from .presentation import Presentation, Word, sorted_length_lex
from .rewrite import (
    RuleInstance,
    RuleKind,
    allowed_indices,
    apply_rule,
    find_redexes,
    instantiate,
    rule_sides,
)


class UnknownSuite(ValueError):
    pass


SUITES = (
    "centrality",
    "lemma-z2",
    "soundness",
    "unique-nf",
    "confluence",
    "cancellativity",
    "dfa-equivalence",
    "growth-vs-oracle",
)

# Greek labels used for the rule families in the overlap inventory.
GREEK = {
    RuleKind.T: "alpha",
    RuleKind.R: "beta",
    RuleKind.H: "delta",
    RuleKind.D: "zeta",
    RuleKind.E: "eta",
    RuleKind.S: "theta",
    RuleKind.U: "iota",
}
_G = {v: k for k, v in GREEK.items()}


def _pairs(text: str) -> tuple[tuple[RuleKind, RuleKind], ...]:
    out = []
    for item in text.split():
        a, b = item.split(",")
        out.append((_G[a], _G[b]))
    return tuple(out)


# Ending letters of the first left side overlap the beginning of the second.
SUFFIX_PREFIX_PAIRS = _pairs(
    "alpha,delta delta,alpha beta,delta delta,beta delta,delta zeta,alpha eta,delta "
    "zeta,beta eta,beta theta,beta iota,beta zeta,delta eta,alpha theta,alpha iota,delta "
    "theta,delta iota,alpha"
)
# Ending letters of the first overlap the part just after the gap of the second.
INTO_TAIL_PAIRS = _pairs(
    "alpha,zeta delta,eta alpha,eta delta,zeta alpha,theta delta,iota alpha,iota delta,theta "
    "beta,zeta beta,eta beta,theta beta,iota "
    "zeta,zeta eta,eta zeta,eta eta,zeta zeta,theta eta,iota zeta,iota eta,theta "
    "theta,zeta iota,eta theta,eta iota,zeta theta,theta iota,iota theta,iota iota,theta"
)


@dataclass
class SuiteReport:
    suite_name: str
    n: int
    k: int
    bounds: dict
    checked: int = 0
    failures: list[tuple[str, str, str]] = field(default_factory=list)
    elapsed: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what, expected, actual) -> None:
        self.failures.append((str(what), str(expected), str(actual)))

    def to_dict(self) -> dict:
        return {
            "suite_name": self.suite_name,
            "n": self.n,
            "k": self.k,
            "bounds": dict(sorted(self.bounds.items())),
            "checked": self.checked,
            "failures": [list(f) for f in sorted(self.failures)],
            "elapsed_ms": round(self.elapsed * 1000),
            "details": {key: self.details[key] for key in sorted(self.details)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.suite_name} n={self.n} k={self.k} checked={self.checked} failures={len(self.failures)}"


def default_bounds(p: Presentation) -> dict:
    return {"max_len": p.n + 2, "max_q": 2, "max_v": 2, "sample_count": 1000, "seed": 0, "gap_samples": 16}


def _nf(p: Presentation, words) -> list[Word]:
    return kernels.normal_forms(p.n, p.k, [tuple(w) for w in words])


def _nf1(p: Presentation, w) -> Word:
    return _nf(p, [w])[0]


def _fmt(w) -> str:
    return " ".join(map(str, w)) or "ε"


def _random_word(rng: random.Random, n: int, length: int) -> Word:
    return tuple(rng.randint(1, n) for _ in range(length))


# -- suites ----------------------------------------------------------------------


def _centrality(p, b, rep):
    z = p.z
    for i in range(1, p.n + 1):
        left, right = _nf(p, [z + (i,), (i,) + z])
        rep.checked += 1
        if left != right:
            rep.fail(f"z a_{i} vs a_{i} z", _fmt(left), _fmt(right))


def lemma_z2_words(p: Presentation, i: int, q: int) -> list[tuple[Word, Word]]:
    """Both identities at (i, q), as (left word, right word) pairs."""
    z, k, step = p.z, p.k, p.k + 1

    def chain(block, first, count):
        out = []
        for t in range(count):
            out.extend(block(p.res(first - t * step)))
        return tuple(out)

    first = (
        z + chain(p.block_b, i, q + 1) + (p.res(i - 1 - q * step),),
        z + (p.res(i + k),) + chain(p.block_c, i + k, q + 1),
    )
    second = (
        z + chain(p.block_c, i, q + 1) + (p.res(i - k - q * step),),
        z + (p.res(i + 1),) + chain(p.block_b, i + 1, q + 1),
    )
    return [first, second]


def _lemma_z2(p, b, rep):
    for i in range(1, p.n + 1):
        for q in range(b["max_q"] + 1):
            for which, (lhs, rhs) in enumerate(lemma_z2_words(p, i, q), start=1):
                x, y = _nf(p, [lhs, rhs])
                rep.checked += 1
                if x != y:
                    rep.fail(f"identity {which} i={i} q={q}: {_fmt(lhs)} = {_fmt(rhs)}", _fmt(x), _fmt(y))


def rule_catalog(p: Presentation, max_q: int, v: Word = ()) -> list[tuple[RuleKind, int, int, int, Word]]:
    """(kind, i, m, q, lhs) for every rule with q <= max_q and m <= max_q + 1."""
    out = []
    for kind in RuleKind:
        for i in allowed_indices(p, kind):
            if kind is RuleKind.R:
                for m in range(1, max_q + 2):
                    out.append((kind, i, m, 0, instantiate(p, kind, i, m=m)[0]))
            elif kind.gapped:
                for q in range(max_q + 1):
                    out.append((kind, i, 1, q, instantiate(p, kind, i, q=q, v=v)[0]))
            else:
                out.append((kind, i, 1, 0, instantiate(p, kind, i)[0]))
    return out


def _soundness(p, b, rep):
    rng = random.Random(b["seed"])
    catalog = rule_catalog(p, b["max_q"])
    cap = b.get("cap", oracle.DEFAULT_CAP)
    for _ in range(b["sample_count"]):
        kind, i, m, q, _ = rng.choice(catalog)
        v = _random_word(rng, p.n, rng.randint(0, b["max_v"]))
        lhs = instantiate(p, kind, i, m=m, q=q, v=v)[0]
        w = _random_word(rng, p.n, rng.randint(0, 2)) + lhs + _random_word(rng, p.n, rng.randint(0, 2))
        for r in find_redexes(p, w):
            left, right = rule_sides(p, w, r)
            rep.checked += 1
            try:
                ok = oracle.oracle_equal(p, left, right, cap)
            except oracle.Inconclusive:
                rep.fail(f"{r.describe()} in {_fmt(w)}", "congruent", "inconclusive (cap)")
                continue
            if not ok:
                rep.fail(f"{r.describe()} in {_fmt(w)}", "congruent", "not congruent")


def _unique_nf(p, b, rep):
    budget = b.get("budget", oracle.DEFAULT_BUDGET)
    n = p.n
    for ell in range(b["max_len"] + 1):
        labels = oracle.class_labels(p, ell, budget)
        nfs = kernels.all_normal_forms(n, p.k, ell)
        irreducible = Counter()
        for code in range(n**ell):
            target = nfs[code]
            if labels[target] != labels[code]:
                rep.fail(f"nf of {_fmt(oracle.decode(p, code, ell))}", "same class", _fmt(oracle.decode(p, target, ell)))
            if target == code:
                irreducible[labels[code]] += 1
        for code in range(n**ell):
            if labels[code] == code and irreducible[code] != 1:
                rep.fail(
                    f"class of {_fmt(oracle.decode(p, code, ell))}", "1 irreducible word", f"{irreducible[code]}"
                )
        rep.checked += n**ell


def _reducts(p: Presentation, w: Word, redexes: list[RuleInstance]) -> list[Word]:
    return [apply_rule(p, w, r) for r in redexes]


def _joinable(p: Presentation, w: Word, redexes: list[RuleInstance], rep: SuiteReport, label: str) -> None:
    reducts = _reducts(p, w, redexes)
    nfs = _nf(p, reducts)
    if len(set(nfs)) > 1:
        detail = "; ".join(f"{r.describe()}->{_fmt(x)}" for r, x in zip(redexes, nfs))
        rep.fail(f"{label} {_fmt(w)}", "one normal form", detail)


def gap_words(p: Presentation, max_v: int, per_length: int, seed: int = 0) -> list[Word]:
    """Gap words v with |v| <= max_v: every word of a length when there are
    at most ``per_length`` of them, otherwise a seeded sample of that size."""
    rng = random.Random(seed)
    out: list[Word] = []
    for L in range(max_v + 1):
        if p.n**L <= per_length:
            out.extend(itertools.product(range(1, p.n + 1), repeat=L))
        else:
            picked: set[Word] = set()
            while len(picked) < per_length:
                picked.add(_random_word(rng, p.n, L))
            out.extend(sorted(picked))
    return out


def overlap_words(p: Presentation, max_q: int, max_v: int, gaps_per_length: int = 16, seed: int = 0):
    """Words in which two rule left sides overlap.

    Yields (pair_kind, first_kind, second_kind, word, first_end) where
    pair_kind is "suffix-prefix" (the end of the first left side overlaps
    the start of the second) or "into-tail" (the end of the first overlaps
    the part just after the gap of a gapped second rule).
    """
    n = p.n
    catalog = rule_catalog(p, max_q)
    gaps = gap_words(p, max_v, gaps_per_length, seed)
    for k1, _, _, _, L1 in catalog:
        for k2, i2, m2, q2, L2 in catalog:
            for ov in range(1, min(len(L1), len(L2))):
                if L1[-ov:] == L2[:ov]:
                    yield "suffix-prefix", k1, k2, L1 + L2[ov:], len(L1)
    tails = [(k2, L2[n:]) for k2, i2, m2, q2, L2 in catalog if k2.gapped]
    for k1, _, _, _, L1 in catalog:
        for k2, tail in tails:
            for ov in range(1, min(len(L1), len(tail)) + 1):
                if L1[-ov:] == tail[:ov]:
                    for v0 in gaps:
                        head = p.z + tuple(v0)
                        yield "into-tail", k1, k2, head + L1 + tail[ov:], len(head) + len(L1)


def _confluence(p, b, rep):
    n = p.n
    # exhaustive part
    for ell in range(n, b["max_len"] + 1):
        for w in itertools.product(range(1, n + 1), repeat=ell):
            redexes = find_redexes(p, w, all_gaps=True)
            if len(redexes) >= 2:
                rep.checked += 1
                _joinable(p, w, redexes, rep, "exhaustive")
    # synthesized overlaps
    covered: set[tuple[str, RuleKind, RuleKind]] = set()
    seen: set[Word] = set()
    cache: dict[Word, list[RuleInstance]] = {}
    for pair_kind, k1, k2, w, end1 in overlap_words(p, b["max_q"], b["max_v"], b["gap_samples"], b["seed"]):
        if (pair_kind, k1, k2) in covered and w in seen:
            continue
        redexes = cache.get(w)
        if redexes is None:
            redexes = cache[w] = find_redexes(p, w, all_gaps=True)
        has1 = any(r.kind is k1 and r.match_end == end1 for r in redexes)
        has2 = any(r.kind is k2 and r.match_end == len(w) for r in redexes)
        if not (has1 and has2):
            continue
        covered.add((pair_kind, k1, k2))
        if w in seen:
            continue
        seen.add(w)
        rep.checked += 1
        _joinable(p, w, redexes, rep, f"overlap {GREEK[k1]},{GREEK[k2]}")
    # Some inventory pairs cannot overlap for particular (n, k); coverage is
    # therefore reported here and judged across presentations by the caller.
    rep.details["covered"] = sorted(_pair_label(*c) for c in covered)
    rep.details["uncovered_inventory"] = sorted(
        _pair_label(kind, k1, k2) for kind, k1, k2 in inventory() if (kind, k1, k2) not in covered
    )


def _pair_label(kind: str, k1: RuleKind, k2: RuleKind) -> str:
    return f"{kind} ({GREEK[k1]},{GREEK[k2]})"


def inventory() -> list[tuple[str, RuleKind, RuleKind]]:
    """Every overlap pair named in the confluence argument."""
    return [("suffix-prefix", a, b) for a, b in SUFFIX_PREFIX_PAIRS] + [
        ("into-tail", a, b) for a, b in INTO_TAIL_PAIRS
    ]


def uncovered_inventory(reports: list[SuiteReport]) -> list[str]:
    """Inventory pairs not covered by any of the given confluence reports."""
    covered = set()
    for r in reports:
        covered.update(r.details.get("covered", ()))
    return sorted(_pair_label(*c) for c in inventory() if _pair_label(*c) not in covered)


def _cancellativity(p, b, rep):
    rng = random.Random(b["seed"])
    n, z = p.n, p.z
    cap = b.get("cap", 10**5)
    for _ in range(b["sample_count"]):
        u = _random_word(rng, n, rng.randint(1, 2))
        w1 = _random_word(rng, n, rng.randint(0, n))
        rep.checked += 1
        # left: members z u w2 of the class of z u w1
        cls = oracle.congruence_class(p, z + u + w1, cap)
        head = z + u
        cands = [m[len(head):] for m in cls.members if m[: len(head)] == head]
        w2 = rng.choice(sorted_length_lex(cands))
        a, bb, c, d = _nf(p, [z + u + w1, z + u + w2, z + w1, z + w2])
        if a == bb and c != d:
            rep.fail(f"left u={_fmt(u)} w1={_fmt(w1)} w2={_fmt(w2)}", _fmt(c), _fmt(d))
        # right: members z w2 u of the class of z w1 u
        cls = oracle.congruence_class(p, z + w1 + u, cap)
        cands = [m[n : len(m) - len(u)] for m in cls.members if m[:n] == z and m[len(m) - len(u):] == u]
        w2 = rng.choice(sorted_length_lex(cands))
        a, bb, c, d = _nf(p, [z + w1 + u, z + w2 + u, z + w1, z + w2])
        if a == bb and c != d:
            rep.fail(f"right u={_fmt(u)} w1={_fmt(w1)} w2={_fmt(w2)}", _fmt(c), _fmt(d))
        # contrapositive on an unrelated word of the same length
        w3 = _random_word(rng, n, len(w1))
        c, d, e, f, g, h = _nf(p, [z + w1, z + w3, z + u + w1, z + u + w3, z + w1 + u, z + w3 + u])
        if c != d and (e == f or g == h):
            rep.fail(f"contrapositive u={_fmt(u)} w1={_fmt(w1)} w3={_fmt(w3)}", "distinct", "equal after u")


def _dfa_equivalence(p, b, rep):
    A = irreducible_dfa(p)
    B = theorem_language_dfa(p)
    ok, witness = dfa_equivalent(A, B)
    rep.checked += 1
    if not ok:
        rep.fail(
            "irreducible_dfa vs theorem_language_dfa",
            "equivalent",
            f"witness {_fmt(witness)} (irreducible accepts: {A.accepts(witness)}, theorem accepts: {B.accepts(witness)})",
        )


def _growth_vs_oracle(p, b, rep):
    A = irreducible_dfa(p)
    budget = b.get("budget", oracle.DEFAULT_BUDGET)
    for ell in range(b["max_len"] + 1):
        got = count_words(A, ell)
        want = oracle.count_classes(p, ell, budget)
        rep.checked += 1
        if got != want:
            rep.fail(f"length {ell}", want, got)


_RUNNERS: dict[str, Callable] = {
    "centrality": _centrality,
    "lemma-z2": _lemma_z2,
    "soundness": _soundness,
    "unique-nf": _unique_nf,
    "confluence": _confluence,
    "cancellativity": _cancellativity,
    "dfa-equivalence": _dfa_equivalence,
    "growth-vs-oracle": _growth_vs_oracle,
}


def run_suite(p: Presentation, suite: str, bounds: dict | None = None) -> SuiteReport:
    if suite not in _RUNNERS:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    b = default_bounds(p)
    b.update({key: val for key, val in (bounds or {}).items() if val is not None})
    rep = SuiteReport(suite, p.n, p.k, b)
    t0 = time.perf_counter()
    _RUNNERS[suite](p, b, rep)
    rep.elapsed = time.perf_counter() - t0
    rep.failures.sort()
    return rep
