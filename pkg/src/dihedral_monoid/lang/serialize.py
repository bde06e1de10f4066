"""Text exports of DFAs: a JSON document and a Graphviz description."""

from __future__ import annotations

import json

from .automata import Dfa


def dfa_to_dict(A: Dfa, n: int, k: int, which: str) -> dict:
    return {
        "n": n,
        "k": k,
        "which": which,
        "states": A.state_count,
        "start": A.start,
        "accepting": sorted(A.accepting),
        "transitions": [list(t) for t in sorted(A.transitions())],
    }


def dfa_to_json(A: Dfa, n: int, k: int, which: str) -> str:
    return json.dumps(dfa_to_dict(A, n, k, which), indent=1, sort_keys=True) + "\n"


def dfa_from_dict(doc: dict) -> Dfa:
    size = doc["states"]
    n = doc["n"]
    delta = [[None] * n for _ in range(size)]
    for s, a, t in doc["transitions"]:
        delta[s][a - 1] = t
    if any(t is None for row in delta for t in row):
        raise ValueError("transition map is not total")
    return Dfa(n, tuple(map(tuple, delta)), doc["start"], frozenset(doc["accepting"]))


def dfa_to_dot(A: Dfa, n: int, k: int, which: str) -> str:
    lines = [f'digraph "{which}_n{n}_k{k}" {{', "  rankdir=LR;", '  __start [shape=point, label=""];']
    for s in range(A.state_count):
        shape = "doublecircle" if s in A.accepting else "circle"
        lines.append(f'  {s} [shape={shape}, label="{s}"];')
    lines.append(f"  __start -> {A.start};")
    # one edge per (source, target) with the letters joined
    grouped: dict[tuple[int, int], list[int]] = {}
    for s, a, t in A.transitions():
        grouped.setdefault((s, t), []).append(a)
    for (s, t), letters in sorted(grouped.items()):
        label = ",".join(str(a) for a in sorted(letters))
        lines.append(f'  {s} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
