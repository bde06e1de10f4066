"""Reference implementations of the hot loops, in plain Python.

Signatures match the compiled ``_ckernels`` module exactly.
"""

from __future__ import annotations

from array import array


def class_labels(n: int, length: int, relations) -> array:
    """Union-find over all n**length words with relation-replacement edges.

    Each word is joined to the word obtained by replacing a relation-word
    factor with the first relation word; that suffices because all relation
    words are mutually equal. Labels are the minimum code in each class.
    """
    size = n ** length
    parent = array("q", range(size))
    rels = [tuple(r) for r in relations]
    rel_codes = {}
    for r in rels:
        c = 0
        for a in r:
            c = c * n + (a - 1)
        rel_codes[c] = r
    base_code = min(rel_codes)
    window = n ** n

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for code in range(size):
        # scan every length-n window; position s counted from the right
        for s in range(length - n + 1):
            shift = n ** s
            f = (code // shift) % window
            if f in rel_codes and f != base_code:
                other = code + (base_code - f) * shift
                ra, rb = find(code), find(other)
                if ra != rb:
                    if ra < rb:
                        parent[rb] = ra
                    else:
                        parent[ra] = rb
    for code in range(size):
        parent[code] = find(code)
    return parent


def count_roots(labels) -> int:
    return sum(1 for x, lab in enumerate(labels) if x == lab)


def normal_forms(n: int, k: int, words) -> list[tuple[int, ...]]:
    from ..presentation import Presentation
    from ..rewrite import normal_form

    p = Presentation(n, k)
    return [normal_form(p, w) for w in words]


def all_normal_forms(n: int, k: int, length: int) -> array:
    """Code of the normal form of every word of the given length."""
    from ..presentation import Presentation
    from ..rewrite import normal_form

    p = Presentation(n, k)
    out = array("q", bytes(8 * n ** length))
    for code in range(n ** length):
        c = code
        w = [0] * length
        for t in range(length - 1, -1, -1):
            c, d = divmod(c, n)
            w[t] = d + 1
        nf = normal_form(p, w)
        c = 0
        for a in nf:
            c = c * n + (a - 1)
        out[code] = c
    return out
