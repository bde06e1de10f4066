# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_pure``.

The reduction engine here re-implements the rule matching of
``dihedral_monoid.rewrite`` on C buffers and applies redexes in the same
priority order (T < R < H < D < E < S < U, then start, q, gap, index).
"""

from cpython cimport array
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

import array as _array

cdef enum:
    T = 0
    R = 1
    H = 2
    D = 3
    E = 4
    S = 5
    U = 6


cdef inline int res(int a, int n) nogil:
    a = (a - 1) % n
    if a < 0:
        a += n
    return a + 1


cdef inline long long _find(long long[:] parent, long long x) noexcept nogil:
    cdef long long root = x, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[x] != root:
        nxt = parent[x]
        parent[x] = root
        x = nxt
    return root


def class_labels(int n, int length, relations):
    cdef long long size = 1, window = 1, shift, f, other, base_code, code, ra, rb, c
    cdef int s, t
    for t in range(length):
        size *= n
    for t in range(n):
        window *= n
    cdef array.array parent_arr = _array.array("q", range(size))
    cdef long long[:] parent = parent_arr
    # relation words as codes; membership via a byte table over all n**n windows
    cdef array.array is_rel_arr = _array.array("b", bytes(window))
    cdef signed char[:] is_rel = is_rel_arr
    codes = []
    for r in relations:
        c = 0
        for a in r:
            c = c * n + (a - 1)
        codes.append(c)
        is_rel[c] = 1
    base_code = min(codes)
    cdef array.array shifts_arr = _array.array("q", [0] * max(length - n + 1, 1))
    cdef long long[:] shifts = shifts_arr
    shift = 1
    for s in range(length - n + 1):
        shifts[s] = shift
        shift *= n
    with nogil:
        for code in range(size):
            for s in range(length - n + 1):
                f = (code // shifts[s]) % window
                if is_rel[f] and f != base_code:
                    other = code + (base_code - f) * shifts[s]
                    ra = _find(parent, code)
                    rb = _find(parent, other)
                    if ra != rb:
                        if ra < rb:
                            parent[rb] = ra
                        else:
                            parent[ra] = rb
        for code in range(size):
            parent[code] = _find(parent, code)
    return parent_arr


def count_roots(labels):
    cdef long long[:] lab = labels
    cdef long long x, total = 0
    for x in range(lab.shape[0]):
        if lab[x] == x:
            total += 1
    return int(total)


cdef class _Engine:
    cdef int n, k, step, L
    cdef int *dok
    cdef int *eok
    cdef int *tmp
    cdef int tmp_cap

    def __cinit__(self, int n, int k):
        cdef int i
        self.n = n
        self.k = k
        self.step = k + 1
        self.L = n - 2
        self.dok = <int *> malloc((n + 1) * sizeof(int))
        self.eok = <int *> malloc((n + 1) * sizeof(int))
        self.tmp = NULL
        self.tmp_cap = 0
        for i in range(n + 1):
            self.dok[i] = 0
            self.eok[i] = 0
        for i in range(n - k + 1, n):
            self.dok[i] = 1
        for i in range(0, n - k + 1):
            self.eok[res(i, n)] = 1

    def __dealloc__(self):
        free(self.dok)
        free(self.eok)
        if self.tmp != NULL:
            free(self.tmp)

    cdef void _ensure_tmp(self, int size):
        if size > self.tmp_cap:
            if self.tmp != NULL:
                free(self.tmp)
            self.tmp = <int *> malloc(size * sizeof(int))
            self.tmp_cap = size

    cdef inline bint _block_at(self, int *w, int pos, int idx, bint use_b) noexcept nogil:
        cdef int t, mult = 1 if use_b else self.k
        for t in range(1, self.n - 1):
            if w[pos + t - 1] != res(idx + t * mult, self.n):
                return 0
        return 1

    cdef bint _reduce_once(self, int *w, int N):
        """Apply the highest-priority redex; return False if irreducible."""
        cdef int n = self.n, k = self.k, L = self.L, step = self.step
        cdef int s, t, a, j, m, u, i, kind, q, pos, idx, zs, shift, cnt
        cdef bint ok, use_b
        cdef int best_kind = -1, best_start = 0, best_q = 0, best_v = 0, best_i = 0, best_end = 0, best_t = 0
        if N < n:
            return 0
        # T, then R, then H: first kind with any instance, smallest start
        for kind in range(3):
            for s in range(N - n + 1):
                a = w[s]
                if kind == T:
                    if a == 1:
                        continue
                    ok = 1
                    for t in range(1, n):
                        if w[s + t] != res(a + t, n):
                            ok = 0
                            break
                    if ok:
                        for t in range(n):
                            w[s + t] = t + 1
                        return 1
                elif kind == R:
                    if a == 1 or w[s + 1] != 1:
                        continue
                    u = s + 1
                    while u < N and w[u] == 1:
                        u += 1
                    m = u - s - 1
                    if u + n - 1 > N:
                        continue
                    ok = 1
                    for t in range(n - 1):
                        if w[u + t] != t + 2:
                            ok = 0
                            break
                    if ok:
                        j = a
                        for t in range(n):
                            w[s + t] = t + 1
                        w[s + n] = j
                        for t in range(m - 1):
                            w[s + n + 1 + t] = 1
                        return 1
                else:
                    ok = 1
                    for t in range(1, n):
                        if w[s + t] != res(a + t * k, n):
                            ok = 0
                            break
                    if ok:
                        for t in range(n):
                            w[s + t] = t + 1
                        return 1

        # gapped families: closest z occurrence ending at or before the tail start
        cdef int last_z = -1
        cdef int *zclose = <int *> malloc((N + 1) * sizeof(int))
        for t in range(N + 1):
            zclose[t] = -1
        s = 0
        while s + n <= N:
            if w[s] == 1:
                ok = 1
                for t in range(1, n):
                    if w[s + t] != t + 1:
                        ok = 0
                        break
                if ok and s + n <= N:
                    zclose[s + n] = s
            s += 1
        for t in range(N + 1):
            if zclose[t] >= 0:
                last_z = zclose[t]
            zclose[t] = last_z

        for kind in range(D, U + 1):
            for t in range(N):
                zs = zclose[t]
                if zs < 0:
                    continue
                a = w[t]
                if kind == D:
                    i = res(a - 1, n)
                    if not self.dok[i]:
                        continue
                    pos = t
                    use_b = 1
                    shift = 1
                elif kind == E:
                    i = res(a - k, n)
                    if not self.eok[i]:
                        continue
                    pos = t
                    use_b = 0
                    shift = k
                elif kind == S:
                    i = a
                    pos = t + 1
                    use_b = 1
                    shift = 1
                else:
                    i = a
                    pos = t + 1
                    use_b = 0
                    shift = k
                idx = i
                q = 0
                while pos + L < N:
                    if not self._block_at(w, pos, idx, use_b):
                        break
                    pos += L
                    if w[pos] == res(idx - shift, n):
                        # key (start, q, gap, i); first hit per t has the least q
                        if (best_kind < 0 or zs < best_start
                                or (zs == best_start and (q < best_q
                                    or (q == best_q and (t - zs - n < best_v
                                        or (t - zs - n == best_v and i < best_i)))))):
                            best_kind = kind
                            best_start = zs
                            best_q = q
                            best_v = t - zs - n
                            best_i = i
                            best_end = pos + 1
                            best_t = t
                        break
                    idx = res(idx - step, n)
                    q += 1
            if best_kind >= 0:
                break
        free(zclose)
        if best_kind < 0:
            return 0

        i = best_i
        q = best_q
        t = best_t
        if best_kind == D or best_kind == E:
            # tail [t, end) becomes a_x followed by q+1 blocks
            pos = t
            if best_kind == D:
                w[pos] = res(i + k, n)
                idx = res(i + k, n)
                use_b = 0
            else:
                w[pos] = res(i + 1, n)
                idx = res(i + 1, n)
                use_b = 1
            pos += 1
            for cnt in range(q + 1):
                self._write_block(w, pos, idx, use_b)
                pos += L
                idx = res(idx - step, n)
            return 1

        # S / U: z v tail -> a_1^2 (a_2..a_n)^2 v chain(q)
        zs = best_start
        cdef int vlen = best_v
        self._ensure_tmp(vlen + 1)
        memcpy(self.tmp, w + zs + n, vlen * sizeof(int))
        pos = zs
        w[pos] = 1
        w[pos + 1] = 1
        pos += 2
        for cnt in range(2):
            for t in range(2, n + 1):
                w[pos] = t
                pos += 1
        memcpy(w + pos, self.tmp, vlen * sizeof(int))
        pos += vlen
        if best_kind == S:
            idx = res(i + k - step, n)
            use_b = 0
        else:
            idx = res(i + 1 - step, n)
            use_b = 1
        for cnt in range(q):
            self._write_block(w, pos, idx, use_b)
            pos += L
            idx = res(idx - step, n)
        return 1

    cdef inline void _write_block(self, int *w, int pos, int idx, bint use_b):
        cdef int t, mult = 1 if use_b else self.k
        for t in range(1, self.n - 1):
            w[pos + t - 1] = res(idx + t * mult, self.n)

    cdef void reduce(self, int *w, int N):
        while self._reduce_once(w, N):
            pass


def normal_forms(int n, int k, words):
    cdef _Engine eng = _Engine(n, k)
    cdef int N, t
    cdef int *buf
    out = []
    for word in words:
        N = len(word)
        buf = <int *> malloc((N + 1) * sizeof(int))
        try:
            for t in range(N):
                buf[t] = word[t]
            eng.reduce(buf, N)
            out.append(tuple([buf[t] for t in range(N)]))
        finally:
            free(buf)
    return out


def all_normal_forms(int n, int k, int length):
    cdef _Engine eng = _Engine(n, k)
    cdef long long size = 1, code, c
    cdef int t
    for t in range(length):
        size *= n
    cdef array.array out_arr = _array.array("q", bytes(8 * size))
    cdef long long[:] out = out_arr
    cdef int *buf = <int *> malloc((length + 1) * sizeof(int))
    try:
        for code in range(size):
            c = code
            for t in range(length - 1, -1, -1):
                buf[t] = <int> (c % n) + 1
                c //= n
            eng.reduce(buf, length)
            c = 0
            for t in range(length):
                c = c * n + (buf[t] - 1)
            out[code] = c
    finally:
        free(buf)
    return out_arr
