"""Exact growth series of a regular language.

Coefficients come from the transfer matrix. The generating function is
recovered from them with Berlekamp-Massey over the rationals: a DFA with s
states yields a sequence obeying a linear recurrence of order at most s, so
2s + 1 terms determine the minimal recurrence, hence the reduced rational
function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .automata import Dfa, count_sequence


@dataclass(frozen=True)
class GrowthSeries:
    coefficients: tuple[int, ...]
    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def expand(self, terms: int) -> list[int]:
        return series_expand(self.numerator, self.denominator, terms)

    def satisfies_recurrence(self) -> bool:
        """sum_t den[t] * a[m - t] == 0 for every m >= len(num)."""
        a = self.coefficients
        d = self.denominator
        for m in range(len(self.numerator), len(a)):
            if sum(d[t] * a[m - t] for t in range(len(d)) if m - t >= 0) != 0:
                return False
        return True


def berlekamp_massey(seq: Sequence[int]) -> list[Fraction]:
    """Connection polynomial C (C[0] = 1) of the shortest recurrence
    sum_t C[t] a[m-t] = 0 generating ``seq``."""
    s = [Fraction(x) for x in seq]
    C = [Fraction(1)]
    B = [Fraction(1)]
    L = 0
    shift = 1
    b = Fraction(1)
    for m in range(len(s)):
        d = s[m]
        for t in range(1, L + 1):
            d += C[t] * s[m - t]
        if d == 0:
            shift += 1
            continue
        coef = d / b
        T = C[:]
        if len(C) < len(B) + shift:
            C = C + [Fraction(0)] * (len(B) + shift - len(C))
        for t, x in enumerate(B):
            C[t + shift] -= coef * x
        if 2 * L <= m:
            L = m + 1 - L
            B = T
            b = d
            shift = 1
        else:
            shift += 1
    C = C[: L + 1] + [Fraction(0)] * max(0, L + 1 - len(C))
    return C


def series_expand(num: Sequence[int], den: Sequence[int], terms: int) -> list[int]:
    """Power series coefficients of num/den; den[0] must divide exactly."""
    if not den or den[0] == 0:
        raise ValueError("denominator needs a nonzero constant term")
    out: list[int] = []
    for m in range(terms):
        acc = Fraction(num[m] if m < len(num) else 0)
        for t in range(1, min(m, len(den) - 1) + 1):
            acc -= den[t] * out[m - t]
        acc /= den[0]
        if acc.denominator != 1:
            raise ValueError("expansion is not integral")
        out.append(int(acc))
    return out


def _trim(poly: list) -> list:
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def rational_from_coefficients(coeffs: Sequence[int], order_bound: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if len(coeffs) < 2 * order_bound + 1:
        raise ValueError(f"need at least {2 * order_bound + 1} coefficients")
    C = berlekamp_massey(coeffs)
    L = len(C) - 1
    # numerator = (C * A) mod x^L
    N = []
    for m in range(L):
        N.append(sum(C[t] * coeffs[m - t] for t in range(0, m + 1)))
    scale = lcm(*(x.denominator for x in C + N)) if (C + N) else 1
    num = [int(x * scale) for x in N]
    den = [int(x * scale) for x in C]
    g = 0
    for x in num + den:
        g = gcd(g, x)
    if g > 1:
        num = [x // g for x in num]
        den = [x // g for x in den]
    if den[0] < 0:
        num = [-x for x in num]
        den = [-x for x in den]
    return tuple(_trim(num or [0])), tuple(_trim(den))


def growth_series(A: Dfa, max_length: int) -> GrowthSeries:
    """Counts for lengths 0..max_length and the generating function."""
    if max_length < 0:
        raise ValueError("max_length must be >= 0")
    s = A.state_count
    needed = max(max_length, 2 * s + 1)
    coeffs = count_sequence(A, needed)
    num, den = rational_from_coefficients(coeffs, s)
    if series_expand(num, den, len(coeffs)) != coeffs:
        raise ArithmeticError("rational generating function does not reproduce the counts")
    return GrowthSeries(tuple(coeffs[: max_length + 1]), num, den)
