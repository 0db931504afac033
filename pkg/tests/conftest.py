"""Shared independent oracles.

Everything here is deliberately naive and separate from the library code:
recurrence counters, brute-force enumerations, and product formulas that the
main implementations are checked against.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def partition_count_oracle(n: int, maxpart: int | None = None) -> int:
    """p(n) by the elementary bounded-largest-part recurrence."""
    if maxpart is None:
        maxpart = n
    if n == 0:
        return 1
    if maxpart == 0:
        return 0
    return sum(
        partition_count_oracle(n - k, min(k, n - k)) for k in range(1, maxpart + 1)
    )


def syt_count_oracle(lam: tuple[int, ...]) -> int:
    """Standard Young tableaux by brute-force growth: add cells 1..n one at
    a time, keeping the shape a partition at every step."""
    n = sum(lam)

    def grow(shape: tuple[int, ...], k: int) -> int:
        if k == n:
            return 1
        total = 0
        for i in range(len(lam)):
            row = shape[i] if i < len(shape) else 0
            if i == 0:
                above = n + 1
            else:
                above = shape[i - 1] if i - 1 < len(shape) else 0
            if row < lam[i] and row < above:
                new = list(shape) + [0] * (i + 1 - len(shape))
                new[i] += 1
                total += grow(tuple(new), k + 1)
        return total

    return grow((), 0)


def weyl_dimension_oracle(lam: tuple[int, ...], d: int) -> int:
    """GL_d irreducible dimension by the Weyl product formula."""
    if len(lam) > d:
        return 0
    l = list(lam) + [0] * (d - len(lam))
    num = den = 1
    for i in range(d):
        for j in range(i + 1, d):
            num *= l[i] - l[j] + j - i
            den *= j - i
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def bell_oracle(n: int) -> int:
    """Bell numbers by the binomial recurrence."""
    if n == 0:
        return 1
    return sum(comb(n - 1, k) * bell_oracle(k) for k in range(n))


def set_partitions_brute(p: int) -> list[tuple[tuple[int, ...], ...]]:
    """Set partitions of {0..p-1} by filtering restricted-growth strings."""
    out = []
    for code in itertools.product(range(p), repeat=p):
        if p and code[0] != 0:
            continue
        if any(code[i] > max(code[:i], default=-1) + 1 for i in range(1, p)):
            continue
        blocks: dict[int, list[int]] = {}
        for x, b in enumerate(code):
            blocks.setdefault(b, []).append(x)
        out.append(tuple(tuple(b) for b in blocks.values()))
    return out if p else [()]


def series_coefficient_oracle(factors: list[tuple[int, int]], n: int) -> int:
    """Coefficient of u^n in prod (1 - u^step)^(-mult), multiplied out
    term by term with plain lists."""
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[0] = Fraction(1)
    for step, mult in factors:
        for _ in range(mult):
            # multiply by 1/(1-u^step) = 1 + u^step + u^{2 step} + ...
            new = list(coeffs)
            for i in range(step, n + 1):
                new[i] += new[i - step]
            coeffs = new
    assert coeffs[n].denominator == 1
    return int(coeffs[n])
