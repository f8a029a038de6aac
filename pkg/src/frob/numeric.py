"""Exact special-number tables: Bernoulli, Eulerian, Stirling (second kind).

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`,
which is always stored in lowest terms with a positive denominator.  Tables
grow on demand and are guarded by one lock so concurrent readers never see a
half-built row.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

from .errors import InternalInconsistency

__all__ = [
    "bernoulli",
    "eulerian",
    "stirling2",
    "falling_factorial",
    "to_int",
]

_lock = threading.Lock()

_bernoulli: list[Fraction] = [Fraction(1)]
_eulerian: list[list[int]] = [[1]]
_stirling2: list[list[int]] = [[1]]


def to_int(x: Fraction | int, what: str = "value") -> int:
    """Convert an exact rational to ``int``; raise if it is not integral."""
    if isinstance(x, int):
        return x
    if x.denominator != 1:
        raise InternalInconsistency(f"{what} is not an integer: {x}")
    return x.numerator


def bernoulli(k: int) -> Fraction:
    """B_k with B_1 = -1/2 (generating function x/(e^x - 1))."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k < len(_bernoulli):
        return _bernoulli[k]
    with _lock:
        # sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1
        for n in range(len(_bernoulli), k + 1):
            if n > 1 and n % 2:
                _bernoulli.append(Fraction(0))
                continue
            s = sum(comb(n + 1, j) * _bernoulli[j] for j in range(n))
            _bernoulli.append(-s / (n + 1))
    return _bernoulli[k]


def _grow_eulerian(n: int) -> None:
    with _lock:
        while len(_eulerian) <= n:
            r = len(_eulerian)
            prev = _eulerian[-1]
            # <r m> = (m+1)<r-1 m> + (r-m)<r-1 m-1>
            row = []
            for m in range(r):
                left = prev[m] if m < len(prev) else 0
                right = prev[m - 1] if 0 < m <= len(prev) else 0
                row.append((m + 1) * left + (r - m) * right)
            _eulerian.append(row)


def eulerian(n: int, m: int) -> int:
    """Eulerian number <n m>; zero outside 0 <= m < max(n, 1)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if m < 0 or m >= max(n, 1):
        return 0
    if n >= len(_eulerian):
        _grow_eulerian(n)
    return _eulerian[n][m]


def _grow_stirling2(n: int) -> None:
    with _lock:
        while len(_stirling2) <= n:
            r = len(_stirling2)
            prev = _stirling2[-1]
            row = [0] * (r + 1)
            for m in range(1, r + 1):
                row[m] = m * (prev[m] if m < r else 0) + prev[m - 1]
            _stirling2.append(row)


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind {n m}."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be >= 0")
    if m > n:
        return 0
    if n >= len(_stirling2):
        _grow_stirling2(n)
    return _stirling2[n][m]


def falling_factorial(x: int, m: int) -> int:
    out = 1
    for i in range(m):
        out *= x - i
    return out


def eulerian_explicit(n: int, m: int) -> int:
    """Alternating-sum formula for <n m>, kept as an independent check."""
    if m < 0:
        return 0
    return sum((-1) ** k * comb(n + 1, k) * (m - k + 1) ** n for k in range(m + 1))


def stirling2_explicit(n: int, m: int) -> int:
    s = sum((-1) ** i * comb(m, i) * (m - i) ** n for i in range(m + 1))
    q, r = divmod(s, factorial(m))
    if r:
        raise InternalInconsistency(f"stirling2({n}, {m}) not integral")
    return q
