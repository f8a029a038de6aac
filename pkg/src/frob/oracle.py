"""Ground truth by counting representations directly.

``d(n; A)`` is the number of nonnegative solutions of
``a_1 x_1 + ... + a_k x_k = n``.  Everything here follows from the table of
those counts and nothing else, so it can adjudicate the Apéry-set formulas
and the closed forms.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .errors import DomainError, EmptySet, InvalidWeight

__all__ = [
    "Instance",
    "DenumerantTable",
    "table_for",
    "denumerant",
    "naive_denumerant",
    "nonrep_set_p",
    "oracle_gp",
    "oracle_np",
    "oracle_sp",
    "oracle_power_sum",
    "oracle_weighted_sum",
    "g_star",
]


@dataclass(frozen=True)
class Instance:
    """A generator set with gcd 1, stored sorted ascending.

    Input order does not matter; repeated generators are rejected.
    """

    generators: tuple[int, ...]

    def __post_init__(self):
        gens = tuple(int(a) for a in self.generators)
        if len(gens) < 2:
            raise DomainError("need at least two generators")
        if any(a < 1 for a in gens):
            raise DomainError(f"generators must be positive: {gens}")
        srt = tuple(sorted(gens))
        if len(set(srt)) != len(srt):
            raise DomainError(f"generators must be distinct: {gens}")
        if gcd(*srt) != 1:
            raise DomainError(f"gcd of generators must be 1: {gens}")
        object.__setattr__(self, "generators", srt)

    @classmethod
    def of(cls, *gens: int) -> "Instance":
        return cls(tuple(gens))

    @property
    def a1(self) -> int:
        return self.generators[0]

    @property
    def k(self) -> int:
        return len(self.generators)

    def __str__(self):
        return ",".join(map(str, self.generators))


def _as_instance(A) -> Instance:
    if isinstance(A, Instance):
        return A
    return Instance(tuple(A))


class DenumerantTable:
    """Incrementally extended coin-change counts for one instance.

    One row per generator prefix: ``rows[j][n]`` counts representations of
    ``n`` using the first ``j+1`` generators.  Extension is single-writer
    under a lock; entries below :attr:`horizon` never change afterwards.
    """

    def __init__(self, instance, horizon: int = 64):
        self.instance = _as_instance(instance)
        self._rows: list[list[int]] = [[] for _ in self.instance.generators]
        self._lock = threading.Lock()
        self._extend_to(max(horizon, 1))

    @property
    def horizon(self) -> int:
        """Number of computed entries; counts are known for n < horizon."""
        return len(self._rows[-1])

    @property
    def counts(self) -> list[int]:
        return self._rows[-1]

    def _extend_to(self, size: int) -> None:
        with self._lock:
            start = len(self._rows[0])
            if size <= start:
                return
            gens = self.instance.generators
            first = self._rows[0]
            a = gens[0]
            for n in range(start, size):
                first.append(1 if n % a == 0 else 0)
            for j in range(1, len(gens)):
                prev, row, a = self._rows[j - 1], self._rows[j], gens[j]
                for n in range(start, size):
                    row.append(prev[n] + (row[n - a] if n >= a else 0))

    def ensure(self, n: int) -> None:
        """Make ``self[n]`` available, doubling the horizon as needed."""
        h = self.horizon
        if n < h:
            return
        while h <= n:
            h *= 2
        self._extend_to(h)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n >= self.horizon:
            self.ensure(n)
        return self._rows[-1][n]


@lru_cache(maxsize=512)
def _shared_table(instance: Instance) -> DenumerantTable:
    return DenumerantTable(instance)


def table_for(A, table: DenumerantTable | None = None) -> DenumerantTable:
    """Return ``table`` if given, else a process-wide table for ``A``."""
    if table is not None:
        return table
    return _shared_table(_as_instance(A))


def denumerant(n: int, A, table: DenumerantTable | None = None) -> int:
    if n < 0:
        raise DomainError("n must be >= 0")
    return table_for(A, table)[n]


def naive_denumerant(n: int, gens) -> int:
    """Count solutions by recursion on the last generator (reference only)."""
    gens = tuple(gens)

    @lru_cache(maxsize=None)
    def count(m: int, j: int) -> int:
        a = gens[j]
        if j == 0:
            return 1 if m % a == 0 else 0
        return sum(count(m - x * a, j - 1) for x in range(m // a + 1))

    return count(n, len(gens) - 1)


def nonrep_set_p(A, p: int, table: DenumerantTable | None = None) -> list[int]:
    """All ``n >= 0`` with ``d(n; A) <= p``, ascending.

    The scan stops after ``a_1`` consecutive values with ``d >= p+1``: since
    ``d(n + a_1) >= d(n)``, every later value is then saturated as well.
    """
    if p < 0:
        raise DomainError("p must be >= 0")
    t = table_for(A, table)
    a1 = t.instance.a1
    out = []
    run = 0
    n = 0
    while run < a1:
        if t[n] <= p:
            out.append(n)
            run = 0
        else:
            run += 1
        n += 1
    return out


def _nonempty(A, p, table) -> list[int]:
    s = nonrep_set_p(A, p, table)
    if not s:
        raise EmptySet(f"no n has at most {p} representations in ({_as_instance(A)})")
    return s


def oracle_gp(A, p: int, table: DenumerantTable | None = None) -> int:
    return _nonempty(A, p, table)[-1]


def oracle_np(A, p: int, table: DenumerantTable | None = None) -> int:
    return len(_nonempty(A, p, table))


def oracle_sp(A, p: int, table: DenumerantTable | None = None) -> int:
    return sum(_nonempty(A, p, table))


def oracle_power_sum(A, p: int, mu: int, table: DenumerantTable | None = None) -> int:
    if mu < 1:
        raise DomainError("mu must be >= 1")
    return sum(n**mu for n in _nonempty(A, p, table))


def oracle_weighted_sum(
    A, p: int, lam: int, mu: int, table: DenumerantTable | None = None
) -> int:
    if lam in (0, 1):
        raise InvalidWeight(f"lambda must not be 0 or 1, got {lam}")
    if mu < 1:
        raise DomainError("mu must be >= 1")
    return sum(lam**n * n**mu for n in _nonempty(A, p, table))


def g_star(A, p: int, table: DenumerantTable | None = None) -> int | None:
    """Largest ``n`` with exactly ``p`` representations, or ``None``.

    Every ``n > g_p`` has at least ``p+1`` representations, so the search
    stops at ``g_p``.
    """
    if p < 0:
        raise DomainError("p must be >= 0")
    t = table_for(A, table)
    try:
        top = oracle_gp(A, p, t)
    except EmptySet:
        return None
    for n in range(top, -1, -1):
        if t[n] == p:
            return n
    return None
