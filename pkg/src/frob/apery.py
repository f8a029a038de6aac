"""p-Apéry sets and the formulas that turn them into g_p, n_p, s_p and sums.

For each residue ``i`` mod ``a_1`` the p-Apéry element ``m_i`` is the least
integer congruent to ``i`` having at least ``p+1`` representations.  The
elements below ``m_i`` in that class are exactly the ones counted by
``n_p``, which is what makes every evaluator here a finite sum over ``a_1``
values.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Optional

from .errors import DomainError, EmptySet, InternalInconsistency, InvalidWeight
from .numeric import bernoulli, eulerian, to_int
from .oracle import DenumerantTable, Instance, _as_instance, table_for

__all__ = [
    "AperySet",
    "QueryResult",
    "apery_set",
    "gp_from_apery",
    "np_from_apery",
    "sp_from_apery",
    "power_sum",
    "weighted_power_sum",
    "check_weight",
]

PROVENANCES = ("closed_form", "apery", "oracle")
KINDS = ("gp", "np", "sp", "power_sum", "weighted_sum")


@dataclass(frozen=True)
class AperySet:
    instance: Instance
    p: int
    elements: tuple[int, ...]
    coords: Optional[tuple[tuple[int, int], ...]] = None

    @property
    def a1(self) -> int:
        return self.instance.a1

    def validate(self, table: DenumerantTable | None = None) -> None:
        """Check residue coverage, membership and minimality against the oracle."""
        a1 = self.a1
        if len(self.elements) != a1:
            raise InternalInconsistency(f"expected {a1} elements, got {len(self.elements)}")
        t = table_for(self.instance, table)
        for i, m in enumerate(self.elements):
            if m % a1 != i:
                raise InternalInconsistency(f"m[{i}] = {m} is not in residue class {i}")
            if t[m] < self.p + 1:
                raise InternalInconsistency(f"m[{i}] = {m} has only {t[m]} representations")
            if m == 0:
                if (self.p, i) != (0, 0):
                    raise InternalInconsistency("0 is an Apéry element only for p = 0")
            elif m >= a1 and t[m - a1] > self.p:
                raise InternalInconsistency(f"m[{i}] = {m} is not minimal in its class")


@dataclass(frozen=True)
class QueryResult:
    kind: str
    value: Optional[int]
    provenance: str
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")


def apery_set(A, p: int, table: DenumerantTable | None = None) -> AperySet:
    """Scan n = 0, 1, 2, ... until every residue class has its least witness."""
    if p < 0:
        raise DomainError("p must be >= 0")
    inst = _as_instance(A)
    t = table_for(inst, table)
    a1 = inst.a1
    found: list[Optional[int]] = [None] * a1
    missing = a1
    n = 0
    while missing:
        i = n % a1
        if found[i] is None and t[n] > p:
            found[i] = n
            missing -= 1
        n += 1
    return AperySet(inst, p, tuple(found))


def _require_nonempty(S: AperySet) -> None:
    # m_i == i for every class means no n has at most p representations
    if max(S.elements) < S.a1:
        raise EmptySet(f"no n has at most {S.p} representations in ({S.instance})")


def gp_from_apery(S: AperySet) -> int:
    _require_nonempty(S)
    return max(S.elements) - S.a1


def np_from_apery(S: AperySet) -> int:
    _require_nonempty(S)
    a1 = S.a1
    val = Fraction(sum(S.elements), a1) - Fraction(a1 - 1, 2)
    return to_int(val, "n_p from Apéry set")


def sp_from_apery(S: AperySet) -> int:
    _require_nonempty(S)
    a1 = S.a1
    m = S.elements
    val = (
        Fraction(sum(x * x for x in m), 2 * a1)
        - Fraction(sum(m), 2)
        + Fraction(a1 * a1 - 1, 12)
    )
    return to_int(val, "s_p from Apéry set")


def power_sum(S: AperySet, mu: int) -> int:
    """Sum of n**mu over all n with at most p representations.

    Uses the Bernoulli-number expansion in the Apéry elements.  ``mu == 0``
    is the count and is delegated to :func:`np_from_apery`.
    """
    if mu < 0:
        raise DomainError("mu must be >= 0")
    if mu == 0:
        return np_from_apery(S)
    _require_nonempty(S)
    a1 = S.a1
    m = S.elements
    total = Fraction(0)
    for kappa in range(mu + 1):
        b = bernoulli(kappa)
        if not b:
            continue
        e = mu + 1 - kappa
        total += comb(mu + 1, kappa) * b * Fraction(a1) ** (kappa - 1) * sum(x**e for x in m)
    total /= mu + 1
    total += bernoulli(mu + 1) / (mu + 1) * (a1 ** (mu + 1) - 1)
    return to_int(total, f"power sum (mu={mu})")


def check_weight(lam: int, a1: int) -> None:
    if lam in (0, 1):
        raise InvalidWeight(f"lambda must not be 0 or 1, got {lam}")
    if lam**a1 == 1:
        raise InvalidWeight(f"lambda**{a1} == 1 for lambda = {lam}")


def weighted_power_sum(S: AperySet, lam: int, mu: int) -> int:
    """Sum of lam**n * n**mu over all n with at most p representations.

    Evaluated with the Eulerian-number expansion; both fractional parts
    cancel and the result is checked to be integral.
    """
    if mu < 1:
        raise DomainError("mu must be >= 1")
    a1 = S.a1
    check_weight(lam, a1)
    _require_nonempty(S)
    m = S.elements
    la = lam**a1
    weights = [lam**x for x in m]
    total = Fraction(0)
    for n in range(mu + 1):
        inner = sum(eulerian(n, n - j) * la**j for j in range(n + 1))
        if not inner:
            continue
        msum = sum(x ** (mu - n) * w for x, w in zip(m, weights))
        total += Fraction(comb(mu, n) * (-a1) ** n * inner * msum, (la - 1) ** (n + 1))
    tail = sum(eulerian(mu, mu - j) * lam**j for j in range(mu + 1))
    total += Fraction((-1) ** (mu + 1) * tail, (lam - 1) ** (mu + 1))
    return to_int(total, f"weighted sum (lambda={lam}, mu={mu})")
