"""Route a quantity request to the closed-form, Apéry or oracle path."""
from __future__ import annotations

from dataclasses import dataclass

from . import apery as ap
from . import arith
from . import oracle as orc
from .apery import PROVENANCES, QueryResult
from .errors import DomainError
from .oracle import DenumerantTable, Instance

__all__ = ["Query", "applicable_paths", "compute", "compute_all"]


@dataclass(frozen=True)
class Query:
    kind: str
    instance: Instance
    p: int
    mu: int | None = None
    lam: int | None = None

    def __post_init__(self):
        if self.kind not in ap.KINDS:
            raise DomainError(f"unknown quantity {self.kind!r}")
        if self.p < 0:
            raise DomainError("p must be >= 0")
        if self.kind == "power_sum" and (self.mu is None or self.mu < 0):
            raise DomainError("power_sum needs mu >= 0")
        if self.kind == "weighted_sum":
            if self.mu is None or self.mu < 1:
                raise DomainError("weighted_sum needs mu >= 1")
            if self.lam is None:
                raise DomainError("weighted_sum needs lambda")

    def parameters(self) -> dict:
        out = {"generators": list(self.instance.generators), "p": self.p}
        if self.mu is not None:
            out["mu"] = self.mu
        if self.lam is not None:
            out["lambda"] = self.lam
        return out


def applicable_paths(q: Query) -> list[str]:
    paths = []
    T = arith.as_triple(q.instance.generators)
    if T is not None and q.p <= T.p_max:
        paths.append("closed_form")
    return paths + ["apery", "oracle"]


def _closed(q: Query) -> int:
    T = arith.as_triple(q.instance.generators)
    if T is None:
        raise DomainError(f"({q.instance}) is not an arithmetic triple with a >= 3")
    if q.kind == "gp":
        return arith.gp_closed(T, q.p)
    if q.kind == "np":
        return arith.np_closed(T, q.p)
    if q.kind == "sp":
        return arith.sp_closed(T, q.p)
    if q.kind == "power_sum":
        if q.mu == 0:
            return arith.np_closed(T, q.p)
        return arith.power_sum_closed(T, q.p, q.mu)
    return arith.weighted_sum_closed(T, q.p, q.lam, q.mu)


def _apery(q: Query, table) -> int:
    S = ap.apery_set(q.instance, q.p, table)
    if q.kind == "gp":
        return ap.gp_from_apery(S)
    if q.kind == "np":
        return ap.np_from_apery(S)
    if q.kind == "sp":
        return ap.sp_from_apery(S)
    if q.kind == "power_sum":
        return ap.power_sum(S, q.mu)
    return ap.weighted_power_sum(S, q.lam, q.mu)


def _oracle(q: Query, table) -> int:
    A = q.instance
    if q.kind == "gp":
        return orc.oracle_gp(A, q.p, table)
    if q.kind == "np" or (q.kind == "power_sum" and q.mu == 0):
        return orc.oracle_np(A, q.p, table)
    if q.kind == "sp":
        return orc.oracle_sp(A, q.p, table)
    if q.kind == "power_sum":
        return orc.oracle_power_sum(A, q.p, q.mu, table)
    return orc.oracle_weighted_sum(A, q.p, q.lam, q.mu, table)


def compute(q: Query, path: str | None = None, table: DenumerantTable | None = None) -> QueryResult:
    """Evaluate ``q`` on one path; default is the first applicable one."""
    if path is None:
        path = applicable_paths(q)[0]
    if path not in PROVENANCES:
        raise DomainError(f"unknown path {path!r}")
    if path == "closed_form":
        value = _closed(q)
    elif path == "apery":
        value = _apery(q, table)
    else:
        value = _oracle(q, table)
    return QueryResult(q.kind, value, path, q.parameters())


def compute_all(q: Query, table: DenumerantTable | None = None) -> tuple[list[QueryResult], bool]:
    """Evaluate ``q`` on every applicable path and report agreement."""
    t = orc.table_for(q.instance, table)
    results = [compute(q, path, t) for path in applicable_paths(q)]
    return results, len({r.value for r in results}) == 1
