"""Cross-validation sweeps over arithmetic triples.

Each ``(a, d)`` job builds its own denumerant table and returns a list of
:class:`Mismatch` records; an empty list means every check agreed.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import gcd

from . import apery as ap
from . import arith
from . import oracle as orc
from .errors import FrobError

log = logging.getLogger(__name__)

LAMBDAS = (-2, 2, 3)
MUS = (1, 2, 3)


@dataclass(frozen=True, order=True)
class Mismatch:
    a: int
    d: int
    p: int
    check: str
    detail: str = field(default="", compare=False)

    def as_dict(self) -> dict:
        return {"a": self.a, "d": self.d, "p": self.p, "check": self.check, "detail": self.detail}


@dataclass
class Report:
    checks: int = 0
    mismatches: list[Mismatch] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def triples(a_range: range, d_range: range):
    for a in a_range:
        for d in d_range:
            if a >= 3 and d >= 1 and gcd(a, d) == 1:
                yield a, d


class _Job:
    def __init__(self, a: int, d: int):
        self.a, self.d = a, d
        self.T = arith.ArithTriple(a, d)
        self.inst = self.T.instance
        self.table = orc.DenumerantTable(self.inst)
        self.checks = 0
        self.bad: list[Mismatch] = []

    def expect(self, p: int, name: str, fn) -> None:
        """Run ``fn``; it returns (ok, detail). Exceptions count as mismatches."""
        self.checks += 1
        try:
            ok, detail = fn()
        except FrobError as e:
            ok, detail = False, f"{type(e).__name__}: {e}"
        if not ok:
            self.bad.append(Mismatch(self.a, self.d, p, name, detail))

    def agree(self, p: int, name: str, *thunks) -> None:
        def fn():
            vals = [t() for t in thunks]
            return len(set(vals)) == 1, " vs ".join(map(str, vals))

        self.expect(p, name, fn)


def _validated(S: ap.AperySet, table) -> tuple[bool, str]:
    S.validate(table)
    return True, ""


def _check_triple(a: int, d: int, weighted: bool) -> tuple[int, list[Mismatch]]:
    j = _Job(a, d)
    T, A, tab = j.T, j.inst, j.table
    prev = None
    for p in range(T.p_max + 1):
        S = ap.apery_set(A, p, tab)
        try:
            C = arith.apery_closed(T, p)
        except FrobError as e:
            j.checks += 1
            j.bad.append(Mismatch(a, d, p, "apery_closed", str(e)))
            continue

        j.agree(p, "gp", lambda: arith.gp_closed(T, p), lambda: ap.gp_from_apery(S),
                lambda: orc.oracle_gp(A, p, tab))
        j.agree(p, "np", lambda: arith.np_closed(T, p), lambda: ap.np_from_apery(S),
                lambda: orc.oracle_np(A, p, tab))
        j.agree(p, "sp", lambda: arith.sp_closed(T, p), lambda: ap.sp_from_apery(S),
                lambda: orc.oracle_sp(A, p, tab))

        j.agree(p, "apery_multiset", lambda: tuple(sorted(C.elements)),
                lambda: tuple(sorted(S.elements)))
        j.expect(p, "cell_count", lambda: (len(C.coords) == a == len(C.elements), str(len(C.coords))))
        j.expect(p, "residues", lambda: (
            all(m % a == i for i, m in enumerate(C.elements)), str(C.elements)))
        j.expect(p, "apery_invariants", lambda: _validated(C, tab))
        j.agree(p, "apery_sum", lambda: arith.apery_sum_closed(T, p), lambda: sum(C.elements))
        j.agree(p, "apery_square_sum", lambda: arith.apery_square_sum_closed(T, p),
                lambda: sum(m * m for m in C.elements))
        j.agree(p, "power_sum_mu1", lambda: ap.power_sum(S, 1), lambda: ap.sp_from_apery(S))
        j.agree(p, "power_sum_closed_mu1", lambda: arith.power_sum_closed(T, p, 1),
                lambda: arith.sp_closed(T, p))
        if prev is not None:
            j.expect(p, "apery_strictly_increasing", lambda: (
                all(x < y for x, y in zip(prev.elements, S.elements)), ""))
        prev = S

        if weighted:
            for mu in MUS:
                j.agree(p, f"power_sum_mu{mu}", lambda: arith.power_sum_closed(T, p, mu),
                        lambda: ap.power_sum(S, mu), lambda: orc.oracle_power_sum(A, p, mu, tab))
            lams = LAMBDAS + ((-1,) if a % 2 else ())
            for lam in lams:
                for mu in MUS:
                    j.agree(p, f"weighted_l{lam}_mu{mu}",
                            lambda: arith.weighted_sum_closed(T, p, lam, mu),
                            lambda: ap.weighted_power_sum(S, lam, mu),
                            lambda: orc.oracle_weighted_sum(A, p, lam, mu, tab))

    j.agree(0, "roberts_g", lambda: arith.roberts_g(a, d, 3), lambda: arith.gp_closed(T, 0))
    j.agree(0, "selmer_g_h1", lambda: arith.selmer_g(a, d, 1, 3), lambda: arith.roberts_g(a, d, 3))
    j.agree(0, "selmer_n", lambda: arith.selmer_n(a, d, 3), lambda: arith.np_closed(T, 0),
            lambda: orc.oracle_np(A, 0, tab))
    return j.checks, j.bad


def verify(
    a_range: range = range(3, 26),
    d_range: range = range(1, 16),
    weighted: bool = False,
    weighted_a_max: int = 12,
    weighted_d_max: int = 7,
    workers: int = 1,
) -> Report:
    """Three-way agreement over every coprime ``(a, d)`` and valid ``p``.

    With ``weighted`` the power and weighted sums are added for
    ``a <= weighted_a_max`` and ``d <= weighted_d_max``.
    """
    jobs = sorted(triples(a_range, d_range))

    def run(ad):
        a, d = ad
        w = weighted and a <= weighted_a_max and d <= weighted_d_max
        return _check_triple(a, d, w)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            outs = list(ex.map(run, jobs))
    else:
        outs = [run(ad) for ad in jobs]

    report = Report()
    for n, bad in outs:
        report.checks += n
        report.mismatches.extend(bad)
    report.mismatches.sort()
    log.info("verified %d triples, %d checks, %d mismatches",
             len(jobs), report.checks, len(report.mismatches))
    return report


def table_rows(a_range: range, d_range: range, p_values=None, mu=None, lam=None):
    """Closed-form rows ``(a, d, p, g, n, s[, power][, weighted])`` for a sweep.

    ``p_values=None`` means every validated ``p`` for each ``a``.
    """
    for a, d in sorted(triples(a_range, d_range)):
        T = arith.ArithTriple(a, d)
        ps = range(T.p_max + 1) if p_values is None else [p for p in p_values if p <= T.p_max]
        for p in ps:
            row = {
                "a": a, "d": d, "p": p,
                "gp": arith.gp_closed(T, p),
                "np": arith.np_closed(T, p),
                "sp": arith.sp_closed(T, p),
            }
            if mu is not None:
                row["power_sum"] = arith.power_sum_closed(T, p, mu) if mu else row["np"]
                if lam is not None:
                    row["weighted_sum"] = (
                        arith.weighted_sum_closed(T, p, lam, mu) if lam**a != 1 else None
                    )
            yield row
