"""Closed forms for the arithmetic triple (a, a+d, a+2d), plus classical baselines.

For ``0 <= p <= floor(a/2)`` the p-Apéry set of the triple has an explicit
shape in ``(x2, x3)`` coordinates, where a cell stands for
``(a+d)*x2 + (a+2d)*x3``:

* a staircase of ``2p`` cells hanging off the left columns, and
* a two-column block at columns ``2p`` and ``2p+1``.

Everything else here (g_p, n_p, s_p and the power / weighted sums) follows
from that shape.  Beyond ``floor(a/2)`` the shape breaks down and these
functions refuse to answer.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .apery import AperySet, power_sum, sp_from_apery, weighted_power_sum
from .errors import DomainError, InternalInconsistency, NotCoprime, OutOfValidatedRange
from .numeric import to_int
from .oracle import Instance

__all__ = [
    "ArithTriple",
    "AperyCell",
    "SelmerDivision",
    "gp_closed",
    "np_closed",
    "sp_closed",
    "apery_closed",
    "apery_sum_closed",
    "apery_square_sum_closed",
    "power_sum_closed",
    "weighted_sum_closed",
    "sylvester_two_var",
    "roberts_g",
    "selmer_g",
    "selmer_n",
    "selmer_division",
    "as_triple",
]


@dataclass(frozen=True)
class ArithTriple:
    a: int
    d: int

    def __post_init__(self):
        if self.a < 3:
            raise DomainError(f"a must be >= 3, got {self.a}")
        if self.d < 1:
            raise DomainError(f"d must be >= 1, got {self.d}")
        if gcd(self.a, self.d) != 1:
            raise NotCoprime(f"gcd({self.a}, {self.d}) != 1")

    @property
    def generators(self) -> tuple[int, int, int]:
        return (self.a, self.a + self.d, self.a + 2 * self.d)

    @property
    def instance(self) -> Instance:
        return Instance(self.generators)

    @property
    def p_max(self) -> int:
        return self.a // 2

    def check_p(self, p: int) -> None:
        if p < 0:
            raise DomainError("p must be >= 0")
        if p > self.p_max:
            raise OutOfValidatedRange(
                f"p = {p} exceeds floor(a/2) = {self.p_max} for a = {self.a}"
            )


@dataclass(frozen=True)
class AperyCell:
    x2: int
    x3: int
    value: int


@dataclass(frozen=True)
class SelmerDivision:
    q: int
    r: int


def as_triple(gens) -> ArithTriple | None:
    """Recognise ``(a, a+d, a+2d)`` with a >= 3 and gcd(a, d) = 1."""
    gens = tuple(sorted(gens))
    if len(gens) != 3:
        return None
    a, b, c = gens
    d = b - a
    if d < 1 or c - b != d or a < 3 or gcd(a, d) != 1:
        return None
    return ArithTriple(a, d)


def gp_closed(T: ArithTriple, p: int) -> int:
    T.check_p(p)
    a, d = T.a, T.d
    return (a + 2 * d) * p + (a - 2) // 2 * a + (a - 1) * d


def np_closed(T: ArithTriple, p: int) -> int:
    T.check_p(p)
    a, d = T.a, T.d
    num = (a - 1) * (a + 2 * d - 1) + (a % 2 == 0)
    q, r = divmod(num, 4)
    if r:
        raise InternalInconsistency(f"n_p constant term {num}/4 is not integral")
    return (2 * a + 2 * d - 1 - p) * p + q


def sp_closed(T: ArithTriple, p: int, verify: bool = False) -> int:
    """Cubic polynomial in p for the p-Sylvester sum.

    The cubic coefficient is ``-4(a+d)/3`` and the even-``a`` constant term
    carries ``+3(a^2 + 2ad - a - d)``; both are pinned by agreement with
    direct counting over the whole validated range.

    With ``verify=True`` the value is also recomputed from the explicit
    Apéry set and the two must agree.
    """
    T.check_p(p)
    a, d = T.a, T.d
    c0 = (a - 1) * (a + 2 * d - 1) * (a * a + 2 * a * d - a - d - 2)
    if a % 2:
        c1 = 3 * a**3 + 9 * a * a * (d - 1) + 2 * a * (3 * d * d - 9 * d + 1) - 6 * d * d + 2 * d
    else:
        c0 += 3 * (a * a + 2 * a * d - a - d)
        c1 = 3 * a**3 + 9 * a * a * (d - 1) + a * (6 * d * d - 18 * d + 5) - 6 * d * d + 5 * d
    c2 = 3 * a * a + a * (6 * d - 1) + 4 * d * d - d
    val = (
        Fraction(c0, 24)
        + Fraction(c1, 6) * p
        + Fraction(c2, 2) * p * p
        - Fraction(4 * (a + d), 3) * p**3
    )
    out = to_int(val, "s_p closed form")
    if verify:
        other = sp_from_apery(apery_closed(T, p))
        if other != out:
            raise InternalInconsistency(
                f"s_p closed form {out} != Apéry evaluation {other} for {T}, p={p}"
            )
    return out


def _cells(T: ArithTriple, p: int) -> list[tuple[int, int]]:
    a = T.a
    cells = []
    if a % 2:
        h = (a - 1) // 2
        cells += [(k, h + p - k) for k in range(2 * p)]
        cells += [(2 * p, x3) for x3 in range(h - p + 1)]
        cells += [(2 * p + 1, x3) for x3 in range(h - p)]
    else:
        h = a // 2
        for k in range(1, p + 1):
            x3 = h + p - 2 * k + 1
            cells += [(2 * k - 2, x3), (2 * k - 1, x3)]
        cells += [(2 * p, x3) for x3 in range(h - p)]
        cells += [(2 * p + 1, x3) for x3 in range(h - p)]
    return cells


def apery_closed(T: ArithTriple, p: int) -> AperySet:
    """The p-Apéry set built from the staircase/block shape, with coordinates."""
    T.check_p(p)
    a, b, c = T.generators
    slots: list[AperyCell | None] = [None] * a
    for x2, x3 in _cells(T, p):
        v = b * x2 + c * x3
        i = v % a
        if slots[i] is not None:
            raise InternalInconsistency(f"residue {i} hit twice for {T}, p={p}")
        slots[i] = AperyCell(x2, x3, v)
    if any(s is None for s in slots):
        raise InternalInconsistency(f"incomplete residue system for {T}, p={p}")
    return AperySet(
        T.instance,
        p,
        tuple(s.value for s in slots),
        tuple((s.x2, s.x3) for s in slots),
    )


def apery_sum_closed(T: ArithTriple, p: int) -> int:
    """Sum of the p-Apéry elements, as a polynomial in a, d, p."""
    T.check_p(p)
    a, d = T.a, T.d
    inner = (a + d) ** 2 - (d + 1) ** 2 - 4 * p * p + 4 * (2 * a + 2 * d - 1) * p
    if a % 2 == 0:
        inner += 1
    return to_int(Fraction(a * inner, 4), "Apéry element sum")


def apery_square_sum_closed(T: ArithTriple, p: int) -> int:
    """Sum of squared p-Apéry elements, as a polynomial in a, d, p."""
    T.check_p(p)
    a, d = T.a, T.d
    if a % 2:
        c0 = (a - 1) * (a**3 + a * a * (4 * d + 1) + a * d * (4 * d + 1) - d * (2 * d + 3))
        c1 = 4 * (3 * a**3 + 3 * a * a * (3 * d - 1) + a * (6 * d * d - 12 * d - 1) - 2 * (3 * d - 1) * d)
    else:
        c0 = a**4 + 4 * a**3 * d + a * a * (4 * d * d - 3 * d + 2) - 2 * a * d * (3 * d - 1) + 2 * d * d
        c1 = 4 * (3 * a**3 + 3 * a * a * (3 * d - 1) + 2 * a * (3 * d * d - 6 * d + 1) - 6 * d * d + 5 * d)
    c2 = 12 * (3 * a * a + 2 * (3 * d - 1) * a + d * (4 * d - 1))
    c3 = -32 * (a + d)
    return to_int(Fraction(a * (c0 + c1 * p + c2 * p * p + c3 * p**3), 12), "Apéry square sum")


def power_sum_closed(T: ArithTriple, p: int, mu: int) -> int:
    return power_sum(apery_closed(T, p), mu)


def weighted_sum_closed(T: ArithTriple, p: int, lam: int, mu: int) -> int:
    return weighted_power_sum(apery_closed(T, p), lam, mu)


def sylvester_two_var(a: int, b: int) -> tuple[int, int, int]:
    """Classical (g, n, s) for two coprime generators 2 <= a < b."""
    if not 2 <= a < b:
        raise DomainError(f"need 2 <= a < b, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) != 1")
    g = (a - 1) * (b - 1) - 1
    n = (a - 1) * (b - 1) // 2
    s = to_int(Fraction((a - 1) * (b - 1) * (2 * a * b - a - b - 1), 12), "s(a, b)")
    return g, n, s


def _check_ap(a: int, d: int, k: int) -> None:
    if d < 1 or a < 2:
        raise DomainError(f"need a >= 2 and d >= 1, got a={a}, d={d}")
    if not 2 <= k <= a:
        raise DomainError(f"need 2 <= k <= a, got k={k}, a={a}")
    if gcd(a, d) != 1:
        raise DomainError(f"gcd({a}, {d}) != 1")


def roberts_g(a: int, d: int, k: int) -> int:
    """Frobenius number of a, a+d, ..., a+(k-1)d."""
    _check_ap(a, d, k)
    return (a - 2) // (k - 1) * a + (a - 1) * d


def selmer_g(a: int, d: int, h: int, k: int) -> int:
    """Frobenius number of a, ha+d, ..., ha+(k-1)d."""
    _check_ap(a, d, k)
    if h < 1:
        raise DomainError(f"h must be >= 1, got {h}")
    return (h * ((a - 2) // (k - 1)) + h - 1) * a + (a - 1) * d


def selmer_division(a: int, k: int) -> SelmerDivision:
    q, r = divmod(a - 1, k - 1)
    return SelmerDivision(q, r)


def selmer_n(a: int, d: int, k: int) -> int:
    """Genus of a, a+d, ..., a+(k-1)d."""
    _check_ap(a, d, k)
    qr = selmer_division(a, k)
    num = (a - 1) * (qr.q + d) + qr.r * (qr.q + 1)
    return to_int(Fraction(num, 2), "Selmer genus")
