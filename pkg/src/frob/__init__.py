"""Exact p-Frobenius numbers, p-genus and p-Sylvester sums of numerical semigroups.

Three independent routes compute each quantity:

* :mod:`frob.arith`: closed forms for the arithmetic triple (a, a+d, a+2d),
* :mod:`frob.apery`: formulas in the elements of the p-Apéry set,
* :mod:`frob.oracle`: direct counting of representations.
"""
from .apery import (
    AperySet,
    QueryResult,
    apery_set,
    gp_from_apery,
    np_from_apery,
    power_sum,
    sp_from_apery,
    weighted_power_sum,
)
from .arith import (
    ArithTriple,
    apery_closed,
    gp_closed,
    np_closed,
    power_sum_closed,
    roberts_g,
    selmer_g,
    selmer_n,
    sp_closed,
    sylvester_two_var,
    weighted_sum_closed,
)
from .errors import (
    DomainError,
    EmptySet,
    FrobError,
    InternalInconsistency,
    InvalidWeight,
    NotCoprime,
    OutOfValidatedRange,
)
from .numeric import bernoulli, eulerian, stirling2
from .oracle import (
    DenumerantTable,
    Instance,
    denumerant,
    g_star,
    nonrep_set_p,
    oracle_gp,
    oracle_np,
    oracle_power_sum,
    oracle_sp,
    oracle_weighted_sum,
)

__version__ = "0.1.0"
