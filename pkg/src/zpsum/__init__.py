"""Restricted sumsets 2^A = {a + b : a, b in A, a != b} in Z_p.

Core types live in :mod:`zpsum.zp_core`; normal forms in
:mod:`zpsum.structure`; lower bounds in :mod:`zpsum.bounds`; the
shrinking transformations in :mod:`zpsum.reduction`; exhaustive sweeps in
:mod:`zpsum.verify`.
"""

__version__ = "0.1.0"

from .bounds import (
    BoundReport,
    Case,
    SumsetCase,
    Theorem,
    bound_t2,
    bound_t3,
    bound_t4,
    classify_t2,
    classify_t3,
    classify_t4,
    dsh_bound,
    erdos_heilbronn_bound,
    evaluate,
    karolyi_holds,
    partition_t4,
)
from .errors import (
    EmptyResultError,
    HypothesisError,
    ModulusMismatch,
    NotPrimeError,
    ParseError,
    PreconditionError,
    ReductionError,
    ZpSumError,
)
from .reduction import (
    CompressionCert,
    ReductionTrace,
    Terminal,
    compress_b2,
    reduce_case_a,
    reduce_case_b,
    reduce_case_c,
    reduce_step_a,
)
from .structure import NormalForm, decompose, is_arithmetic_progression, longest_ap, normalize
from .verify import SweepReport, SweepSpec, check_one, sweep
from .zp_core import (
    Interval,
    Prime,
    ZpSet,
    dilate,
    h_restricted_sumset,
    restricted_sumset,
    sumset,
    translate,
    width,
)
