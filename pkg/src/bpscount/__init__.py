"""Exact local/relative BPS transforms and the correspondence matrix C."""

from .arith import divisors, factorize, gen_binomial, iset, mobius, omega, parse_rational
from .checks import (
    CheckReport,
    Verdict,
    check_local_integrality,
    check_relative_integrality,
    check_takahashi,
    torsion_count,
)
from .correspondence import (
    CorrespondenceMatrix,
    NonIntegralEntry,
    build_c_matrix,
    c_entry,
    composed_oracle_matrix,
    invert_c_matrix,
    local_from_relative,
    relative_from_local,
)
from .transforms import (
    InvariantSequence,
    Kind,
    TangencyContext,
    local_bps_from_gw,
    local_gw_from_bps,
    multiple_cover_contribution,
    relative_bps_from_gw,
    relative_gw_from_bps,
)

__version__ = "0.1.0"
