"""Exact total positivity checks for Toeplitz matrices of power series."""

from .errors import (
    DomainError,
    NormalizationError,
    NotInvertibleError,
    ParseError,
    TPError,
    TruncationError,
)
from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_shapes,
    parse_partition,
    parse_shape,
    skew,
    strictly_precedes,
)
from .schur import eval_skew_e, eval_skew_h, required_truncation, verify_duality
from .series import (
    PowerSeries,
    alternate_signs,
    multiply,
    parse_series,
    pf_dual,
    reciprocal,
)
from .toeplitz import (
    MinorIndex,
    is_essential,
    level,
    minor_det,
    minor_to_shape,
    shape_to_minor,
    toeplitz_entry,
)
from .tp_checker import (
    Certificate,
    Verdict,
    falsify_theorem_a,
    tp2_fast,
    tp_level,
    tp_order,
    verify_theorem_b,
)

__version__ = "0.1.0"
