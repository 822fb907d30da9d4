"""Combine uncertain value-and-uncertainty estimates.

The main entry points are :func:`combine` and
:func:`combine_virtual_sampling`; :mod:`estfuse.desiderata` audits any rule
against the ten desiderata and :mod:`estfuse.oracle` holds independent
reference computations.
"""

from estfuse.combinators import (
    VirtualSamplingDiagnostics,
    combine,
    combine_cover,
    combine_intersection,
    combine_unweighted_mean,
    combine_virtual_sampling,
    combine_weighted_mean,
    decompose,
)
from estfuse.estimates import (
    CalibrationPolicy,
    CombinedEstimate,
    EmptyIntersection,
    InfiniteCover,
    Interval,
    Method,
    NoInformativeSources,
    SourceEstimate,
    UndefinedResultant,
    calibrate,
    from_interval,
    to_interval,
)

__version__ = "0.1.0"

__all__ = [
    "CalibrationPolicy",
    "CombinedEstimate",
    "EmptyIntersection",
    "InfiniteCover",
    "Interval",
    "Method",
    "NoInformativeSources",
    "SourceEstimate",
    "UndefinedResultant",
    "VirtualSamplingDiagnostics",
    "calibrate",
    "combine",
    "combine_cover",
    "combine_intersection",
    "combine_unweighted_mean",
    "combine_virtual_sampling",
    "combine_weighted_mean",
    "decompose",
    "from_interval",
    "to_interval",
]
