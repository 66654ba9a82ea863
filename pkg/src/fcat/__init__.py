"""fcat: executable finite 2-dimensional monadicity machinery.

Validates coherence of monoidal and 2-categorical structures, computes
doctrinal-adjunction lifts, builds colax/pseudo/lax limits of arrows and
their span calculus, decides w-doctrinality of F-functors by enumeration,
and constructs and verifies orthogonality fillers and Eilenberg-Moore
extensions on finite, table-presented input.
"""

from .report import (
    Report,
    Failure,
    FcatError,
    StructuralError,
    BoundaryError,
    VarianceError,
    CapExceeded,
    UnsatisfiedHypothesis,
    ConsistencyError,
    InvalidStructureError,
    require,
)
from .caps import DEFAULT_CAP, resolve_cap

__version__ = "0.1.0"

__all__ = [
    "Report", "Failure", "FcatError", "StructuralError", "BoundaryError",
    "VarianceError", "CapExceeded", "UnsatisfiedHypothesis",
    "ConsistencyError", "InvalidStructureError", "require",
    "DEFAULT_CAP", "resolve_cap", "__version__",
]
