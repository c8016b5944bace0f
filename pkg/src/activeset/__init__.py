"""The active-set statistic on general lattice paths and its deactivation bijection."""

from .active import (
    DEFAULT_READING,
    ActiveFinding,
    Condition,
    LineSet,
    active_set,
    active_vertex,
    check_prop1,
)
from .bijection import (
    Case,
    DeactivationTrace,
    FTildeCase,
    activate_gen,
    activate_sub,
    classify_image_case,
    deactivate_gen,
    deactivate_sub,
    decode,
    encode,
)
from .certification import CertificationReport, certify
from .enumeration import Histogram, count_paths, enumerate_paths, histogram_active_sets
from .errors import (
    ActiveSetError,
    BudgetExceeded,
    InternalAssertion,
    InvalidInput,
    InvalidStep,
    LineNotActive,
    LineNotInactive,
    LineOutOfRange,
    NotSubdiagonal,
    UnbalancedPath,
)
from .paths import (
    LatticePath,
    PathClass,
    Point,
    SlopeClass,
    Step,
    diag_level,
    format_path,
    parse_path,
    path_class_membership,
    rotate180,
    slope_class,
)

__version__ = "0.1.0"
