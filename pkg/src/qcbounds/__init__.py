"""Special functions, intrinsic metrics and distortion bounds for quasiconformal maps."""

from .distortion_bounds import *  # noqa: F401,F403
from .errors import (  # noqa: F401
    BoundUndefinedError,
    DivergenceError,
    DomainError,
    UnsupportedOperationError,
    ValidityRangeError,
)
from .metrics import *  # noqa: F401,F403
from .ring_invariants import *  # noqa: F401,F403
from .special_functions import *  # noqa: F401,F403

__version__ = "0.1.0"
