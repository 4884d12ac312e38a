"""Finite-field convolutional codes with receding-horizon decoding."""

from rhcodec._core import (
    BudgetExceeded,
    ConvCode,
    InvariantViolation,
    RhcodecError,
    WindowCode,
    __version__,
    density,
    exact_decode,
    load_code,
    multiplicity_bound,
    parse_code,
    receding_horizon_decode,
)

__all__ = [
    "BudgetExceeded",
    "ConvCode",
    "InvariantViolation",
    "RhcodecError",
    "WindowCode",
    "__version__",
    "density",
    "exact_decode",
    "load_code",
    "multiplicity_bound",
    "parse_code",
    "receding_horizon_decode",
]
