"""Shared configuration, error types and number helpers."""

from .config import LabConfig
from .errors import (
    CapExceeded,
    ConsistencyFailure,
    FaithfulnessFailure,
    HomomorphismFailure,
    InputError,
    LabError,
    MembershipError,
    NotAnAutomorphism,
    NotAnIsomorphism,
    NotMeasurePreserving,
)

__all__ = [
    "LabConfig",
    "LabError",
    "InputError",
    "MembershipError",
    "FaithfulnessFailure",
    "HomomorphismFailure",
    "NotMeasurePreserving",
    "NotAnIsomorphism",
    "NotAnAutomorphism",
    "CapExceeded",
    "ConsistencyFailure",
]
