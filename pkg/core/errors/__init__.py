from core.errors.exceptions import (
    FlowInvariantError,
    GraphFormatError,
    InfeasibleTargetError,
    InstanceTooLargeError,
    InvalidGraphError,
    InvalidParameterError,
    MethodMismatchError,
    MncViolationError,
    NonBipartiteError,
    NotACliqueError,
    NotATreeError,
    PvcError,
    WeightedGraphError,
)
from core.errors.handlers import ErrorResponse, handle_exception

__all__ = [
    "ErrorResponse",
    "FlowInvariantError",
    "GraphFormatError",
    "InfeasibleTargetError",
    "InstanceTooLargeError",
    "InvalidGraphError",
    "InvalidParameterError",
    "MethodMismatchError",
    "MncViolationError",
    "NonBipartiteError",
    "NotACliqueError",
    "NotATreeError",
    "PvcError",
    "WeightedGraphError",
    "handle_exception",
]
