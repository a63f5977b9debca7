# core/errors/exceptions.py
from typing import Any, Dict, List, Optional


class PvcError(Exception):
    """Base class for every error raised by the toolkit."""

    category = "pvc_error"
    exit_code = 1

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.message = message
        self.details = details or {}


class GraphFormatError(PvcError):
    """A graph file violates the line-oriented format."""

    category = "parse_error"
    exit_code = 2

    def __init__(self, message: str, line_number: Optional[int] = None):
        if line_number is not None:
            message = f"{message} at line {line_number}"
        super().__init__(message, {"line": line_number})
        self.line_number = line_number


class InvalidGraphError(PvcError):
    category = "invalid_graph"
    exit_code = 2


class InvalidParameterError(PvcError):
    category = "invalid_parameter"
    exit_code = 2


class NotACliqueError(PvcError):
    category = "invalid_certificate"
    exit_code = 2


class InfeasibleTargetError(PvcError):
    category = "infeasible"
    exit_code = 3

    def __init__(self, t: int, m: int):
        super().__init__(f"target t={t} exceeds edge count m={m}", {"t": t, "m": m})
        self.t = t
        self.m = m


class MncViolationError(PvcError):
    """The Lagrangian pipeline could not certify its answer; the graph lacks MNC."""

    category = "mnc_violation"
    exit_code = 4


class NonBipartiteError(PvcError):
    category = "method_mismatch"
    exit_code = 5

    def __init__(self, witness: List[int]):
        super().__init__(
            f"graph is not bipartite: odd cycle {witness}", {"witness": list(witness)}
        )
        self.witness = list(witness)


class NotATreeError(PvcError):
    category = "method_mismatch"
    exit_code = 5


class WeightedGraphError(PvcError):
    category = "method_mismatch"
    exit_code = 5


class MethodMismatchError(PvcError):
    category = "method_mismatch"
    exit_code = 5


class InstanceTooLargeError(PvcError):
    category = "size_guard"
    exit_code = 6

    def __init__(self, what: str, size: int, limit: int):
        super().__init__(
            f"{what} {size} exceeds the exhaustive-search guard {limit}",
            {"size": size, "limit": limit},
        )
        self.size = size
        self.limit = limit


class FlowInvariantError(PvcError):
    """Max-flow result failed its own conservation or duality check."""

    category = "internal_error"
    exit_code = 1
