from shared.schemas.profile import CoverageProfile, MncReport
from shared.schemas.reduction import ProvenanceKind, ProvenanceTag, ReductionVerdict
from shared.schemas.report import InstanceDigest, RunReport
from shared.schemas.solution import (
    CurvePoint,
    LagrangianSolution,
    PvcSolution,
    SearchCase,
    SearchCertificate,
    SolveMethod,
)

__all__ = [
    "CoverageProfile",
    "CurvePoint",
    "InstanceDigest",
    "LagrangianSolution",
    "MncReport",
    "ProvenanceKind",
    "ProvenanceTag",
    "PvcSolution",
    "ReductionVerdict",
    "RunReport",
    "SearchCase",
    "SearchCertificate",
    "SolveMethod",
]
