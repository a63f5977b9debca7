# shared/schemas/report.py
from typing import Any, Dict, List

from pydantic import BaseModel, Field


class InstanceDigest(BaseModel):
    n: int
    m: int
    instance_class: str


class RunReport(BaseModel):
    """One CLI run: command echo, instance digest, payload and wall time."""

    command: List[str]
    digest: InstanceDigest
    result: Dict[str, Any] = Field(default_factory=dict)
    elapsed_ms: float = Field(0.0, ge=0.0)
