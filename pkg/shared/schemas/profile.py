# shared/schemas/profile.py
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator


class CoverageProfile(BaseModel):
    """OPT(0..K): best coverage per vertex count (or per weight budget)."""

    model_config = ConfigDict(frozen=True)

    opt: List[int] = Field(..., min_length=1)
    weighted: bool = False

    @field_validator("opt")
    @classmethod
    def validate_opt(cls, v: List[int]) -> List[int]:
        if v[0] != 0:
            raise ValueError("OPT(0) must be 0")
        if any(b < a for a, b in zip(v, v[1:])):
            raise ValueError("coverage profile must be nondecreasing")
        return v

    @computed_field
    @property
    def marginals(self) -> List[int]:
        """a_k = OPT(k) - OPT(k-1); ``marginals[k - 1]`` holds a_k."""
        return [b - a for a, b in zip(self.opt, self.opt[1:])]

    @property
    def k_max(self) -> int:
        return len(self.opt) - 1

    def min_size_for(self, t: int) -> Optional[int]:
        """Smallest k with OPT(k) >= t, or None if the profile never reaches t."""
        return next((k for k, value in enumerate(self.opt) if value >= t), None)

    def count_marginals_above(self, j: int) -> int:
        """|{k : a_k > j + 1/2}|, i.e. marginals of at least j + 1."""
        return sum(1 for a in self.marginals if a > j)


class MncReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    holds: bool
    first_violation: Optional[int] = None
