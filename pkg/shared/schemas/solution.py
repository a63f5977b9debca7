# shared/schemas/solution.py
from enum import Enum
from typing import FrozenSet, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SolveMethod(str, Enum):
    BRUTE = "brute"
    LAGRANGIAN = "lagrangian"
    TREE_DP = "tree-dp"


class SearchCase(str, Enum):
    TRIVIAL = "trivial"
    EXACT_HIT = "exact-hit"
    BRACKET = "bracket"


class SearchCertificate(BaseModel):
    """Binary-search state behind a Lagrangian answer.

    In the bracket case the solve at j1 = j2 + 1 covers t1 < t edges with k1
    vertices and the solve at j2 covers t2 > t; every marginal between them
    equals ``divisor`` = j2 + 1.
    """

    model_config = ConfigDict(frozen=True)

    case: SearchCase
    solves: int = 0
    j_hit: Optional[int] = None
    j1: Optional[int] = None
    j2: Optional[int] = None
    k1: Optional[int] = None
    t1: Optional[int] = None
    k2: Optional[int] = None
    t2: Optional[int] = None
    divisor: Optional[int] = None
    printed_divisor_size: Optional[int] = None
    witness_source: Optional[str] = None


class PvcSolution(BaseModel):
    model_config = ConfigDict(frozen=True)

    vertices: FrozenSet[int]
    size: int = Field(..., ge=0)
    covered: int = Field(..., ge=0)
    t: int = Field(..., ge=0)
    method: SolveMethod
    certificate: Optional[SearchCertificate] = None

    @model_validator(mode="after")
    def validate_consistency(self) -> "PvcSolution":
        if self.size != len(self.vertices):
            raise ValueError("size must equal the number of vertices")
        if self.covered < self.t:
            raise ValueError(f"solution covers {self.covered} < t={self.t} edges")
        return self

    @property
    def sorted_vertices(self) -> List[int]:
        return sorted(self.vertices)


class LagrangianSolution(BaseModel):
    """Optimum of the penalised program at threshold j + 1/2 (objective scaled by 2j+1)."""

    model_config = ConfigDict(frozen=True)

    j: int = Field(..., ge=0)
    selected: FrozenSet[int]
    uncovered: FrozenSet[Tuple[int, int]]
    k: int = Field(..., ge=0)
    scaled_objective: int = Field(..., ge=0)

    @model_validator(mode="after")
    def validate_objective(self) -> "LagrangianSolution":
        if self.k != len(self.selected):
            raise ValueError("k must equal the number of selected vertices")
        expected = (2 * self.j + 1) * self.k + 2 * len(self.uncovered)
        if self.scaled_objective != expected:
            raise ValueError(
                f"scaled objective {self.scaled_objective} != (2j+1)k + 2|uncovered| = {expected}"
            )
        return self


class CurvePoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    j: int
    k: int
    covered: int
