# core/lagrangian/threshold.py
from dataclasses import dataclass
from fractions import Fraction

from core.errors import InvalidParameterError


@dataclass(frozen=True, order=True)
class ThresholdParam:
    """Half-integral threshold 1/lambda = j + 1/2, held as the integer j.

    The penalised objective |S| + lambda * |uncovered| is scaled by 2j+1 so
    that vertices cost 2j+1 and uncovered edges cost 2; no floats appear.
    """

    j: int

    def __post_init__(self):
        if self.j < 0:
            raise InvalidParameterError(f"threshold index j must be nonnegative, got {self.j}")

    @property
    def vertex_cost(self) -> int:
        return 2 * self.j + 1

    @property
    def edge_penalty(self) -> int:
        return 2

    @property
    def threshold(self) -> Fraction:
        return Fraction(2 * self.j + 1, 2)

    @property
    def lam(self) -> Fraction:
        return Fraction(2, 2 * self.j + 1)
