# core/validation/certificates.py
from typing import Any, Dict, Optional

from core.graph import Graph, coverage
from shared.schemas import PvcSolution


class CertificateValidator:
    """Independent re-check of a solver's answer against its graph."""

    def __init__(self, graph: Graph, expected_size: Optional[int] = None):
        self.graph = graph
        self.expected_size = expected_size

    def validate(self, solution: PvcSolution) -> Dict[str, Any]:
        """Run all certificate checks"""
        checks = {
            "ids": self._check_ids(solution),
            "coverage": self._check_coverage(solution),
            "target": self._check_target(solution),
            "size": self._check_size(solution),
        }

        return {
            "passed": all(checks.values()),
            "checks": checks,
        }

    def _check_ids(self, solution: PvcSolution) -> bool:
        return all(1 <= v <= self.graph.n for v in solution.vertices)

    def _check_coverage(self, solution: PvcSolution) -> bool:
        """Reported coverage matches a recount"""
        if not self._check_ids(solution):
            return False
        return coverage(self.graph, solution.vertices) == solution.covered

    def _check_target(self, solution: PvcSolution) -> bool:
        return solution.covered >= solution.t

    def _check_size(self, solution: PvcSolution) -> bool:
        if solution.size != len(solution.vertices):
            return False
        return self.expected_size is None or solution.size == self.expected_size
