# cli/utils/formatters.py
from typing import Any, Dict, List, Optional


def _ids(vertices: Optional[List[int]]) -> str:
    if vertices is None:
        return "none"
    return " ".join(str(v) for v in vertices) if vertices else "(empty)"


class OutputFormatter:
    """Line-oriented key-value renderings of command results."""

    @staticmethod
    def format_solution(result: Dict[str, Any]) -> str:
        output = [
            f"method: {result['method']}",
            f"size: {result['size']}",
            f"covered: {result['covered']}",
            f"t: {result['t']}",
            f"vertices: {_ids(result['vertices'])}",
        ]
        certificate = result.get("certificate")
        if certificate:
            output.append(f"case: {certificate['case']}")
            for key in ("solves", "j_hit", "j1", "j2", "k1", "t1", "k2", "t2", "divisor",
                        "printed_divisor_size", "witness_source"):
                if certificate.get(key) is not None:
                    output.append(f"{key}: {certificate[key]}")
        if result.get("verified_by"):
            output.append(f"verified_by: {result['verified_by']}")
        checks = result.get("checks", {})
        if checks:
            output.append("checks: " + " ".join(f"{name}={'ok' if ok else 'FAIL'}" for name, ok in checks.items()))
        return "\n".join(output)

    @staticmethod
    def format_profile(result: Dict[str, Any]) -> str:
        output = [str(value) for value in result["opt"]]
        if result["mnc_holds"]:
            output.append("mnc holds")
        else:
            output.append(f"mnc violated at k={result['first_violation']}")
        return "\n".join(output)

    @staticmethod
    def format_reduction(result: Dict[str, Any]) -> str:
        output = [
            f"wrote: {result['out']}",
            f"n: {result['n']}",
            f"m: {result['m']}",
            f"budget: {result['budget']}",
            f"target: {result['target']}",
            f"preconditions: {'hold' if result['preconditions_hold'] else 'violated'}",
        ]
        return "\n".join(output)

    @staticmethod
    def format_verdict(result: Dict[str, Any]) -> str:
        output = [
            f"clique: {_ids(result['clique'])}",
            f"cover: {_ids(result['cover'])}",
            f"budget: {result['budget']}",
            f"target: {result['target_t']}",
            f"preconditions: {'hold' if result['preconditions_hold'] else 'violated'}",
            f"equivalent: {'true' if result['equivalent'] else 'false'}",
        ]
        return "\n".join(output)

    @staticmethod
    def format_generated(result: Dict[str, Any]) -> str:
        return "\n".join(
            [f"wrote: {result['out']}", f"source: {result['source']}", f"n: {result['n']}", f"m: {result['m']}"]
        )

    @staticmethod
    def format_error(payload: Dict[str, Any]) -> str:
        """Format error messages."""
        error = payload["error"]
        output = [f"error: {error['message']}", f"type: {error['type']}"]
        for key, value in sorted(error.get("details", {}).items()):
            if value is not None:
                output.append(f"{key}: {value}")
        return "\n".join(output)
