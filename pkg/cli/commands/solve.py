# cli/commands/solve.py
import logging
from typing import Optional

from cli.utils.formatters import OutputFormatter
from cli.utils.helpers import CommandOutcome, digest_of, execute, load_graph_input
from core.errors import MethodMismatchError, MncViolationError, NonBipartiteError
from core.graph import Graph, PvcInstance, bipartition, is_forest, require_unit_weights
from core.lagrangian import solve_pvc_mnc
from core.oracle import solve_pvc_bruteforce
from core.treedp import solve_pvc_tree
from core.validation import CertificateValidator
from shared.schemas import PvcSolution

logger = logging.getLogger(__name__)

METHODS = ("auto", "lagrangian", "tree-dp", "brute")


def _solve_auto(inst: PvcInstance, config) -> tuple:
    """Pick a solver for the instance; never trust Lagrangian output without an MNC guarantee."""
    g = inst.graph
    require_unit_weights(g, "every PVC solver")
    if is_forest(g):
        return solve_pvc_tree(inst), None

    try:
        lab = bipartition(g)
    except NonBipartiteError as e:
        if g.n <= config.get("oracle_max_n"):
            logger.info("Graph is not bipartite; using the exhaustive solver")
            return solve_pvc_bruteforce(inst, max_n=config.get("oracle_max_n")), None
        raise MethodMismatchError(
            f"graph is not bipartite (odd cycle {e.witness}) and n={g.n} exceeds the exhaustive "
            f"guard {config.get('oracle_max_n')}; no exact method applies"
        )

    # outside forests a Lagrangian answer stands only once brute force agrees
    if g.n > config.get("auto_verify_max_n"):
        raise MethodMismatchError(
            f"bipartite graph with a cycle has no MNC guarantee and n={g.n} exceeds the "
            f"verification guard {config.get('auto_verify_max_n')}; no certified exact method applies"
        )
    solution = solve_pvc_mnc(inst, lab)
    reference = solve_pvc_bruteforce(inst, max_n=config.get("auto_verify_max_n"))
    if reference.size != solution.size:
        raise MncViolationError(
            f"Lagrangian size {solution.size} disagrees with exhaustive size {reference.size}",
            details={"lagrangian": solution.size, "brute": reference.size},
        )
    return solution, "brute"


def _solve(inst: PvcInstance, method: str, config) -> tuple:
    if method == "auto":
        return _solve_auto(inst, config)
    if method == "tree-dp":
        return solve_pvc_tree(inst), None
    if method == "brute":
        return solve_pvc_bruteforce(inst, max_n=config.get("oracle_max_n")), None
    return solve_pvc_mnc(inst, bipartition(inst.graph)), None


def solve_command(ctx, input_path: str, t: int, method: str, as_json: bool, out: Optional[str]):
    """Execute the solve command"""
    config = ctx.obj["config"]

    def body() -> CommandOutcome:
        g: Graph = load_graph_input(input_path)
        inst = PvcInstance(graph=g, t=t)
        solution, verified_by = _solve(inst, method, config)
        checks = CertificateValidator(g).validate(solution)
        result = _solution_payload(solution, checks["checks"], verified_by)
        return digest_of(g), result, OutputFormatter.format_solution(result), 0 if checks["passed"] else 1

    execute(ctx, body, as_json=as_json, out=out)


def _solution_payload(solution: PvcSolution, checks: dict, verified_by: Optional[str]) -> dict:
    return {
        "method": solution.method.value,
        "size": solution.size,
        "covered": solution.covered,
        "t": solution.t,
        "vertices": solution.sorted_vertices,
        "certificate": None if solution.certificate is None else solution.certificate.model_dump(mode="json"),
        "verified_by": verified_by,
        "checks": checks,
    }
