# cli/commands/reduce.py
from cli.utils.formatters import OutputFormatter
from cli.utils.helpers import CommandOutcome, digest_of, execute, load_graph_input
from core.reduction import reduce_clique_to_pvcb, write_artifact_file


def reduce_command(ctx, input_path: str, k: int, out: str, as_json: bool):
    """Execute the reduce command"""

    def body() -> CommandOutcome:
        source = load_graph_input(input_path)
        art = reduce_clique_to_pvcb(source, k)
        write_artifact_file(art, out)
        result = {
            "out": out,
            "n": art.bipartite.n,
            "m": art.bipartite.m,
            "budget": art.budget,
            "target": art.target_t,
            "preconditions_hold": art.preconditions_hold,
        }
        return digest_of(source), result, OutputFormatter.format_reduction(result), 0

    execute(ctx, body, as_json=as_json)
