# cli/commands/verify_reduction.py
from cli.utils.formatters import OutputFormatter
from cli.utils.helpers import CommandOutcome, digest_of, execute, load_graph_input
from core.reduction import check_reduction


def verify_reduction_command(ctx, input_path: str, k: int, as_json: bool):
    """Execute the verify-reduction command"""
    config = ctx.obj["config"]

    def body() -> CommandOutcome:
        source = load_graph_input(input_path)
        verdict = check_reduction(
            source,
            k,
            max_source_n=config.get("verify_max_source_n"),
            max_n=config.get("oracle_max_n"),
        )
        result = verdict.model_dump(mode="json")
        result["equivalent"] = verdict.equivalent
        return digest_of(source), result, OutputFormatter.format_verdict(result), 0 if verdict.equivalent else 1

    execute(ctx, body, as_json=as_json)
