# cli/commands/profile.py
from cli.utils.formatters import OutputFormatter
from cli.utils.helpers import CommandOutcome, digest_of, execute, load_graph_input
from core.errors import InstanceTooLargeError
from core.graph import is_forest, require_unit_weights
from core.oracle import check_mnc, opt_profile, weighted_profile
from core.treedp import tree_profile


def profile_command(ctx, input_path: str, weighted: bool, as_json: bool):
    """Execute the profile command"""
    config = ctx.obj["config"]

    def body() -> CommandOutcome:
        g = load_graph_input(input_path)
        if weighted:
            limit = config.get("oracle_max_total_weight")
            if g.total_weight > limit:
                raise InstanceTooLargeError("total vertex weight", g.total_weight, limit)
            profile = weighted_profile(g, max_n=config.get("oracle_max_n"))
            source = "oracle"
        else:
            require_unit_weights(g, "the unweighted profile (pass --weighted)")
            if is_forest(g):
                profile, source = tree_profile(g), "tree-dp"
            else:
                profile, source = opt_profile(g, max_n=config.get("oracle_max_n")), "oracle"

        report = check_mnc(profile)
        result = {
            "weighted": weighted,
            "source": source,
            "opt": profile.opt,
            "marginals": profile.marginals,
            "mnc_holds": report.holds,
            "first_violation": report.first_violation,
        }
        return digest_of(g), result, OutputFormatter.format_profile(result), 0

    execute(ctx, body, as_json=as_json)
