# cli/commands/gen.py
from typing import Optional, Tuple

from cli.utils.formatters import OutputFormatter
from cli.utils.helpers import CommandOutcome, digest_of, execute
from core.errors import InvalidParameterError
from core.graph import FIXTURES, gen_random_bipartite, gen_random_tree, write_graph_file


def gen_command(
    ctx,
    fixture: Optional[str],
    random_tree: Optional[Tuple[int, int]],
    random_bipartite: Optional[Tuple[int, int, int, int]],
    edge_prob: int,
    out: str,
    as_json: bool,
):
    """Execute the gen command"""

    def body() -> CommandOutcome:
        chosen = [x for x in (fixture, random_tree, random_bipartite) if x]
        if len(chosen) != 1:
            raise InvalidParameterError(
                "exactly one of --fixture, --random-tree, --random-bipartite is required"
            )
        if fixture:
            g, source = FIXTURES[fixture](), f"fixture:{fixture}"
        elif random_tree:
            n, seed = random_tree
            g, source = gen_random_tree(n, seed), f"random-tree:{n}:{seed}"
        else:
            nl, nr, max_degree, seed = random_bipartite
            g = gen_random_bipartite(nl, nr, max_degree, edge_prob, seed)
            source = f"random-bipartite:{nl}:{nr}:{max_degree}:{edge_prob}:{seed}"

        write_graph_file(g, out)
        result = {"out": out, "source": source, "n": g.n, "m": g.m}
        return digest_of(g), result, OutputFormatter.format_generated(result), 0

    execute(ctx, body, as_json=as_json)
