# cli/utils/helpers.py
import json
import logging
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Tuple

import click

from cli.utils.formatters import OutputFormatter
from core.errors import NonBipartiteError, handle_exception
from core.graph import Graph, bipartition, is_forest, is_tree, read_graph_file
from shared.schemas import InstanceDigest, RunReport

logger = logging.getLogger(__name__)

# (digest, result payload, text rendering, exit code)
CommandOutcome = Tuple[InstanceDigest, Dict[str, Any], str, int]


def configure_logging(level: str, fmt: str, verbose: bool = False) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else getattr(logging, level.upper(), logging.WARNING),
        format=fmt,
        stream=sys.stderr,
        force=True,
    )


def load_graph_input(path: str) -> Graph:
    graph = read_graph_file(path)
    logger.info(f"Loaded {path}: n={graph.n}, m={graph.m}")
    return graph


def instance_class(g: Graph) -> str:
    if g.n > 0 and is_tree(g):
        return "tree"
    if g.n > 0 and is_forest(g):
        return "forest"
    try:
        bipartition(g)
    except NonBipartiteError:
        return "general"
    return "bipartite"


def digest_of(g: Graph) -> InstanceDigest:
    return InstanceDigest(n=g.n, m=g.m, instance_class=instance_class(g))


def command_echo(ctx: click.Context) -> List[str]:
    echo = [ctx.command_path]
    for key, value in sorted(ctx.params.items()):
        if value is None or value is False or value == ():
            continue
        if isinstance(value, tuple):
            value = " ".join(str(x) for x in value)
        echo.append(f"--{key.replace('_', '-')}" if value is True else f"--{key.replace('_', '-')}={value}")
    return echo


def output_format(ctx: click.Context, as_json: bool) -> str:
    return "json" if as_json else ctx.obj["config"].get("output_format", "text")


def execute(
    ctx: click.Context,
    body: Callable[[], CommandOutcome],
    *,
    as_json: bool = False,
    out: Optional[str] = None,
) -> None:
    """Run a command body, render its report, and map failures to exit codes."""
    fmt = output_format(ctx, as_json)
    start = time.perf_counter()
    try:
        digest, result, text, exit_code = body()
    except Exception as exc:
        code, payload = handle_exception(exc)
        if fmt == "json":
            click.echo(json.dumps(payload, sort_keys=True), err=True)
        else:
            click.echo(OutputFormatter.format_error(payload), err=True)
        ctx.exit(code)
        return

    elapsed_ms = (time.perf_counter() - start) * 1000.0
    report = RunReport(command=command_echo(ctx), digest=digest, result=result, elapsed_ms=elapsed_ms)
    if fmt == "json":
        rendered = json.dumps(report.model_dump(mode="json"), sort_keys=True)
    else:
        rendered = text
    click.echo(rendered)
    if fmt != "json":
        click.echo(f"elapsed_ms: {elapsed_ms:.1f}", err=True)

    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(rendered + "\n")

    if exit_code:
        ctx.exit(exit_code)
