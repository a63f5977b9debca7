#!/usr/bin/env python3
import click

from core.graph import FIXTURES

from .commands.gen import gen_command
from .commands.profile import profile_command
from .commands.reduce import reduce_command
from .commands.solve import METHODS, solve_command
from .commands.verify_reduction import verify_reduction_command
from .config import CLIConfig
from .utils.helpers import configure_logging


@click.group()
@click.option('--config-file', type=click.Path(), help='Path to config file')
@click.option('--verbose', '-v', is_flag=True, help='Log solver progress to stderr')
@click.pass_context
def cli(ctx, config_file, verbose):
    """Exact partial vertex cover toolkit"""
    ctx.ensure_object(dict)

    config = CLIConfig(config_file)
    configure_logging(config.get('log_level'), config.get('log_format'), verbose)
    ctx.obj['config'] = config


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Graph file')
@click.option('--t', 't', type=int, required=True, help='Number of edges to cover')
@click.option('--method', default='auto', type=click.Choice(METHODS), help='Solver to use')
@click.option('--out', type=click.Path(dir_okay=False), help='Also write the report here')
@click.option('--json', 'as_json', is_flag=True, help='Emit one JSON object')
@click.pass_context
def solve(ctx, input_path, t, method, out, as_json):
    """Minimum number of vertices covering at least t edges"""
    return solve_command(ctx, input_path, t, method, as_json, out)


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Graph file')
@click.option('--weighted', is_flag=True, help='Index the profile by total vertex weight')
@click.option('--json', 'as_json', is_flag=True, help='Emit one JSON object')
@click.pass_context
def profile(ctx, input_path, weighted, as_json):
    """Coverage profile OPT(k) and MNC verdict"""
    return profile_command(ctx, input_path, weighted, as_json)


@cli.command()
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Source graph file')
@click.option('--k', 'k', type=int, required=True, help='Clique size')
@click.option('--out', type=click.Path(dir_okay=False), required=True, help='Artifact file to write')
@click.option('--json', 'as_json', is_flag=True, help='Emit one JSON object')
@click.pass_context
def reduce(ctx, input_path, k, out, as_json):
    """Build the bipartite PVC instance for a CLIQUE question"""
    return reduce_command(ctx, input_path, k, out, as_json)


@cli.command()
@click.option('--fixture', type=click.Choice(sorted(FIXTURES)), help='Named fixture graph')
@click.option('--random-tree', type=(int, int), default=None, metavar='N SEED', help='Random labelled tree')
@click.option('--random-bipartite', type=(int, int, int, int), default=None,
              metavar='NL NR MAXDEG SEED', help='Random bipartite graph')
@click.option('--edge-prob', default=50, type=click.IntRange(0, 100), show_default=True,
              help='Percent chance each left-right pair is proposed')
@click.option('--out', type=click.Path(dir_okay=False), required=True, help='Graph file to write')
@click.option('--json', 'as_json', is_flag=True, help='Emit one JSON object')
@click.pass_context
def gen(ctx, fixture, random_tree, random_bipartite, edge_prob, out, as_json):
    """Write a fixture or seeded random graph"""
    return gen_command(ctx, fixture, random_tree, random_bipartite, edge_prob, out, as_json)


@cli.command('verify-reduction')
@click.option('--input', 'input_path', type=click.Path(exists=True, dir_okay=False), required=True,
              help='Source graph file')
@click.option('--k', 'k', type=int, required=True, help='Clique size')
@click.option('--json', 'as_json', is_flag=True, help='Emit one JSON object')
@click.pass_context
def verify_reduction(ctx, input_path, k, as_json):
    """Check clique existence against cover feasibility exhaustively"""
    return verify_reduction_command(ctx, input_path, k, as_json)


if __name__ == '__main__':
    cli()
