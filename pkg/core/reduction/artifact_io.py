# core/reduction/artifact_io.py
"""Reduced instances on disk: a comment metadata block followed by the graph.

    c pvc-reduction clique
    c source <n'> <m'>
    c clique-k <k>
    c budget <B>
    c target <t>
    c provenance <id> <tag>      one per vertex, ascending id
    p pvc <n> <m>
    e <u> <v> ...

``parse_graph`` reads the file as a plain graph since every metadata line is
a comment.
"""
import logging
from pathlib import Path
from typing import Dict, List, Union

from core.errors import GraphFormatError
from core.graph import Graph, parse_graph, write_graph
from core.graph.io import read_ascii_text
from core.reduction.clique import ReductionArtifact, reduce_clique_to_pvcb
from shared.schemas import ProvenanceKind, ProvenanceTag

logger = logging.getLogger(__name__)

MAGIC = "c pvc-reduction clique"


def write_artifact(art: ReductionArtifact) -> str:
    lines = [
        MAGIC,
        f"c source {art.source_n} {art.source_m}",
        f"c clique-k {art.clique_k}",
        f"c budget {art.budget}",
        f"c target {art.target_t}",
    ]
    lines.extend(
        f"c provenance {v} {art.tag(v).to_token()}" for v in art.bipartite.vertices
    )
    return "\n".join(lines) + "\n" + write_graph(art.bipartite)


def _int_field(meta: Dict[str, List[str]], key: str, count: int = 1) -> List[int]:
    if key not in meta:
        raise GraphFormatError(f"artifact metadata is missing 'c {key}'")
    values = meta[key]
    if len(values) != count:
        raise GraphFormatError(f"malformed 'c {key}' line")
    try:
        return [int(x) for x in values]
    except ValueError:
        raise GraphFormatError(f"non-integer field in 'c {key}' line")


def parse_artifact(text: str) -> ReductionArtifact:
    """Read an artifact and check it against a fresh reduction of its source."""
    lines = text.split("\n")
    if not lines or lines[0].rstrip("\r") != MAGIC:
        raise GraphFormatError(f"expected '{MAGIC}' on the first line", 1)

    meta: Dict[str, List[str]] = {}
    tags: Dict[int, ProvenanceTag] = {}
    for line_number, raw in enumerate(lines[1:], start=2):
        tokens = raw.split()
        if not tokens or tokens[0] != "c":
            continue
        if len(tokens) >= 2 and tokens[1] == "provenance":
            if len(tokens) != 4:
                raise GraphFormatError("malformed provenance line", line_number)
            try:
                tags[int(tokens[2])] = ProvenanceTag.from_token(tokens[3])
            except ValueError:
                raise GraphFormatError(f"bad provenance tag '{tokens[3]}'", line_number)
        elif len(tokens) >= 2:
            meta[tokens[1]] = tokens[2:]

    graph = parse_graph(text)
    source_n, source_m = _int_field(meta, "source", 2)
    (k,) = _int_field(meta, "clique-k")
    (budget,) = _int_field(meta, "budget")
    (target,) = _int_field(meta, "target")

    if sorted(tags) != list(graph.vertices):
        raise GraphFormatError("provenance lines must cover every vertex exactly once")
    source_edges = [
        tags[v].source for v in graph.vertices if tags[v].kind is ProvenanceKind.EDGE_BLOCK_LEFT
    ]
    if len(source_edges) != source_m:
        raise GraphFormatError(f"expected {source_m} edge blocks, found {len(source_edges)}")

    art = reduce_clique_to_pvcb(Graph(n=source_n, edges=tuple(source_edges)), k)
    mismatches = [
        name
        for name, ours, theirs in (
            ("graph", art.bipartite, graph),
            ("budget", art.budget, budget),
            ("target", art.target_t, target),
            ("provenance", art.provenance, tuple(tags[v] for v in graph.vertices)),
        )
        if ours != theirs
    ]
    if mismatches:
        raise GraphFormatError(f"artifact is inconsistent with its source: {', '.join(mismatches)}")
    logger.debug(f"Parsed reduction artifact n'={source_n}, m'={source_m}, k={k}")
    return art


def read_artifact_file(path: Union[str, Path]) -> ReductionArtifact:
    return parse_artifact(read_ascii_text(path))


def write_artifact_file(art: ReductionArtifact, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(write_artifact(art))
