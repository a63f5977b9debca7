# core/graph/io.py
"""Line-oriented graph files.

    c <comment>
    p pvc <n> <m>
    w <u> <weight>
    e <u> <v>

The header is the first non-comment line; exactly ``m`` edge lines follow in
any order. ``write_graph`` emits the canonical layout: header, ``w`` lines for
non-unit weights in vertex order, then edges sorted by (min, max).
"""
import logging
from pathlib import Path
from typing import Dict, List, Optional, Set, TextIO, Tuple, Union

from core.errors import GraphFormatError
from core.graph.model import Edge, Graph, normalize_edge

logger = logging.getLogger(__name__)


def _parse_ints(tokens: List[str], count: int, line_number: int, what: str) -> List[int]:
    if len(tokens) != count:
        raise GraphFormatError(f"malformed {what} line", line_number)
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise GraphFormatError(f"non-integer field in {what} line", line_number)


def parse_graph(text: Union[str, TextIO]) -> Graph:
    if not isinstance(text, str):
        text = text.read()

    header: Optional[Tuple[int, int]] = None
    header_line = 0
    edges: Set[Edge] = set()
    weights: Dict[int, int] = {}

    for line_number, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r")
        if not line.strip():
            continue
        tokens = line.split()
        tag = tokens[0]

        if tag == "c":
            continue

        if header is None:
            if tag != "p":
                raise GraphFormatError("expected 'p pvc <n> <m>' header", line_number)
            if len(tokens) != 4 or tokens[1] != "pvc":
                raise GraphFormatError("malformed header", line_number)
            n, m = _parse_ints(tokens[2:], 2, line_number, "header")
            if n < 0 or m < 0:
                raise GraphFormatError("malformed header", line_number)
            header = (n, m)
            header_line = line_number
            continue

        n = header[0]
        if tag == "p":
            raise GraphFormatError("duplicate header", line_number)
        elif tag == "e":
            u, v = _parse_ints(tokens[1:], 2, line_number, "edge")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphFormatError(f"edge id out of range [1, {n}]", line_number)
            if u == v:
                raise GraphFormatError("self-loop", line_number)
            key = normalize_edge(u, v)
            if key in edges:
                raise GraphFormatError(f"duplicate edge {key}", line_number)
            edges.add(key)
        elif tag == "w":
            u, w = _parse_ints(tokens[1:], 2, line_number, "weight")
            if not 1 <= u <= n:
                raise GraphFormatError(f"weight vertex out of range [1, {n}]", line_number)
            if w < 1:
                raise GraphFormatError("weight < 1", line_number)
            if u in weights:
                raise GraphFormatError(f"duplicate weight for vertex {u}", line_number)
            weights[u] = w
        else:
            raise GraphFormatError(f"unknown line type '{tag}'", line_number)

    if header is None:
        raise GraphFormatError("missing 'p pvc <n> <m>' header")
    if len(edges) != header[1]:
        raise GraphFormatError(
            f"header declares {header[1]} edges but {len(edges)} were given", header_line
        )

    graph = Graph.from_edges(header[0], edges, weights)
    logger.debug(f"Parsed graph n={graph.n} m={graph.m}")
    return graph


def write_graph(g: Graph) -> str:
    lines = [f"p pvc {g.n} {g.m}"]
    lines.extend(f"w {v} {g.weight(v)}" for v in g.vertices if g.weight(v) != 1)
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_ascii_text(path: Union[str, Path]) -> str:
    """File contents as text; a non-ASCII byte is a format error on its line."""
    data = Path(path).read_bytes()
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as e:
        raise GraphFormatError("non-ASCII byte in graph file", data[: e.start].count(b"\n") + 1)


def read_graph_file(path: Union[str, Path]) -> Graph:
    return parse_graph(read_ascii_text(path))


def write_graph_file(g: Graph, path: Union[str, Path]) -> None:
    with open(path, "w", encoding="ascii", newline="\n") as f:
        f.write(write_graph(g))
