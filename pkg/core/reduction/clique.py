# core/reduction/clique.py
"""CLIQUE to partial vertex cover on bipartite graphs.

Source vertex v keeps id v. Source edge number i (1-based, canonical order)
becomes an edge block: a hub n'+2i-1 joined to both endpoint images and to a
pendant tip n'+2i. A k-clique exists iff some k + m' - k(k-1)/2 vertices
cover 3m' - k(k-1)/2 edges, provided k >= 5 and m' > k(k-1)/2.
"""
import logging
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Optional, Tuple

from core.errors import InstanceTooLargeError, InvalidParameterError, NotACliqueError
from core.graph import BipartiteLabeling, Edge, Graph, bipartition, coverage
from core.oracle import find_partial_cover
from shared.schemas import ProvenanceKind, ProvenanceTag, ReductionVerdict

logger = logging.getLogger(__name__)

DEFAULT_VERIFY_MAX_SOURCE_N = 8


def pairs(k: int) -> int:
    return k * (k - 1) // 2


@dataclass(frozen=True)
class ReductionArtifact:
    bipartite: Graph
    labeling: BipartiteLabeling
    budget: int
    target_t: int
    provenance: Tuple[ProvenanceTag, ...]
    source_n: int
    source_m: int
    clique_k: int
    source_edges: Tuple[Edge, ...]

    @property
    def preconditions_hold(self) -> bool:
        return self.clique_k >= 5 and self.source_m > pairs(self.clique_k)

    def tag(self, v: int) -> ProvenanceTag:
        return self.provenance[v - 1]

    def hub(self, edge_index: int) -> int:
        """Block vertex carrying the incidence edges of source edge ``edge_index`` (0-based)."""
        return self.source_n + 2 * edge_index + 1

    def tip(self, edge_index: int) -> int:
        return self.source_n + 2 * edge_index + 2


def reduce_clique_to_pvcb(g_source: Graph, k: int) -> ReductionArtifact:
    n_src, m_src = g_source.n, g_source.m
    if not 2 <= k <= n_src:
        raise InvalidParameterError(f"clique size k must lie in [2, {n_src}], got {k}")
    if not g_source.is_unit_weight:
        raise InvalidParameterError("source graph for the clique reduction must be unweighted")

    provenance: List[ProvenanceTag] = [
        ProvenanceTag(kind=ProvenanceKind.ORIGINAL_VERTEX, source=(v,)) for v in g_source.vertices
    ]
    edges: List[Edge] = []
    for i, (u, v) in enumerate(g_source.edges):
        hub, tip = n_src + 2 * i + 1, n_src + 2 * i + 2
        edges.extend([(hub, tip), (u, hub), (v, hub)])
        provenance.append(ProvenanceTag(kind=ProvenanceKind.EDGE_BLOCK_LEFT, source=(u, v)))
        provenance.append(ProvenanceTag(kind=ProvenanceKind.EDGE_BLOCK_RIGHT, source=(u, v)))

    bipartite = Graph(n=n_src + 2 * m_src, edges=tuple(edges))
    art = ReductionArtifact(
        bipartite=bipartite,
        labeling=bipartition(bipartite),
        budget=k + m_src - pairs(k),
        target_t=3 * m_src - pairs(k),
        provenance=tuple(provenance),
        source_n=n_src,
        source_m=m_src,
        clique_k=k,
        source_edges=g_source.edges,
    )
    if not art.preconditions_hold:
        logger.warning(
            f"Reduction preconditions fail (k={k}, m'={m_src}, k(k-1)/2={pairs(k)}); "
            "the clique/cover equivalence is not guaranteed"
        )
    return art


def is_clique(edges: FrozenSet[Edge], vertices: Iterable[int]) -> bool:
    return all((u, v) in edges for u, v in combinations(sorted(vertices), 2))


def find_clique(g: Graph, k: int, within: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """Lexicographically first k-clique, optionally restricted to ``within``."""
    pool = sorted(set(within)) if within is not None else list(g.vertices)
    edge_set = frozenset(g.edges)
    for combo in combinations(pool, k):
        if is_clique(edge_set, combo):
            return list(combo)
    return None


def clique_to_cover(art: ReductionArtifact, clique: Iterable[int]) -> FrozenSet[int]:
    """Clique images plus the hub of every source edge outside the clique."""
    members = set(clique)
    if len(members) != art.clique_k:
        raise NotACliqueError(f"expected {art.clique_k} vertices, got {len(members)}")
    if any(not 1 <= v <= art.source_n for v in members):
        raise NotACliqueError(f"clique vertices must lie in [1, {art.source_n}]")
    if not is_clique(frozenset(art.source_edges), members):
        raise NotACliqueError(f"vertices {sorted(members)} are not pairwise adjacent")

    cover = set(members)
    for i, (u, v) in enumerate(art.source_edges):
        if not (u in members and v in members):
            cover.add(art.hub(i))

    covered = coverage(art.bipartite, cover)
    assert len(cover) == art.budget, f"cover size {len(cover)} != budget {art.budget}"
    assert covered >= art.target_t, f"cover reaches {covered} < target {art.target_t}"
    return frozenset(cover)


def cover_to_clique(art: ReductionArtifact, cover: Iterable[int]) -> List[int]:
    """k-clique among the original-vertex images of a feasible cover."""
    chosen = set(cover)
    if any(not 1 <= v <= art.bipartite.n for v in chosen):
        raise NotACliqueError(f"cover vertices must lie in [1, {art.bipartite.n}]")
    if len(chosen) > art.budget:
        raise NotACliqueError(f"cover has {len(chosen)} vertices, budget is {art.budget}")
    covered = coverage(art.bipartite, chosen)
    if covered < art.target_t:
        raise NotACliqueError(f"cover reaches {covered} < target {art.target_t}")

    images = [v for v in chosen if art.tag(v).kind is ProvenanceKind.ORIGINAL_VERTEX]
    source = Graph(n=art.source_n, edges=art.source_edges)
    clique = find_clique(source, art.clique_k, within=images)
    if clique is None:
        raise NotACliqueError(
            f"cover exposes no {art.clique_k}-clique among its {len(images)} vertex images"
        )
    return clique


def check_reduction(
    g_source: Graph,
    k: int,
    *,
    max_source_n: int = DEFAULT_VERIFY_MAX_SOURCE_N,
    max_n: Optional[int] = None,
) -> ReductionVerdict:
    """Decide both sides exhaustively: clique search and a budgeted cover search."""
    if g_source.n > max_source_n:
        raise InstanceTooLargeError("source vertex count", g_source.n, max_source_n)
    art = reduce_clique_to_pvcb(g_source, k)
    clique = find_clique(g_source, k)

    if art.budget < 0:
        cover = None
    else:
        cover = find_partial_cover(
            art.bipartite, max(art.target_t, 0), art.budget, max_n=max_n, prune_dominated=True
        )

    verdict = ReductionVerdict(
        clique_k=k,
        source_n=art.source_n,
        source_m=art.source_m,
        budget=art.budget,
        target_t=art.target_t,
        preconditions_hold=art.preconditions_hold,
        clique=clique,
        cover=cover,
        cover_size=None if cover is None else len(cover),
    )
    logger.info(
        f"Reduction check k={k}: clique={verdict.has_clique}, cover={verdict.cover_feasible}, "
        f"equivalent={verdict.equivalent}"
    )
    return verdict


def verify_reduction(g_source: Graph, k: int, **guards) -> bool:
    return check_reduction(g_source, k, **guards).equivalent
