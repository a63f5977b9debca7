# shared/schemas/reduction.py
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict


class ProvenanceKind(str, Enum):
    ORIGINAL_VERTEX = "vertex"
    EDGE_BLOCK_LEFT = "block-left"
    EDGE_BLOCK_RIGHT = "block-right"


class ProvenanceTag(BaseModel):
    """Where a vertex of the reduced graph comes from in the source graph.

    ``source`` holds (v,) for original vertices and the source edge (u, v)
    for edge-block vertices. The block-left vertex carries the two incidence
    edges; the block-right vertex is the pendant.
    """

    model_config = ConfigDict(frozen=True)

    kind: ProvenanceKind
    source: Tuple[int, ...]

    def to_token(self) -> str:
        return f"{self.kind.value}:{'-'.join(str(x) for x in self.source)}"

    @classmethod
    def from_token(cls, token: str) -> "ProvenanceTag":
        kind, _, payload = token.partition(":")
        source = tuple(int(x) for x in payload.split("-"))
        expected = 1 if kind == ProvenanceKind.ORIGINAL_VERTEX.value else 2
        if len(source) != expected:
            raise ValueError(f"malformed provenance tag '{token}'")
        return cls(kind=ProvenanceKind(kind), source=source)


class ReductionVerdict(BaseModel):
    model_config = ConfigDict(frozen=True)

    clique_k: int
    source_n: int
    source_m: int
    budget: int
    target_t: int
    preconditions_hold: bool
    clique: Optional[List[int]] = None
    cover: Optional[List[int]] = None
    cover_size: Optional[int] = None

    @property
    def has_clique(self) -> bool:
        return self.clique is not None

    @property
    def cover_feasible(self) -> bool:
        return self.cover is not None

    @property
    def equivalent(self) -> bool:
        return self.has_clique == self.cover_feasible
