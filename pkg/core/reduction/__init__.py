from core.reduction.artifact_io import (
    parse_artifact,
    read_artifact_file,
    write_artifact,
    write_artifact_file,
)
from core.reduction.clique import (
    DEFAULT_VERIFY_MAX_SOURCE_N,
    ReductionArtifact,
    check_reduction,
    clique_to_cover,
    cover_to_clique,
    find_clique,
    reduce_clique_to_pvcb,
    verify_reduction,
)

__all__ = [
    "DEFAULT_VERIFY_MAX_SOURCE_N",
    "ReductionArtifact",
    "check_reduction",
    "clique_to_cover",
    "cover_to_clique",
    "find_clique",
    "parse_artifact",
    "read_artifact_file",
    "reduce_clique_to_pvcb",
    "verify_reduction",
    "write_artifact",
    "write_artifact_file",
]
