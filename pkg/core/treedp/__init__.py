from core.treedp.dp import ForestDP, max_plus, solve_pvc_tree, tree_profile
from core.treedp.rooted import RootedTree

__all__ = ["ForestDP", "RootedTree", "max_plus", "solve_pvc_tree", "tree_profile"]
