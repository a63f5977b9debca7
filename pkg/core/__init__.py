# core/__init__.py
"""
Core package for the partial vertex cover toolkit.

- graph: model, file format, generators, fixtures
- oracle: exhaustive profiles and brute-force solver
- flow: max-flow / canonical min-cut
- lagrangian: the min-cut based exact solver
- treedp: forest dynamic program
- reduction: CLIQUE gadget construction and certificate mapping
"""

from .config_loader import ConfigLoader

__version__ = "0.1.0"

__all__ = ["ConfigLoader"]
