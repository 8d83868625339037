"""Polynomial kernel for Face Cover Number on planar graphs.

The kernelizer runs a dynamic program over SPR-trees of the blocks; exact
brute-force oracles in :mod:`facecover.oracle` serve as ground truth.
"""

from .multigraph import Instance, MultiGraph

__version__ = "0.1.0"

__all__ = ["Instance", "MultiGraph", "__version__"]
