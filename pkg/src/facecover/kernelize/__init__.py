"""Nice-kernel dynamic program over SPR-trees and the whole-instance driver."""

from .core import Context, NiceKernel, NoInstance, RuleFiring
from .driver import Report, canonical_no, canonical_yes, kernelize, kernelize_block
from .parts import C4, EDGE, P3, TRIANGLE, W4, build_part, gadget_profile, splice
from .pnode import kernelize_p_node
from .replace import (
    replace_semi_problematic,
    replace_terminal_free,
    replace_unproblematic,
    splice_problematic_kernel,
)
from .rigid import rigidize, separator_vertices
from .rnode import kernelize_r_node
from .snode import kernelize_s_node

__all__ = [
    "C4", "EDGE", "P3", "TRIANGLE", "W4",
    "Context", "NiceKernel", "NoInstance", "Report", "RuleFiring",
    "build_part", "canonical_no", "canonical_yes", "gadget_profile",
    "kernelize", "kernelize_block", "kernelize_p_node", "kernelize_r_node", "kernelize_s_node",
    "replace_semi_problematic", "replace_terminal_free", "replace_unproblematic",
    "rigidize", "separator_vertices", "splice", "splice_problematic_kernel",
]
