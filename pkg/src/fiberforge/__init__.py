"""Classical triangulations of circle bundles built from necklaces."""

from .bundle import (
    NecklaceBundle,
    build_general,
    build_with_euler,
    double_bold_beads,
    extend_to_skeleton,
    merge_necklaces,
    small_bundle_from_orientation,
    small_skeleton_bundle,
    trivial_bundle,
    verify_consistency,
)
from .cochains import Cochain, apply_F, choose_target_cochain, coboundary, g_of_a, \
    orientation_cochain, solve_orientation_for_target
from .complex import SimplicialComplex, build_complex, generate, is_sphere, \
    verify_closed_oriented_surface
from .errors import FiberforgeError, NonClassicalError, ObstructionError, ValidationError
from .game import euler_bound, solve, verify_lemma_win
from .homology import cohomology, h2_has_two_torsion, homology, homology_all, smith_normal_form
from .lcf import euler_number, evaluate_lcf, lcf_value
from .necklace import Bead, Necklace, canonical_form, check_classical, double_bead, restrict, \
    small_framed_necklace
from .spheres import enumerate_spheres
from .total_space import TotalSpace, reconstruct, verify_bundle_triangulation

__version__ = "0.1.0"
