"""Maximal chains in weak order lattices, Cambrian quotients and higher Bruhat orders."""

from .cartan import CoxeterError, CoxeterSystem, build_system, euler_form, parse_type, skew_form, symmetric_form
from .roots import RootSystem, generate_positive_roots, order_subsystem
from .weak_order import WeakOrder, build_weak_order
from .lattice import (
    Congruence,
    CongruenceError,
    FiniteLabelledLattice,
    GuardExceeded,
    MGPoset,
    Polygon,
    PolygonalityError,
    congruence_from_edges,
    congruence_from_partition,
    enumerate_polygons,
    is_polygonal,
    mg_preorder,
    quotient,
)
from .preorder import Preorder, check_contraction
from .chain_orders import class_key, heap_poset, mg_poset_fast, mg_poset_polygon, reference_from_word
from .cambrian import CambrianData, CoxeterElement, build_cambrian, cambrian_chain_map, parse_coxeter
from .bruhat import build_B_n_1, build_B_n_2, map_f

__version__ = "0.1.0"
