"""Exact arithmetic toolkit for quadrirational Yang-Baxter maps."""

from .algebra import Poly, RatFun, const, factor_poly, ratfun_eq, var
from .catalog import FamilyId, YBMap, catalog, check_shape, companion, eval_map, make_family
from .conics import (
    Conic, PencilType, PlanePoint, SceneConfig, classify_intersection, geometric_concordance,
    geometric_map, pencil_normal_form, render_svg, twisted_geometric_map,
)
from .construct import build_map, cube_consistency_check, family_map, theorem1_check, theorem1_sweep
from .engine import (
    Certificate, SymFamily, conjugate, equivalence_transform, involution_check, map_equal,
    reversibility_check, symmetry_check, twist, yb_check_numeric, yb_check_symbolic,
)
from .parser import MapSource, parse_expr, parse_map
from .projective import INF, KleinPerm, Moebius, PPoint, Quadruple, cross_ratio
from .singular import (
    SingularSet, quadrirationality_check, singular_set, singularity_analysis, singularity_invariance,
)
from .tropical import TropExpr, trop_yb_check, ultradiscretize

__version__ = "0.1.0"
