"""Exact knot-diagram invariants: Alexander and Conway polynomials,
connected sums and Reidemeister moves."""

from .alexander import alexander_polynomial, build_matrix, knot_determinant
from .compose import SpliceSpec, connected_sum, splice_sites
from .conway import ConwayPoly, conway_polynomial, conway_to_alexander, smooth_crossing, switch_crossing
from .diagram import (
    UNKNOT,
    Crossing,
    Diagram,
    DiagramError,
    crossing_count,
    is_alternating,
    mirror,
    reverse,
    split_components,
    validate,
    writhe,
)
from .laurent import LaurentPoly, PolyMatrix, determinant, eval_at_int, normalize_units, units_equal
from .notation import NotationError, emit_gauss, emit_pd, parse_gauss, parse_pd

__version__ = "0.1.0"
