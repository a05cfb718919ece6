"""Exact synthetic constructions on lines of Desarguesian affine planes.

The coordinate plane over a division ring (rationals, GF(p) or rational
quaternions) is built with exact arithmetic.  On a line with chosen points
O and I, points are added and multiplied using parallel projections only;
the result is a skew field isomorphic to the coordinate ring.
"""

from .line_algebra import (
    Frame,
    cayley_tables,
    choose_auxiliary,
    from_parameter,
    point_add,
    point_inv,
    point_mul,
    point_neg,
    point_sub,
    to_parameter,
)
from .plane import (
    PlaneModel,
    Point,
    Sloped,
    Vertical,
    collinear,
    incident,
    intersect,
    line_through,
    parallel_through,
)
from .configurations import (
    DesarguesConfig,
    PappusConfig,
    affine_pappus_check,
    configuration_search,
    desargues_check,
    pappus_check,
)
from .dsl import execute, parse
from .kernels import BACKEND
from .scalars import Quaternion, Residue, RingDescriptor, parse_ring
from .svg import render_svg
from .verification import Mode, frame_independence_check, run_suite

__version__ = "0.1.0"
