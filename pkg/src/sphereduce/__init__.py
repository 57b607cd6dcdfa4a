"""Convex bodies on the unit sphere: lunes, width, thickness, diameter,
constant-width / strict-convexity / reducedness checks, a gallery of
named body families, a randomized property verifier, and SVG rendering.
"""

from .sphere_core import (
    GreatArc,
    Hemisphere,
    Lune,
    SpherePoint,
    distance,
    lune_semicircle_centers,
    lune_thickness,
    right_triangle_hypotenuse,
)
from .body import (
    Body,
    CircleArc,
    boundary_sample,
    contains,
    diameter,
    extreme_diameter,
    extreme_points,
    validate_body,
)
from .width_engine import (
    WidthWitness,
    dual_boundary,
    is_constant_width,
    is_smooth,
    is_strictly_convex,
    order_triple,
    reducedness_certificate,
    supporting_hemisphere_at,
    thickness,
    width_at,
)
from .gallery import (
    make_disk,
    make_example_body,
    make_quarter_disk,
    make_regular_odd_gon,
    make_reuleaux_triangle,
)

__version__ = "0.1.0"
