"""Constructors for the named body families, with predicted metrics.

Every constructor re-measures its predicted thickness (and diameter,
when a closed form exists) through the width engine and refuses to emit
a body on disagreement beyond 1e-6: formula and orientation bugs die at
the source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .body import Body, CircleArc, diameter, ensure_valid
from .optimize import bisect_root
from .sphere_core import (
    GeometryError,
    GreatArc,
    SpherePoint,
    Vec,
    distance,
    geodesic_point,
    orthonormal_frame,
)
from .width_engine import thickness

HALF_PI = math.pi / 2.0
Z_POLE = SpherePoint(0.0, 0.0, 1.0)


class ParamError(GeometryError):
    """Constructor parameters outside the documented domain."""


@dataclass(frozen=True)
class GalleryMeta:
    kind: str
    params: dict
    predicted_thickness: float
    constant_width: bool
    predicted_diameter: Optional[float] = None


@dataclass(frozen=True)
class GalleryBody:
    body: Body
    meta: GalleryMeta


def _cap_point(center: Vec, e1: Vec, e2: Vec, colat: float,
               az: float) -> SpherePoint:
    c, s = math.cos(colat), math.sin(colat)
    u = (math.cos(az), math.sin(az))
    return SpherePoint(*(
        c * center[i] + s * (u[0] * e1[i] + u[1] * e2[i]) for i in range(3)
    ))


def _verify(kind: str, body: Body, predicted: float,
            predicted_diam: Optional[float] = None) -> None:
    ensure_valid(body)
    measured, _ = thickness(body)
    if abs(measured - predicted) > 1e-6:
        raise GeometryError(
            f"{kind}: measured thickness {measured!r} disagrees with "
            f"predicted {predicted!r}"
        )
    if predicted_diam is not None:
        d = diameter(body)
        if abs(d - predicted_diam) > 1e-6:
            raise GeometryError(
                f"{kind}: measured diameter {d!r} disagrees with "
                f"predicted {predicted_diam!r}"
            )


def make_disk(center: SpherePoint = Z_POLE, rho: float = 0.5) -> GalleryBody:
    """Disk of radius rho, represented as four quarter circle arcs."""
    if not (0.0 < rho < HALF_PI):
        raise ParamError(f"disk radius must lie in (0, pi/2), got {rho}")
    e1, e2 = orthonormal_frame(center.vec)
    corners = [
        _cap_point(center.vec, e1, e2, rho, az)
        for az in (0.0, HALF_PI, math.pi, 3.0 * HALF_PI)
    ]
    arcs = [
        CircleArc(center, rho, corners[i], corners[(i + 1) % 4])
        for i in range(4)
    ]
    body = Body(arcs)
    _verify("disk", body, 2.0 * rho, 2.0 * rho)
    meta = GalleryMeta(
        kind="disk",
        params={"center": center.vec, "rho": rho},
        predicted_thickness=2.0 * rho,
        constant_width=True,
        predicted_diameter=2.0 * rho,
    )
    return GalleryBody(body, meta)


def make_quarter_disk(
    center: SpherePoint = Z_POLE, rho: float = 0.5, orientation: float = 0.0
) -> GalleryBody:
    """Quarter of a disk: two orthogonal radii closed by a quarter circle.

    `center` is the disk center (the right-angle corner of the body).
    Thickness equals rho; diameter is the hypotenuse over the two
    radius endpoints, arccos(cos^2 rho).
    """
    if not (0.0 < rho < HALF_PI):
        raise ParamError(f"quarter-disk radius must lie in (0, pi/2), got {rho}")
    e1, e2 = orthonormal_frame(center.vec)
    u = _cap_point(center.vec, e1, e2, rho, orientation)
    v = _cap_point(center.vec, e1, e2, rho, orientation + HALF_PI)
    body = Body([
        GreatArc(center, u),
        CircleArc(center, rho, u, v),
        GreatArc(v, center),
    ])
    diam = math.acos(math.cos(rho) ** 2)
    _verify("quarter_disk", body, rho, diam)
    meta = GalleryMeta(
        kind="quarter_disk",
        params={"center": center.vec, "rho": rho, "orientation": orientation},
        predicted_thickness=rho,
        constant_width=False,
        predicted_diameter=diam,
    )
    return GalleryBody(body, meta)


def regular_polygon_vertices(
    n: int, circumradius: float, center: SpherePoint = Z_POLE,
    orientation: float = 0.0,
) -> list[SpherePoint]:
    e1, e2 = orthonormal_frame(center.vec)
    return [
        _cap_point(center.vec, e1, e2, circumradius,
                   orientation + 2.0 * math.pi * k / n)
        for k in range(n)
    ]


def regular_gon_thickness(n: int, circumradius: float) -> float:
    """Vertex-to-opposite-edge height of a regular spherical n-gon.

    The apothem follows from the right triangle center / vertex /
    edge midpoint: tan(apothem) = tan(circumradius) * cos(pi/n); the
    height runs through the center, so it is circumradius + apothem.
    """
    return circumradius + math.atan(
        math.tan(circumradius) * math.cos(math.pi / n)
    )


def make_regular_odd_gon(
    n: int, target_thickness: float, center: SpherePoint = Z_POLE,
    orientation: float = 0.0,
) -> GalleryBody:
    """Regular n-gon (n odd) with prescribed thickness in (0, pi/2].

    The circumradius is found by bisection on the closed-form height,
    then the emitted polygon's thickness is re-measured by the width
    engine and must agree to 1e-6.
    """
    if n < 3 or n % 2 == 0:
        raise ParamError(f"n must be odd and >= 3, got {n}")
    if not (0.0 < target_thickness <= HALF_PI + 1e-12):
        raise ParamError(
            f"thickness must lie in (0, pi/2], got {target_thickness}"
        )
    lo, hi = 1e-9, HALF_PI - 1e-9
    if regular_gon_thickness(n, hi) < target_thickness:
        raise ParamError("thickness not reachable for this n")
    r = bisect_root(
        lambda rr: regular_gon_thickness(n, rr) - target_thickness,
        lo, hi, tol=1e-14,
    )
    vs = regular_polygon_vertices(n, r, center, orientation)
    body = Body(
        GreatArc(vs[i], vs[(i + 1) % n]) for i in range(n)
    )
    diam = max(
        distance(vs[i], vs[j])
        for i in range(n) for j in range(i + 1, n)
    )
    _verify("regular_odd_gon", body, target_thickness)
    meta = GalleryMeta(
        kind="regular_odd_gon",
        params={"n": n, "thickness": target_thickness, "circumradius": r,
                "center": center.vec, "orientation": orientation},
        predicted_thickness=target_thickness,
        constant_width=abs(target_thickness - HALF_PI) < 1e-12,
        predicted_diameter=diam,
    )
    return GalleryBody(body, meta)


def make_example_body(
    kappa: float, sigma: float, center: SpherePoint = Z_POLE,
    orientation: float = 0.0,
) -> GalleryBody:
    """Rounded-triangle body of constant width kappa + 2*sigma.

    A regular triangle abc with side kappa has each side prolonged by
    sigma in both directions; three circle arcs of radius kappa+sigma
    about the vertices and three of radius sigma close the boundary.
    sigma = 0 degenerates to the Reuleaux triangle; kappa + sigma =
    pi/2 turns the large arcs into great arcs.
    """
    if not (0.0 < kappa < HALF_PI):
        raise ParamError(f"kappa must lie in (0, pi/2), got {kappa}")
    if sigma < 0.0 or kappa + sigma > HALF_PI + 1e-12:
        raise ParamError(
            f"sigma must lie in [0, pi/2 - kappa], got {sigma}"
        )
    r_tri = math.asin(min(1.0, math.sin(kappa / 2.0) / math.sin(math.pi / 3.0)))
    a, b, c = regular_polygon_vertices(3, r_tri, center, orientation)
    big = kappa + sigma
    av, bv, cv = a.vec, b.vec, c.vec
    f = SpherePoint(*geodesic_point(av, bv, big))
    i_ = SpherePoint(*geodesic_point(bv, av, big))
    h = SpherePoint(*geodesic_point(bv, cv, big))
    e = SpherePoint(*geodesic_point(cv, bv, big))
    d = SpherePoint(*geodesic_point(cv, av, big))
    g = SpherePoint(*geodesic_point(av, cv, big))

    def big_arc(p: SpherePoint, q: SpherePoint, ctr: SpherePoint):
        if abs(big - HALF_PI) <= 1e-12:
            return GreatArc(p, q)
        return CircleArc(ctr, big, p, q)

    arcs = [big_arc(d, e, c)]
    if sigma > 1e-12:
        arcs.append(CircleArc(b, sigma, e, f))
    arcs.append(big_arc(f, g, a))
    if sigma > 1e-12:
        arcs.append(CircleArc(c, sigma, g, h))
    arcs.append(big_arc(h, i_, b))
    if sigma > 1e-12:
        arcs.append(CircleArc(a, sigma, i_, d))
    body = Body(arcs)
    width = kappa + 2.0 * sigma
    diam = width if width >= HALF_PI - 1e-12 else None
    _verify("example_kappa_sigma", body, width, diam)
    meta = GalleryMeta(
        kind="example_kappa_sigma",
        params={"kappa": kappa, "sigma": sigma, "center": center.vec,
                "orientation": orientation},
        predicted_thickness=width,
        constant_width=True,
        predicted_diameter=diam,
    )
    return GalleryBody(body, meta)


def make_reuleaux_triangle(
    kappa: float, center: SpherePoint = Z_POLE, orientation: float = 0.0
) -> GalleryBody:
    """Three-arc body of constant width kappa (sigma = 0 rounding)."""
    gb = make_example_body(kappa, 0.0, center, orientation)
    meta = GalleryMeta(
        kind="reuleaux_triangle",
        params={"kappa": kappa, "center": center.vec,
                "orientation": orientation},
        predicted_thickness=gb.meta.predicted_thickness,
        constant_width=True,
        predicted_diameter=gb.meta.predicted_diameter,
    )
    return GalleryBody(gb.body, meta)


GALLERY_KINDS = {
    "disk": make_disk,
    "quarter_disk": make_quarter_disk,
    "regular_odd_gon": make_regular_odd_gon,
    "reuleaux_triangle": make_reuleaux_triangle,
    "example_kappa_sigma": make_example_body,
}
