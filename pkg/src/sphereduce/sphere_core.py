"""Exact spherical primitives: points, arcs, hemispheres, lunes.

All geometry lives on the unit sphere in R^3.  Angles are radians,
distances are geodesic angles in [0, pi].  Scalar 3-vector math is done
on plain float tuples; the hot sweeps elsewhere convert to numpy once.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Unit-norm invariant for stored points.
TOL_UNIT = 1e-9
# Constructors silently renormalize within this window, reject beyond it
# (tolerates file-format rounding without masking real bugs).
TOL_NORM_FIX = 1e-6
# Generic coincidence tolerance for geometric predicates.
TOL_GEOM = 1e-9

Vec = tuple[float, float, float]


class GeometryError(ValueError):
    """Invalid geometric construction."""


class DegenerateLuneError(GeometryError):
    """Lune poles equal or antipodal; every downstream formula divides
    by the sine of the pole distance, so this must never reach them."""


class DegenerateArcError(GeometryError):
    """Arc endpoints equal or antipodal; the shorter great-circle
    segment is not unique."""


# ---------------------------------------------------------------------------
# tuple-based 3-vector helpers
# ---------------------------------------------------------------------------

def dot(u: Vec, v: Vec) -> float:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec, v: Vec) -> Vec:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def norm(u: Vec) -> float:
    return math.sqrt(u[0] * u[0] + u[1] * u[1] + u[2] * u[2])


def add(u: Vec, v: Vec) -> Vec:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def sub(u: Vec, v: Vec) -> Vec:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def scale(u: Vec, s: float) -> Vec:
    return (u[0] * s, u[1] * s, u[2] * s)


def neg(u: Vec) -> Vec:
    return (-u[0], -u[1], -u[2])


def normalize(u: Vec) -> Vec:
    n = norm(u)
    if n < 1e-14:
        raise GeometryError("cannot normalize a (near-)zero vector")
    return (u[0] / n, u[1] / n, u[2] / n)


def vec_angle(u: Vec, v: Vec) -> float:
    """Angle between unit vectors via atan2(|u x v|, u.v).

    Well conditioned near 0 and pi, unlike arccos of the inner product.
    """
    return math.atan2(norm(cross(u, v)), dot(u, v))


def perp_component(u: Vec, axis: Vec) -> Vec:
    """u minus its projection on the unit vector `axis` (not normalized)."""
    d = dot(u, axis)
    return (u[0] - d * axis[0], u[1] - d * axis[1], u[2] - d * axis[2])


def rotate(u: Vec, axis: Vec, angle: float) -> Vec:
    """Rodrigues rotation of u about a unit axis."""
    c, s = math.cos(angle), math.sin(angle)
    k = axis
    kxu = cross(k, u)
    kd = dot(k, u) * (1.0 - c)
    return (
        u[0] * c + kxu[0] * s + k[0] * kd,
        u[1] * c + kxu[1] * s + k[1] * kd,
        u[2] * c + kxu[2] * s + k[2] * kd,
    )


def orthonormal_frame(axis: Vec) -> tuple[Vec, Vec]:
    """Deterministic (e1, e2) with (e1, e2, axis) right-handed."""
    ref = (0.0, 0.0, 1.0) if abs(axis[2]) < 0.9 else (1.0, 0.0, 0.0)
    e1 = normalize(perp_component(ref, axis))
    e2 = cross(axis, e1)
    return e1, e2


def geodesic_point(a: Vec, toward: Vec, s: float) -> Vec:
    """Point at arclength s from a along the great circle through `toward`.

    s may exceed the distance |a toward| (prolongs the arc).
    """
    t = normalize(perp_component(toward, a))
    c, sn = math.cos(s), math.sin(s)
    return (a[0] * c + t[0] * sn, a[1] * c + t[1] * sn, a[2] * c + t[2] * sn)


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SpherePoint:
    """Unit vector in R^3.

    Coordinates within TOL_NORM_FIX of unit norm are renormalized on
    construction; anything farther off is rejected.
    """

    x: float
    y: float
    z: float

    def __post_init__(self) -> None:
        n = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if abs(n - 1.0) > TOL_NORM_FIX:
            raise GeometryError(f"not a unit vector (norm {n!r})")
        if abs(n - 1.0) > 1e-16:
            object.__setattr__(self, "x", self.x / n)
            object.__setattr__(self, "y", self.y / n)
            object.__setattr__(self, "z", self.z / n)

    @staticmethod
    def from_vector(v: Vec) -> "SpherePoint":
        """Normalize an arbitrary nonzero vector onto the sphere."""
        u = normalize(v)
        return SpherePoint(u[0], u[1], u[2])

    @property
    def vec(self) -> Vec:
        return (self.x, self.y, self.z)

    def antipode(self) -> "SpherePoint":
        return SpherePoint(-self.x, -self.y, -self.z)

    def __neg__(self) -> "SpherePoint":
        return self.antipode()


def distance(p: SpherePoint, q: SpherePoint) -> float:
    """Geodesic distance in [0, pi].  Antipodal pairs return pi."""
    return vec_angle(p.vec, q.vec)


@dataclass(frozen=True)
class GreatArc:
    """Shorter great-circle segment between two non-antipodal points.

    Traversal start -> end; `pole` points to the side on the left of the
    traversal, so for a positively-oriented convex boundary the pole is
    the supporting-hemisphere center of the edge.
    """

    start: SpherePoint
    end: SpherePoint

    def __post_init__(self) -> None:
        d = dot(self.start.vec, self.end.vec)
        if d >= 1.0 - TOL_GEOM:
            raise DegenerateArcError("arc endpoints coincide")
        if d <= -1.0 + TOL_GEOM:
            raise DegenerateArcError("arc endpoints are antipodal")

    @property
    def length(self) -> float:
        return distance(self.start, self.end)

    @property
    def pole(self) -> SpherePoint:
        return SpherePoint.from_vector(cross(self.start.vec, self.end.vec))

    def point_at(self, s: float) -> SpherePoint:
        """Point at arclength s from start (s in [0, length])."""
        return SpherePoint.from_vector(
            geodesic_point(self.start.vec, self.end.vec, s)
        )

    def tangent_at(self, s: float) -> Vec:
        """Unit tangent in the direction of traversal."""
        p = geodesic_point(self.start.vec, self.end.vec, s)
        return normalize(cross(self.pole.vec, p))

    def contains_point(self, p: SpherePoint, tol: float = TOL_GEOM) -> bool:
        """p lies on the segment (on the great circle, between endpoints)."""
        if abs(dot(self.pole.vec, p.vec)) > math.sqrt(2.0 * tol):
            return False
        s = vec_angle(self.start.vec, p.vec)
        t = vec_angle(self.end.vec, p.vec)
        return s + t <= self.length + math.sqrt(2.0 * tol)


@dataclass(frozen=True)
class Hemisphere:
    """Closed half-sphere H(pole) = {p : <pole, p> >= 0}."""

    pole: SpherePoint

    def contains(self, p: SpherePoint, tol: float = TOL_GEOM) -> bool:
        return dot(self.pole.vec, p.vec) >= -tol

    def margin(self, p: SpherePoint) -> float:
        """Signed support margin: >= 0 inside, 0 on the bounding circle."""
        return dot(self.pole.vec, p.vec)

    def boundary_projection(self, q: SpherePoint) -> SpherePoint:
        """Nearest point of the bounding great circle to q."""
        w = perp_component(q.vec, self.pole.vec)
        if norm(w) < 1e-14:
            raise GeometryError("projection undefined at the pole")
        return SpherePoint.from_vector(w)


@dataclass(frozen=True)
class Lune:
    """Intersection of two distinct, non-opposite hemispheres g, h.

    Bounded by two semicircles meeting at two antipodal corners; the
    semicircle lying on bd(g) has center `center_gh` (the projection of
    h's pole onto the great circle bounding g), symmetrically for h.
    """

    g: Hemisphere
    h: Hemisphere

    def __post_init__(self) -> None:
        d = dot(self.g.pole.vec, self.h.pole.vec)
        if abs(d) >= 1.0 - TOL_GEOM:
            raise DegenerateLuneError(
                "lune poles equal or antipodal (no lune)"
            )

    @property
    def pole_distance(self) -> float:
        return distance(self.g.pole, self.h.pole)

    @property
    def corners(self) -> tuple[SpherePoint, SpherePoint]:
        c = normalize(cross(self.g.pole.vec, self.h.pole.vec))
        return SpherePoint(*c), SpherePoint(*neg(c))

    @property
    def center_gh(self) -> SpherePoint:
        """Center of the bounding semicircle lying on bd(g)."""
        return SpherePoint.from_vector(
            perp_component(self.h.pole.vec, self.g.pole.vec)
        )

    @property
    def center_hg(self) -> SpherePoint:
        """Center of the bounding semicircle lying on bd(h)."""
        return SpherePoint.from_vector(
            perp_component(self.g.pole.vec, self.h.pole.vec)
        )

    def contains(self, p: SpherePoint, tol: float = TOL_GEOM) -> bool:
        return self.g.contains(p, tol) and self.h.contains(p, tol)


def lune_semicircle_centers(l: Lune) -> tuple[SpherePoint, SpherePoint]:
    """Centers of the two bounding semicircles, (on bd(g), on bd(h))."""
    return l.center_gh, l.center_hg


def lune_thickness(l: Lune) -> float:
    """Distance between the two semicircle centers.

    Always computed from the two centers; equals pi minus the pole
    distance, which the test suite verifies to 1e-12 on random lunes.
    """
    return distance(l.center_gh, l.center_hg)


def right_triangle_hypotenuse(l1: float, l2: float) -> float:
    """Hypotenuse of a right spherical triangle with legs l1, l2.

    cos k = cos l1 * cos l2, legs restricted to (0, pi/2].
    """
    half_pi = math.pi / 2.0
    if not (0.0 < l1 <= half_pi and 0.0 < l2 <= half_pi):
        raise GeometryError("legs must lie in (0, pi/2]")
    return math.acos(max(-1.0, min(1.0, math.cos(l1) * math.cos(l2))))
