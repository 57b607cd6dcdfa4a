"""Boundary representation of spherical convex bodies and basic queries.

A body is a closed, positively-oriented cyclic chain of boundary
elements (great-circle arcs and spherical-circle arcs), contained in an
open hemisphere, with convex junctions.  The convex region is exactly
the intersection of the supporting hemispheres contributed by its
elements, which makes containment and support tests closed-form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Union

import numpy as np

from .optimize import golden_section_max, min_of_sinusoid
from .sphere_core import (
    TOL_GEOM,
    GeometryError,
    GreatArc,
    SpherePoint,
    Vec,
    cross,
    distance,
    dot,
    normalize,
    orthonormal_frame,
    perp_component,
    scale,
    vec_angle,
)

TOL_AREA = 1e-12
# Endpoint chaining / on-boundary location tolerance; looser than
# TOL_GEOM to survive file-format renormalization.
TOL_JOIN = 1e-7

TWO_PI = 2.0 * math.pi


class BodyValidationError(GeometryError):
    def __init__(self, report: "ValidationReport"):
        super().__init__(f"invalid body: {report.code} ({report.message})")
        self.report = report


@dataclass(frozen=True)
class CircleArc:
    """Piece of a spherical circle, radius in (0, pi/2).

    Traversed from `start` to `end` in positive orientation around
    `center` (counterclockwise seen from the center side); the positive
    sweep must be the shorter way around, i.e. at most pi.
    """

    center: SpherePoint
    radius: float
    start: SpherePoint
    end: SpherePoint

    def __post_init__(self) -> None:
        if not (TOL_GEOM < self.radius < math.pi / 2.0 - TOL_GEOM):
            raise GeometryError(f"circle radius {self.radius} not in (0, pi/2)")
        for p in (self.start, self.end):
            if abs(distance(self.center, p) - self.radius) > 1e-6:
                raise GeometryError("arc endpoint not on the circle")
        if self.sweep <= 1e-12 or self.sweep > math.pi + 1e-9:
            raise GeometryError(
                "positively-oriented sweep must lie in (0, pi]"
            )

    @property
    def frame(self) -> tuple[Vec, Vec]:
        return orthonormal_frame(self.center.vec)

    def azimuth_of(self, p: SpherePoint) -> float:
        e1, e2 = self.frame
        return math.atan2(dot(p.vec, e2), dot(p.vec, e1))

    @property
    def azimuth_start(self) -> float:
        return self.azimuth_of(self.start)

    @property
    def sweep(self) -> float:
        """Positive azimuth advance from start to end, in (0, 2*pi)."""
        d = self.azimuth_of(self.end) - self.azimuth_of(self.start)
        return d % TWO_PI

    @property
    def length(self) -> float:
        return self.sweep * math.sin(self.radius)

    def point_at_azimuth(self, t: float) -> SpherePoint:
        e1, e2 = self.frame
        c, s = math.cos(self.radius), math.sin(self.radius)
        u = (math.cos(t), math.sin(t))
        v = tuple(
            c * self.center.vec[i] + s * (u[0] * e1[i] + u[1] * e2[i])
            for i in range(3)
        )
        return SpherePoint(*v)

    def point_at(self, s: float) -> SpherePoint:
        """Point at arclength s from start (s in [0, length])."""
        return self.point_at_azimuth(
            self.azimuth_start + s / math.sin(self.radius)
        )

    def tangent_at(self, s: float) -> Vec:
        p = self.point_at(s)
        return normalize(cross(self.center.vec, p.vec))

    def pole_at(self, s: float) -> SpherePoint:
        """Supporting-hemisphere pole at the boundary point s.

        Lies on the great circle through the arc center and the point,
        at distance pi/2 from the point on the center side.
        """
        p = self.point_at(s)
        w = scale(
            perp_component(self.center.vec, p.vec), 1.0 / math.sin(self.radius)
        )
        return SpherePoint.from_vector(w)

    def contains_point(self, p: SpherePoint, tol: float = TOL_JOIN) -> bool:
        if abs(distance(self.center, p) - self.radius) > tol:
            return False
        rel = (self.azimuth_of(p) - self.azimuth_start) % TWO_PI
        ang_tol = tol / max(math.sin(self.radius), 1e-3)
        return rel <= self.sweep + ang_tol or rel >= TWO_PI - ang_tol


BoundaryArc = Union[GreatArc, CircleArc]


class Body:
    """Convex region bounded by a cyclic arc chain.

    Treated as immutable after construction; expensive derived data is
    memoized on the instance.
    """

    def __init__(self, arcs: Iterable[BoundaryArc]):
        self.arcs: tuple[BoundaryArc, ...] = tuple(arcs)
        self._cache: dict = {}

    def __repr__(self) -> str:
        kinds = "".join(
            "G" if isinstance(a, GreatArc) else "C" for a in self.arcs
        )
        return f"Body({len(self.arcs)} arcs: {kinds})"

    @property
    def junctions(self) -> tuple[SpherePoint, ...]:
        """Junction i is the start of arc i (== end of arc i-1)."""
        return tuple(a.start for a in self.arcs)

    @property
    def perimeter(self) -> float:
        return sum(a.length for a in self.arcs)

    def junction_turns(self) -> list[float]:
        """Signed exterior angle at each junction (positive = left turn)."""
        if "turns" not in self._cache:
            turns = []
            n = len(self.arcs)
            for i in range(n):
                prev = self.arcs[(i - 1) % n]
                cur = self.arcs[i]
                p = cur.start
                t_in = prev.tangent_at(prev.length)
                t_out = cur.tangent_at(0.0)
                turn = math.atan2(
                    dot(cross(t_in, t_out), p.vec), dot(t_in, t_out)
                )
                turns.append(turn)
            self._cache["turns"] = turns
        return self._cache["turns"]

    def area(self) -> float:
        """Spherical area by the Gauss-Bonnet theorem.

        Geodesic curvature integral of a circle arc of radius r over a
        sweep phi is phi*cos(r); great arcs contribute nothing.
        """
        total_turn = sum(self.junction_turns())
        curvature = sum(
            a.sweep * math.cos(a.radius)
            for a in self.arcs
            if isinstance(a, CircleArc)
        )
        return TWO_PI - total_turn - curvature

    def interior_point(self) -> SpherePoint:
        """Normalized mean of boundary samples; inside by convexity."""
        if "interior" not in self._cache:
            pts = boundary_sample(self, max(len(self.arcs) * 8, 32))
            m = (0.0, 0.0, 0.0)
            for p in pts:
                m = (m[0] + p.x, m[1] + p.y, m[2] + p.z)
            self._cache["interior"] = SpherePoint.from_vector(m)
        return self._cache["interior"]


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    code: Optional[str] = None
    arc_index: Optional[int] = None
    message: str = ""
    area: Optional[float] = None


def _circle_pole_sinusoid(arc: CircleArc, q: Vec) -> float:
    """Min of <m, q> over the supporting poles m of a circle arc.

    Poles form the circle m(t) = sin(r)*c + cos(r)*u(t) with t running
    over the contact azimuths shifted by pi.
    """
    e1, e2 = arc.frame
    sr, cr = math.sin(arc.radius), math.cos(arc.radius)
    t0 = arc.azimuth_start + math.pi
    _, val = min_of_sinusoid(
        cr * dot(e1, q), cr * dot(e2, q), sr * dot(arc.center.vec, q),
        t0, t0 + arc.sweep,
    )
    return val


def _min_inner_on_arc(arc: BoundaryArc, m: Vec) -> tuple[float, float]:
    """Min of <m, p> over points p of the arc; returns (argmin s, min)."""
    if isinstance(arc, GreatArc):
        u, v = arc.start.vec, arc.end.vec
        ln = arc.length
        a = dot(m, u)
        b = (dot(m, v) - a * math.cos(ln)) / math.sin(ln)
        s, val = min_of_sinusoid(a, b, 0.0, 0.0, ln)
        return s, val
    e1, e2 = arc.frame
    sr, cr = math.sin(arc.radius), math.cos(arc.radius)
    t, val = min_of_sinusoid(
        sr * dot(e1, m), sr * dot(e2, m), cr * dot(arc.center.vec, m),
        arc.azimuth_start, arc.azimuth_start + arc.sweep,
    )
    return (t - arc.azimuth_start) * sr, val


def min_inner_over_body(b: Body, m: Vec) -> float:
    """Exact min of the linear functional <m, .> over the body.

    The minimum of a linear functional over a convex region is attained
    on the boundary, and on each arc it is a one-harmonic sinusoid.
    A value >= 0 means the body lies in the hemisphere with pole m;
    a value ~ 0 means that hemisphere supports the body.
    """
    return min(_min_inner_on_arc(a, m)[1] for a in b.arcs)


def support_touch_point(b: Body, m: Vec) -> SpherePoint:
    """A boundary point minimizing <m, .> (a contact point when m supports)."""
    best = None
    for a in b.arcs:
        s, val = _min_inner_on_arc(a, m)
        if best is None or val < best[0]:
            best = (val, a, s)
    return best[1].point_at(min(max(best[2], 0.0), best[1].length))


def contains(b: Body, p: SpherePoint, tol: float = TOL_GEOM) -> bool:
    """Closed-region membership.

    The body equals the intersection of the supporting hemispheres of
    its elements (junction fans are implied by their neighbours), so a
    point is inside iff it passes every per-element support-side test.
    """
    for a in b.arcs:
        if isinstance(a, GreatArc):
            if dot(a.pole.vec, p.vec) < -tol:
                return False
        else:
            if _circle_pole_sinusoid(a, p.vec) < -tol:
                return False
    return True


def validate_body(b: Body) -> ValidationReport:
    """Check closure, orientation, convexity, hemisphere containment,
    and non-empty interior; report the first violation."""
    n = len(b.arcs)
    if n < 2:
        return ValidationReport(False, "too-few-arcs", None,
                                f"{n} arc(s); a body needs at least 2")
    for i, a in enumerate(b.arcs):
        nxt = b.arcs[(i + 1) % n]
        if distance(a.end, nxt.start) > TOL_JOIN:
            return ValidationReport(
                False, "not-closed", i,
                f"arc {i} end does not meet arc {(i + 1) % n} start")
    area = b.area()
    if area >= TWO_PI - 1e-9:
        return ValidationReport(False, "orientation", None,
                                "boundary traversed clockwise", area)
    for i, turn in enumerate(b.junction_turns()):
        if turn < -1e-9:
            return ValidationReport(
                False, "convexity", i,
                f"reflex junction at arc {i} (turn {turn:.3g})", area)
    for i, a in enumerate(b.arcs):
        if isinstance(a, GreatArc):
            if min_inner_over_body(b, a.pole.vec) < -1e-9:
                return ValidationReport(
                    False, "convexity", i,
                    f"great arc {i} is not on a supporting circle", area)
        else:
            for s in (0.0, 0.5 * a.length, a.length):
                if min_inner_over_body(b, a.pole_at(s).vec) < -1e-9:
                    return ValidationReport(
                        False, "convexity", i,
                        f"circle arc {i} does not bulge outward", area)
    ctr = b.interior_point()
    reach = max(
        vec_angle(ctr.vec, p.vec)
        for p in boundary_sample(b, max(8 * n, 64))
    )
    if reach >= math.pi / 2.0 - 1e-9:
        return ValidationReport(
            False, "not-in-hemisphere", None,
            f"boundary reaches {reach:.6f} from the centroid", area)
    if area <= TOL_AREA:
        return ValidationReport(False, "empty-interior", None,
                                f"area {area:.3g}", area)
    return ValidationReport(True, None, None, "ok", area)


def ensure_valid(b: Body) -> Body:
    if "valid" not in b._cache:
        report = validate_body(b)
        b._cache["valid"] = report
    report = b._cache["valid"]
    if not report.ok:
        raise BodyValidationError(report)
    return b


def polygon(vertices: Iterable[SpherePoint]) -> Body:
    """Body whose boundary is the great-arc cycle through the vertices."""
    vs = list(vertices)
    if len(vs) < 3:
        raise GeometryError("a polygon needs at least 3 vertices")
    return Body(GreatArc(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs)))


def is_polygon(b: Body) -> bool:
    return all(isinstance(a, GreatArc) for a in b.arcs)


# ---------------------------------------------------------------------------
# extreme points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExtremeSet:
    """Exact description of the extreme points.

    `vertices` are isolated extreme junctions; every interior point of
    the arcs listed in `full_arcs` is extreme as well.  Interior points
    of great arcs are never extreme.
    """

    vertices: tuple[SpherePoint, ...]
    full_arcs: tuple[tuple[int, CircleArc], ...]

    def sample_points(self, per_arc: int = 32) -> list[SpherePoint]:
        pts = list(self.vertices)
        for _, arc in self.full_arcs:
            for j in range(per_arc + 1):
                pts.append(arc.point_at(arc.length * j / per_arc))
        return pts


def extreme_points(b: Body) -> ExtremeSet:
    """A junction is extreme iff it is a genuine corner or the incident
    arcs change curvature there; circle arcs are extreme throughout."""
    n = len(b.arcs)
    turns = b.junction_turns()
    vertices = []
    for i in range(n):
        prev, cur = b.arcs[(i - 1) % n], b.arcs[i]
        if turns[i] > 1e-8:
            vertices.append(cur.start)
            continue
        if isinstance(prev, GreatArc) != isinstance(cur, GreatArc):
            vertices.append(cur.start)
        elif isinstance(prev, CircleArc) and isinstance(cur, CircleArc):
            same = (
                distance(prev.center, cur.center) <= 1e-9
                and abs(prev.radius - cur.radius) <= 1e-9
            )
            if not same:
                vertices.append(cur.start)
    full = tuple(
        (i, a) for i, a in enumerate(b.arcs) if isinstance(a, CircleArc)
    )
    return ExtremeSet(tuple(vertices), full)


# ---------------------------------------------------------------------------
# boundary sampling
# ---------------------------------------------------------------------------

def boundary_sample(b: Body, n: int) -> list[SpherePoint]:
    """n boundary points: all junctions plus per-arc interior samples
    allocated proportionally to arc length (largest remainder)."""
    arcs = b.arcs
    if n < len(arcs):
        raise GeometryError(f"need at least {len(arcs)} samples")
    extra = n - len(arcs)
    total = b.perimeter
    quota = [extra * a.length / total for a in arcs]
    counts = [int(q) for q in quota]
    rem = extra - sum(counts)
    order = sorted(range(len(arcs)), key=lambda i: quota[i] - counts[i],
                   reverse=True)
    for i in order[:rem]:
        counts[i] += 1
    pts: list[SpherePoint] = []
    for a, k in zip(arcs, counts):
        pts.append(a.start)
        for j in range(k):
            pts.append(a.point_at(a.length * (j + 1) / (k + 1)))
    return pts


def locate_on_boundary(
    b: Body, p: SpherePoint, tol: float = TOL_JOIN
) -> Optional[tuple[int, float]]:
    """(arc index, arclength parameter) of p on the boundary, or None."""
    best = None
    for i, a in enumerate(b.arcs):
        if isinstance(a, GreatArc):
            if abs(dot(a.pole.vec, p.vec)) > tol:
                continue
            s = vec_angle(a.start.vec, p.vec)
            t = vec_angle(a.end.vec, p.vec)
            if s + t > a.length + tol:
                continue
            err = abs(dot(a.pole.vec, p.vec))
        else:
            err = abs(distance(a.center, p) - a.radius)
            if err > tol:
                continue
            rel = (a.azimuth_of(p) - a.azimuth_start) % TWO_PI
            ang_tol = tol / max(math.sin(a.radius), 1e-3)
            if rel > a.sweep + ang_tol:
                if rel < TWO_PI - ang_tol:
                    continue
                rel = 0.0
            s = min(rel, a.sweep) * math.sin(a.radius)
        s = min(max(s, 0.0), a.length)
        if best is None or err < best[0]:
            best = (err, i, s)
    return None if best is None else (best[1], best[2])


def on_boundary(b: Body, p: SpherePoint, tol: float = TOL_JOIN) -> bool:
    return locate_on_boundary(b, p, tol) is not None


def boundary_piece_points(
    b: Body, p: SpherePoint, q: SpherePoint, max_step: float = 0.01
) -> list[SpherePoint]:
    """Points tracing the boundary from p to q in positive orientation."""
    lp = locate_on_boundary(b, p)
    lq = locate_on_boundary(b, q)
    if lp is None or lq is None:
        raise GeometryError("piece endpoints must lie on the boundary")
    n = len(b.arcs)
    (i, s), (j, t) = lp, lq
    segs: list[tuple[BoundaryArc, float, float]] = []
    if i == j and s <= t:
        segs.append((b.arcs[i], s, t))
    else:
        segs.append((b.arcs[i], s, b.arcs[i].length))
        k = (i + 1) % n
        while k != j:
            segs.append((b.arcs[k], 0.0, b.arcs[k].length))
            k = (k + 1) % n
        segs.append((b.arcs[j], 0.0, t))
    pts = [p]
    for arc, s0, s1 in segs:
        if s1 - s0 <= 1e-12:
            continue
        m = max(1, math.ceil((s1 - s0) / max_step))
        for u in range(1, m + 1):
            pts.append(arc.point_at(s0 + (s1 - s0) * u / m))
    pts.append(q)
    return pts


# ---------------------------------------------------------------------------
# diameter
# ---------------------------------------------------------------------------

def _pairwise_max_candidates(points, top_k: int):
    arr = np.array([p.vec for *_, p in points])
    gram = arr @ arr.T
    iu = np.triu_indices(len(points), k=1)
    vals = gram[iu]
    order = np.argsort(vals)[:top_k]
    best = math.acos(float(max(-1.0, min(1.0, vals[order[0]]))))
    pairs = []
    for idx in order:
        a, bb = iu[0][idx], iu[1][idx]
        pairs.append((points[a][:3], points[bb][:3]))
    return best, pairs


def _refine_pair(
    b: Body,
    loc1: tuple[int, float, float],
    loc2: tuple[int, float, float],
) -> float:
    """Locally maximize the distance between two boundary points by
    alternating golden-section on the arclength parameters.

    Each loc is (arc index, arclength, window); a zero window pins the
    point (used for candidates that must stay at a vertex).
    """
    a1, a2 = b.arcs[loc1[0]], b.arcs[loc2[0]]
    s1, w1 = loc1[1], loc1[2]
    s2, w2 = loc2[1], loc2[2]

    def fixed2(s):
        return distance(a1.point_at(s), a2.point_at(s2))

    def fixed1(s):
        return distance(a1.point_at(s1), a2.point_at(s))

    val = distance(a1.point_at(s1), a2.point_at(s2))
    for _ in range(4):
        if w1 > 0.0:
            lo, hi = max(0.0, s1 - w1), min(a1.length, s1 + w1)
            s1, val = golden_section_max(fixed2, lo, hi, tol=1e-13)
        if w2 > 0.0:
            lo, hi = max(0.0, s2 - w2), min(a2.length, s2 + w2)
            s2, val = golden_section_max(fixed1, lo, hi, tol=1e-13)
        if w1 == 0.0 and w2 == 0.0:
            break
    return val


Candidate = tuple[int, float, float, SpherePoint]  # arc, s, window, point


def _diameter_over(b: Body, points: list[Candidate]) -> float:
    coarse, pairs = _pairwise_max_candidates(points, top_k=32)
    best = coarse
    for loc1, loc2 in pairs:
        best = max(best, _refine_pair(b, loc1, loc2))
    return best


def _sample_candidates(b: Body, n: int) -> list[Candidate]:
    out: list[Candidate] = []
    for i, a in enumerate(b.arcs):
        k = max(2, math.ceil(n * a.length / b.perimeter))
        window = 2.5 * a.length / k
        for j in range(k + 1):
            s = a.length * j / k
            out.append((i, s, window, a.point_at(s)))
    return out


def diameter(b: Body) -> float:
    """Max pairwise geodesic distance, full-boundary search.

    Coarse all-pairs over a dense sample, then golden-section
    refinement of the top candidate pairs in both arc parameters.
    """
    ensure_valid(b)
    if "diameter" not in b._cache:
        pts = _sample_candidates(b, max(768, 128 * len(b.arcs)))
        b._cache["diameter"] = _diameter_over(b, pts)
    return b._cache["diameter"]


def extreme_diameter(b: Body) -> float:
    """Max pairwise distance over the extreme set only.

    Isolated extreme vertices are pinned; only circle-arc parameters
    are refined, so interior points of great arcs never contribute.
    """
    ensure_valid(b)
    ex = extreme_points(b)
    pts: list[Candidate] = []
    for v in ex.vertices:
        loc = locate_on_boundary(b, v)
        pts.append((loc[0], loc[1], 0.0, v))
    for i, arc in ex.full_arcs:
        k = max(64, math.ceil(256 * arc.length / b.perimeter))
        window = 2.5 * arc.length / k
        for j in range(k + 1):
            s = arc.length * j / k
            pts.append((i, s, window, arc.point_at(s)))
    if len(pts) < 2:
        raise GeometryError("extreme set too small")
    return _diameter_over(b, pts)


# ---------------------------------------------------------------------------
# cutting (used by the reducedness certificate to exhibit witnesses)
# ---------------------------------------------------------------------------

def _arc_crossings(arc: BoundaryArc, m: Vec) -> list[float]:
    """Arclength parameters where <m, arc(s)> changes sign."""
    out = []
    if isinstance(arc, GreatArc):
        u, v = arc.start.vec, arc.end.vec
        ln = arc.length
        a = dot(m, u)
        bcoef = (dot(m, v) - a * math.cos(ln)) / math.sin(ln)
        base = math.atan2(-a, bcoef)
        for k in (-1, 0, 1):
            s = base + k * math.pi
            if 1e-12 < s < ln - 1e-12:
                out.append(s)
    else:
        e1, e2 = arc.frame
        sr, cr = math.sin(arc.radius), math.cos(arc.radius)
        acoef = sr * dot(e1, m)
        bcoef = sr * dot(e2, m)
        off = cr * dot(arc.center.vec, m)
        r = math.hypot(acoef, bcoef)
        if r < abs(off):
            return out
        t0 = math.atan2(bcoef, acoef)
        delta = math.acos(max(-1.0, min(1.0, -off / r)))
        for t in (t0 + delta, t0 - delta):
            rel = (t - arc.azimuth_start) % TWO_PI
            if 1e-12 < rel < arc.sweep - 1e-12:
                out.append(rel * sr)
    return sorted(out)


def _subarc(arc: BoundaryArc, s0: float, s1: float) -> Optional[BoundaryArc]:
    if s1 - s0 <= 1e-9:
        return None
    p, q = arc.point_at(s0), arc.point_at(s1)
    if isinstance(arc, GreatArc):
        return GreatArc(p, q)
    return CircleArc(arc.center, arc.radius, p, q)


def cut_with_hemisphere(b: Body, pole: SpherePoint) -> Body:
    """Intersection of the body with the hemisphere H(pole).

    Requires the bounding great circle to cross the boundary exactly
    twice (a cap cut); the removed side is replaced by a great-arc chord.
    """
    ensure_valid(b)
    m = pole.vec
    pieces: list[BoundaryArc | str] = []
    crossing_pts: list[SpherePoint] = []
    for arc in b.arcs:
        cuts = _arc_crossings(arc, m)
        params = [0.0] + cuts + [arc.length]
        for s0, s1 in zip(params[:-1], params[1:]):
            sub = _subarc(arc, s0, s1)
            if sub is None:
                continue
            mid = arc.point_at(0.5 * (s0 + s1))
            if dot(m, mid.vec) >= 0.0:
                pieces.append(sub)
            else:
                if not pieces or pieces[-1] != "gap":
                    pieces.append("gap")
        for s in cuts:
            crossing_pts.append(arc.point_at(s))
    if len(crossing_pts) != 2:
        raise GeometryError(
            f"cut crosses the boundary {len(crossing_pts)} times, need 2"
        )
    # rotate the piece list so it starts just after the gap
    if "gap" not in pieces:
        return b
    while pieces[0] == "gap" or pieces[-1] != "gap":
        pieces.append(pieces.pop(0))
    kept = [p for p in pieces if p != "gap"]
    chord = GreatArc(kept[-1].end, kept[0].start)
    out = Body(kept + [chord])
    ensure_valid(out)
    return out
