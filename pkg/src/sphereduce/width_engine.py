"""Width and thickness of spherical convex bodies.

The family of all supporting hemispheres of a body is parameterized
exactly by its *dual boundary*: isolated poles for great-arc edges,
small circles of poles for circle arcs, and great-circle fans of poles
at corners.  The width determined by a supporting hemisphere K is
pi minus the largest pole distance from K over that family (narrowest
lune with K on one side), so all width questions reduce to extremizing
one-harmonic sinusoids over dual pieces, which is done in closed form;
golden-section refinement is used only along the dual parameter.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .body import (
    Body,
    cut_with_hemisphere,
    ensure_valid,
    extreme_points,
    locate_on_boundary,
    min_inner_over_body,
)
from .optimize import golden_section_min, min_of_sinusoid
from .sphere_core import (
    TOL_GEOM,
    GeometryError,
    GreatArc,
    Hemisphere,
    Lune,
    SpherePoint,
    Vec,
    cross,
    dot,
    lune_thickness,
    normalize,
    perp_component,
    vec_angle,
)

N_DIR = 720          # coarse directions for thickness / constant-width sweeps
TOL_CERT = 1e-6      # reducedness certificate tolerance
TOL_SUPPORT = 1e-7   # acceptable support margin for user-supplied hemispheres

ZERO: Vec = (0.0, 0.0, 0.0)


class NotOnBoundaryError(GeometryError):
    pass


class SupportError(GeometryError):
    pass


# ---------------------------------------------------------------------------
# dual boundary
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DualPiece:
    """One piece of the dual boundary: poles m(t) = S + P cos t + Q sin t.

    kind 'point': a single pole (great-arc edge), parameter length 0.
    kind 'fan'  : great-circle arc of poles at a corner junction.
    kind 'cap'  : small circle of poles from a boundary circle arc.
    """

    kind: str
    S: Vec
    P: Vec
    Q: Vec
    t0: float
    t1: float
    contact: object  # arc index for point/cap, junction SpherePoint for fan

    @property
    def length(self) -> float:
        return self.t1 - self.t0

    def pole_at(self, t: float) -> Vec:
        c, s = math.cos(t), math.sin(t)
        return (
            self.S[0] + self.P[0] * c + self.Q[0] * s,
            self.S[1] + self.P[1] * c + self.Q[1] * s,
            self.S[2] + self.P[2] * c + self.Q[2] * s,
        )

    def min_inner(self, k: Vec) -> tuple[float, float]:
        """(argmin t, min) of <k, m(t)> over the piece."""
        if self.kind == "point":
            return self.t0, dot(k, self.P) + dot(k, self.S)
        return min_of_sinusoid(
            dot(k, self.P), dot(k, self.Q), dot(k, self.S), self.t0, self.t1
        )


@dataclass
class DualBoundary:
    """Cyclic, positively-oriented parameterization of all supporting
    poles of a body."""

    pieces: list[DualPiece]
    offsets: list[float]
    total: float

    def pole_at_param(self, u: float) -> Vec:
        u = u % self.total if self.total > 0 else 0.0
        for piece, off in zip(self.pieces, self.offsets):
            if u <= off + piece.length + 1e-15:
                if piece.kind == "point":
                    return piece.pole_at(piece.t0)
                t = min(piece.t0 + (u - off), piece.t1)
                return piece.pole_at(t)
        return self.pieces[-1].pole_at(self.pieces[-1].t1)

    def anchor_params(self) -> list[float]:
        """Parameters of all isolated poles and piece endpoints."""
        out = []
        for piece, off in zip(self.pieces, self.offsets):
            out.append(off)
            if piece.length > 0.0:
                out.append(off + piece.length)
        return out

    def grid_params(self, n: int) -> list[float]:
        """n parameters uniform in arc measure, plus every anchor."""
        params = list(self.anchor_params())
        if self.total > 0.0:
            params.extend(self.total * i / n for i in range(n))
        params = sorted(set(round(u, 15) for u in params))
        return params


def _end_pole(arc) -> Vec:
    if isinstance(arc, GreatArc):
        return arc.pole.vec
    return arc.pole_at(arc.length).vec


def _start_pole(arc) -> Vec:
    if isinstance(arc, GreatArc):
        return arc.pole.vec
    return arc.pole_at(0.0).vec


def dual_boundary(b: Body) -> DualBoundary:
    """Build (and memoize) the dual boundary of a validated body."""
    if "dual" in b._cache:
        return b._cache["dual"]
    ensure_valid(b)
    pieces: list[DualPiece] = []
    n = len(b.arcs)
    for i, arc in enumerate(b.arcs):
        if isinstance(arc, GreatArc):
            pieces.append(
                DualPiece("point", ZERO, arc.pole.vec, ZERO, 0.0, 0.0, i)
            )
        else:
            e1, e2 = arc.frame
            sr, cr = math.sin(arc.radius), math.cos(arc.radius)
            s_vec = tuple(sr * c for c in arc.center.vec)
            p_vec = tuple(cr * c for c in e1)
            q_vec = tuple(cr * c for c in e2)
            t0 = arc.azimuth_start + math.pi
            pieces.append(
                DualPiece("cap", s_vec, p_vec, q_vec, t0, t0 + arc.sweep, i)
            )
        nxt = b.arcs[(i + 1) % n]
        m_in, m_out = _end_pole(arc), _start_pole(nxt)
        tau = vec_angle(m_in, m_out)
        if tau > 1e-9:
            w = normalize(perp_component(m_out, m_in))
            pieces.append(
                DualPiece("fan", ZERO, m_in, w, 0.0, tau, nxt.start)
            )
    offsets, acc = [], 0.0
    for piece in pieces:
        offsets.append(acc)
        acc += piece.length
    dual = DualBoundary(pieces, offsets, acc)
    b._cache["dual"] = dual
    return dual


def _dual_numpy(b: Body):
    """Per-piece arrays for vectorized width evaluation."""
    if "dual_np" not in b._cache:
        dual = dual_boundary(b)
        b._cache["dual_np"] = [
            (
                p.kind,
                np.array(p.S),
                np.array(p.P),
                np.array(p.Q),
                p.t0,
                p.t1,
            )
            for p in dual.pieces
        ]
    return b._cache["dual_np"]


# ---------------------------------------------------------------------------
# supporting hemispheres
# ---------------------------------------------------------------------------

def supporting_hemisphere_at(b: Body, p: SpherePoint, side: str) -> Hemisphere:
    """Right/left supporting hemisphere at a boundary point.

    At a junction the right one is determined by the incoming arc and
    the left one by the outgoing arc; elsewhere they coincide.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    ensure_valid(b)
    loc = locate_on_boundary(b, p)
    if loc is None:
        raise NotOnBoundaryError("point is not on the boundary")
    i, s = loc
    arcs = b.arcs
    arc = arcs[i]
    tol = 1e-7
    if s <= tol:  # junction at the start of arc i
        if side == "right":
            return Hemisphere(SpherePoint(*_end_pole(arcs[i - 1])))
        return Hemisphere(SpherePoint(*_start_pole(arc)))
    if s >= arc.length - tol:  # junction at the end of arc i
        if side == "right":
            return Hemisphere(SpherePoint(*_end_pole(arc)))
        return Hemisphere(SpherePoint(*_start_pole(arcs[(i + 1) % len(arcs)])))
    if isinstance(arc, GreatArc):
        return Hemisphere(arc.pole)
    return Hemisphere(arc.pole_at(s))


@dataclass(frozen=True)
class SupportContact:
    """A supporting hemisphere together with its touching set."""

    hemisphere: Hemisphere
    points: tuple[SpherePoint, ...]
    arcs: tuple[GreatArc, ...]


def support_contact(b: Body, k: Hemisphere) -> SupportContact:
    """Touching set of a supporting hemisphere (points and whole edges)."""
    ensure_valid(b)
    m = k.pole.vec
    margin = min_inner_over_body(b, m)
    if margin < -TOL_SUPPORT or margin > TOL_SUPPORT:
        raise SupportError(f"hemisphere does not support the body "
                           f"(margin {margin:.3g})")
    pts: list[SpherePoint] = []
    arcs: list[GreatArc] = []
    for arc in b.arcs:
        if isinstance(arc, GreatArc):
            m_s = dot(m, arc.start.vec)
            m_e = dot(m, arc.end.vec)
            if abs(m_s) <= TOL_SUPPORT and abs(m_e) <= TOL_SUPPORT:
                arcs.append(arc)
                continue
            if abs(m_s) <= TOL_SUPPORT:
                pts.append(arc.start)
            if abs(m_e) <= TOL_SUPPORT:
                pts.append(arc.end)
        else:
            # tangency where the pole family passes through m
            e1, e2 = arc.frame
            sr, cr = math.sin(arc.radius), math.cos(arc.radius)
            t, val = min_of_sinusoid(
                sr * dot(e1, m), sr * dot(e2, m),
                cr * dot(arc.center.vec, m),
                arc.azimuth_start, arc.azimuth_start + arc.sweep,
            )
            if abs(val) <= TOL_SUPPORT:
                pts.append(arc.point_at_azimuth(t))
    dedup: list[SpherePoint] = []
    for p in pts:
        if all(vec_angle(p.vec, q.vec) > 1e-9 for q in dedup):
            dedup.append(p)
    return SupportContact(k, tuple(dedup), tuple(arcs))


# ---------------------------------------------------------------------------
# width
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WidthWitness:
    """Narrowest lune with K on one side: K* the partner, a and b the
    semicircle centers (of K/K* and K*/K), width its thickness."""

    k: Hemisphere
    k_star: Hemisphere
    lune: Lune
    a: SpherePoint
    b: SpherePoint
    width: float
    multiplicity: int = 1
    continuum: bool = False


def _check_supports(b: Body, k: Hemisphere) -> None:
    margin = min_inner_over_body(b, k.pole.vec)
    if not (-TOL_SUPPORT <= margin <= TOL_SUPPORT):
        raise SupportError(
            f"hemisphere with pole {k.pole.vec} does not support the body "
            f"(margin {margin:.3g})"
        )


def width_value(b: Body, kvec: Vec) -> float:
    """Width determined by the supporting hemisphere with pole kvec.

    pi minus the largest pole distance over the dual boundary; the
    distance is evaluated with the atan2 form at the exact argmin.
    """
    dual = dual_boundary(b)
    best_val, best_piece, best_t = math.inf, None, 0.0
    for piece in dual.pieces:
        t, val = piece.min_inner(kvec)
        if val < best_val:
            best_val, best_piece, best_t = val, piece, t
    m = best_piece.pole_at(best_t)
    return math.pi - vec_angle(kvec, m)


def width_at(b: Body, k: Hemisphere, check_support: bool = True) -> WidthWitness:
    """Full width witness at a supporting hemisphere K.

    Ties between maximizing partner poles are resolved toward the
    lexicographically smallest pole (coordinates rounded to 1e-12) so
    results are deterministic; multiplicity records distinct tied
    partners, `continuum` that a whole dual piece is tied.
    """
    ensure_valid(b)
    if check_support:
        _check_supports(b, k)
    kvec = k.pole.vec
    dual = dual_boundary(b)
    candidates: list[tuple[float, Vec, bool]] = []
    best_val = math.inf
    for piece in dual.pieces:
        t, val = piece.min_inner(kvec)
        flat = False
        if piece.kind != "point":
            amp = math.hypot(dot(kvec, piece.P), dot(kvec, piece.Q))
            flat = amp <= 1e-12
        candidates.append((val, piece.pole_at(t), flat))
        best_val = min(best_val, val)
    tied = [c for c in candidates if c[0] <= best_val + 1e-12]
    poles = sorted(
        (tuple(round(x, 12) for x in c[1]), c[1]) for c in tied
    )
    m_star = normalize(poles[0][1])
    distinct = len({rounded for rounded, _ in poles})
    continuum = any(c[2] for c in tied)
    k_star = Hemisphere(SpherePoint(*m_star))
    lune = Lune(k, k_star)
    width = lune_thickness(lune)
    return WidthWitness(
        k=k,
        k_star=k_star,
        lune=lune,
        a=lune.center_gh,
        b=lune.center_hg,
        width=width,
        multiplicity=distinct,
        continuum=continuum,
    )


def widths_on_grid(b: Body, n: int = N_DIR) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized widths at n grid poles plus every dual anchor.

    Returns (params, widths); used for coarse sweeps only, final
    numbers are recomputed through the scalar atan2 path.
    """
    dual = dual_boundary(b)
    params = dual.grid_params(n)
    poles = np.array([dual.pole_at_param(u) for u in params])
    return np.array(params), widths_at_poles(b, poles)


def widths_at_poles(b: Body, poles: np.ndarray) -> np.ndarray:
    """Width at each row of `poles` (assumed supporting)."""
    two_pi = 2.0 * math.pi
    mins = None
    for kind, S, P, Q, t0, t1 in _dual_numpy(b):
        a = poles @ P
        if kind == "point":
            val = a + poles @ S
        else:
            bb = poles @ Q
            c = poles @ S
            r = np.hypot(a, bb)
            tmin = np.arctan2(bb, a) + math.pi
            # shift the sinusoid minimizer into (..., t1] by 2*pi steps
            tin = tmin + two_pi * np.floor((t1 - tmin) / two_pi)
            inside = tin >= t0 - 1e-15
            end_min = np.minimum(
                c + a * math.cos(t0) + bb * math.sin(t0),
                c + a * math.cos(t1) + bb * math.sin(t1),
            )
            val = np.where(inside, c - r, end_min)
        mins = val if mins is None else np.minimum(mins, val)
    return math.pi - np.arccos(np.clip(mins, -1.0, 1.0))


def thickness(b: Body, n_dir: int = N_DIR) -> tuple[float, WidthWitness]:
    """Minimum width over all supporting hemispheres.

    Coarse vectorized sweep over the dual grid, then golden-section
    refinement of the best bracket; among grid ties the hemisphere
    first in cyclic dual order from a fixed seed direction is reported.
    """
    ensure_valid(b)
    if "thickness" in b._cache and b._cache["thickness_n"] >= n_dir:
        return b._cache["thickness"]
    params, widths = widths_on_grid(b, n_dir)
    dual = dual_boundary(b)
    order = np.argsort(widths)
    w_best = float(widths[order[0]])

    # deterministic tie-break: first in cyclic order from the seed pole
    seed = (0.0, 0.0, 1.0)
    ctr = b.interior_point().vec
    if dot(seed, ctr) < 0.0:
        seed = (0.0, 0.0, -1.0)
    seed_dists = [vec_angle(dual.pole_at_param(u), seed) for u in params]
    u_seed = params[int(np.argmin(seed_dists))]
    tied = [
        params[i]
        for i in range(len(params))
        if widths[i] <= w_best + 1e-9
    ]
    u_star = min(tied, key=lambda u: round((u - u_seed) % max(dual.total, 1e-12), 12))

    # golden-section refinement around the winning grid parameter
    if dual.total > 0.0:
        idx = list(params).index(u_star)
        lo = params[idx - 1] if idx > 0 else u_star - dual.total / n_dir
        hi = (
            params[idx + 1]
            if idx + 1 < len(params)
            else u_star + dual.total / n_dir
        )
        u_ref, w_ref = golden_section_min(
            lambda u: width_value(b, dual.pole_at_param(u)), lo, hi, tol=1e-12
        )
        if w_ref < width_value(b, dual.pole_at_param(u_star)):
            u_star = u_ref
    pole = dual.pole_at_param(u_star)
    witness = width_at(b, Hemisphere(SpherePoint(*pole)), check_support=False)
    result = (witness.width, witness)
    b._cache["thickness"] = result
    b._cache["thickness_n"] = n_dir
    return result


def minimizing_witnesses(
    b: Body, n_dir: int = N_DIR, tol: float = 1e-9
) -> tuple[list[WidthWitness], bool]:
    """All isolated width minimizers in cyclic dual order.

    Returns (witnesses, continuum); when more than 90% of the grid is
    tied at the minimum (constant-width bodies) the sweep reports a
    sampled subset with continuum=True.
    """
    delta, _ = thickness(b, n_dir)
    params, widths = widths_on_grid(b, n_dir)
    dual = dual_boundary(b)
    mask = widths <= delta + max(tol, 1e-10)
    frac = float(np.mean(mask))
    if frac > 0.9:
        step = max(1, len(params) // 32)
        wits = [
            width_at(
                b,
                Hemisphere(SpherePoint(*dual.pole_at_param(params[i]))),
                check_support=False,
            )
            for i in range(0, len(params), step)
        ]
        return wits, True

    # cluster contiguous tied parameters (cyclically)
    loose = widths <= delta + 1e-7
    n = len(params)
    clusters: list[list[int]] = []
    cur: list[int] = []
    for i in range(n):
        if loose[i]:
            cur.append(i)
        elif cur:
            clusters.append(cur)
            cur = []
    if cur:
        if clusters and loose[0] and clusters[0][0] == 0:
            clusters[0] = cur + clusters[0]
        else:
            clusters.append(cur)

    witnesses: list[tuple[float, WidthWitness]] = []
    for cl in clusters:
        lo = params[cl[0] - 1] if cl[0] > 0 else params[cl[0]] - dual.total / n_dir
        hi_idx = cl[-1]
        hi = (
            params[hi_idx + 1]
            if hi_idx + 1 < n
            else params[hi_idx] + dual.total / n_dir
        )
        u_ref, w_ref = golden_section_min(
            lambda u: width_value(b, dual.pole_at_param(u)), lo, hi, tol=1e-12
        )
        best_u, best_w = u_ref, w_ref
        for i in cl:  # anchors inside the cluster may beat the interior
            if widths[i] < best_w:
                best_u, best_w = params[i], widths[i]
        if best_w <= delta + tol:
            w = width_at(
                b,
                Hemisphere(SpherePoint(*dual.pole_at_param(best_u))),
                check_support=False,
            )
            witnesses.append(((best_u % dual.total) if dual.total else 0.0, w))
    witnesses.sort(key=lambda t: t[0])
    out: list[WidthWitness] = []
    for _, w in witnesses:
        if all(
            vec_angle(w.k.pole.vec, o.k.pole.vec) > 1e-8 for o in out
        ):
            out.append(w)
    return out, False


# ---------------------------------------------------------------------------
# shape predicates
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConstantWidthReport:
    is_constant: bool
    w_min: float
    w_max: float

    @property
    def spread(self) -> float:
        return self.w_max - self.w_min


def is_constant_width(
    b: Body, tol: float = 1e-6, n_dir: int = N_DIR
) -> ConstantWidthReport:
    """True iff the width spread over the dual sweep is at most tol."""
    _, widths = widths_on_grid(b, n_dir)
    w_min, w_max = float(np.min(widths)), float(np.max(widths))
    return ConstantWidthReport(w_max - w_min <= tol, w_min, w_max)


def is_strictly_convex(b: Body) -> bool:
    """No great arc in the boundary (circle arcs are strictly curved)."""
    ensure_valid(b)
    return not any(isinstance(a, GreatArc) for a in b.arcs)


def is_smooth(b: Body) -> bool:
    """Left and right supporting poles coincide at every junction."""
    ensure_valid(b)
    n = len(b.arcs)
    for i in range(n):
        m_in = _end_pole(b.arcs[i])
        m_out = _start_pole(b.arcs[(i + 1) % n])
        if vec_angle(m_in, m_out) > TOL_GEOM:
            return False
    return True


# ---------------------------------------------------------------------------
# order of supporting hemispheres
# ---------------------------------------------------------------------------

ORDERED = "ordered"
NOT_ORDERED = "not-ordered"
DEGENERATE = "degenerate"


def order_triple(x: Hemisphere, y: Hemisphere, z: Hemisphere) -> str:
    """Cyclic order of three supporting hemispheres.

    Generic case: sign of det(x, y, z) of the poles.  When the three
    bounding great circles share a point c (coplanar poles), the order
    is read along the boundary circle of the hemisphere centered at
    c = cross(x, y) (canonical choice of the two shared points).
    Two equal or antipodal poles are degenerate.
    """
    xs, ys, zs = x.pole.vec, y.pole.vec, z.pole.vec
    for u, v in ((xs, ys), (ys, zs), (zs, xs)):
        ang = vec_angle(u, v)
        if ang < 1e-9 or ang > math.pi - 1e-9:
            return DEGENERATE
    det = dot(xs, cross(ys, zs))
    if abs(det) > TOL_GEOM:
        return ORDERED if det > 0.0 else NOT_ORDERED
    c = normalize(cross(xs, ys))
    e2 = cross(c, xs)
    az_y = math.atan2(dot(ys, e2), dot(ys, xs)) % (2.0 * math.pi)
    az_z = math.atan2(dot(zs, e2), dot(zs, xs)) % (2.0 * math.pi)
    return ORDERED if az_y < az_z else NOT_ORDERED


# ---------------------------------------------------------------------------
# reducedness certificate
# ---------------------------------------------------------------------------

@dataclass
class ReducednessCertificate:
    status: str  # "certified-reduced" | "falsified" | "inconclusive"
    thickness: float
    min_margin: float
    uncovered: Optional[SpherePoint]
    cut_body: Optional[Body]
    cut_thickness: Optional[float]
    extreme_samples: int
    fan_samples: int

    @property
    def grade(self) -> str:
        if self.status == "certified-reduced":
            return (
                f"certified-reduced (sampling-certified at "
                f"{self.extreme_samples} extreme points, "
                f"{self.fan_samples} fan samples)"
            )
        return self.status


def coverage_margin(b: Body, e: SpherePoint, delta: float,
                    fan_samples: int = 64) -> float:
    """Best support margin of a lune of thickness delta centered at e.

    For K in the supporting fan at e the unique partner hemisphere
    putting e at the center of K/K* has pole -cos(delta) k + sin(delta) e;
    the margin is how far the body is from fitting inside it.  A value
    >= 0 certifies a witness lune through e.
    """
    m_r = supporting_hemisphere_at(b, e, "right").pole.vec
    m_l = supporting_hemisphere_at(b, e, "left").pole.vec
    cd, sd = math.cos(delta), math.sin(delta)
    ev = e.vec

    def margin_of(k: Vec) -> float:
        m_req = (
            -cd * k[0] + sd * ev[0],
            -cd * k[1] + sd * ev[1],
            -cd * k[2] + sd * ev[2],
        )
        return min_inner_over_body(b, normalize(m_req))

    tau = vec_angle(m_r, m_l)
    if tau <= 1e-9:
        return margin_of(m_r)
    w = normalize(perp_component(m_l, m_r))

    def k_of(t: float) -> Vec:
        ct, st = math.cos(t), math.sin(t)
        return (
            m_r[0] * ct + w[0] * st,
            m_r[1] * ct + w[1] * st,
            m_r[2] * ct + w[2] * st,
        )

    ts = [tau * i / fan_samples for i in range(fan_samples + 1)]
    vals = [margin_of(k_of(t)) for t in ts]
    i_best = max(range(len(ts)), key=lambda i: vals[i])
    lo = ts[max(0, i_best - 1)]
    hi = ts[min(len(ts) - 1, i_best + 1)]
    _, neg_best = golden_section_min(
        lambda t: -margin_of(k_of(t)), lo, hi, tol=1e-12
    )
    return max(-neg_best, vals[i_best])


def reducedness_certificate(
    b: Body,
    extreme_per_arc: int = 32,
    fan_samples: int = 64,
    cut_depth: float = 1e-3,
) -> ReducednessCertificate:
    """Two-sided reducedness test.

    Necessary condition: every extreme point must be the semicircle
    center of some lune of thickness exactly the body's thickness
    containing the body.  An uncovered extreme point is turned into a
    falsification witness by cutting a cap near it and re-measuring the
    thickness; if the cut fails to preserve the thickness the result is
    inconclusive.  A fully covered sample yields a sampling-certified
    positive (this is not a proof).
    """
    ensure_valid(b)
    delta, _ = thickness(b)
    ex = extreme_points(b)
    samples = ex.sample_points(extreme_per_arc)
    dedup: list[SpherePoint] = []
    for p in samples:
        if all(vec_angle(p.vec, q.vec) > 1e-9 for q in dedup):
            dedup.append(p)
    worst: tuple[float, Optional[SpherePoint]] = (math.inf, None)
    for e in dedup:
        m = coverage_margin(b, e, delta, fan_samples)
        if m < worst[0]:
            worst = (m, e)
    min_margin, e_bad = worst
    n_ext = len(dedup)
    if min_margin >= -1e-9:
        return ReducednessCertificate(
            "certified-reduced", delta, min_margin, None, None, None,
            n_ext, fan_samples,
        )
    # falsification: a cap cut at the uncovered point must not change
    # the thickness
    k_mid = supporting_hemisphere_at(b, e_bad, "right").pole.vec
    m_l = supporting_hemisphere_at(b, e_bad, "left").pole.vec
    if vec_angle(k_mid, m_l) > 1e-9:
        w = normalize(perp_component(m_l, k_mid))
        half = 0.5 * vec_angle(k_mid, m_l)
        k_mid = normalize(
            tuple(
                k_mid[j] * math.cos(half) + w[j] * math.sin(half)
                for j in range(3)
            )
        )
    cpole = normalize(
        tuple(
            math.cos(cut_depth) * k_mid[j] - math.sin(cut_depth) * e_bad.vec[j]
            for j in range(3)
        )
    )
    try:
        z = cut_with_hemisphere(b, SpherePoint(*cpole))
        delta_z, _ = thickness(z)
    except GeometryError:
        return ReducednessCertificate(
            "inconclusive", delta, min_margin, e_bad, None, None,
            n_ext, fan_samples,
        )
    if delta_z >= delta - TOL_CERT:
        return ReducednessCertificate(
            "falsified", delta, min_margin, e_bad, z, delta_z,
            n_ext, fan_samples,
        )
    return ReducednessCertificate(
        "inconclusive", delta, min_margin, e_bad, z, delta_z,
        n_ext, fan_samples,
    )
