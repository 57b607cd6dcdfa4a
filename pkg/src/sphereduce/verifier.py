"""Randomized property suites for the structural facts about reduced
spherical bodies, with brute-force oracles and replayable reports.

Every property is registered under a stable id, runs a fixed number of
seeded trials on a designated body family, and reports machine-readable
failures.  Counterexample properties (ids ending in `-counterexample`)
invert the convention: each trial must exhibit the violation, which
guards the positive suites against passing vacuously.
"""

from __future__ import annotations

import dataclasses
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .body import (
    Body,
    boundary_piece_points,
    boundary_sample,
    contains,
    diameter,
    extreme_diameter,
    min_inner_over_body,
    polygon,
    validate_body,
)
from .gallery import (
    make_disk,
    make_example_body,
    make_quarter_disk,
    make_regular_odd_gon,
    make_reuleaux_triangle,
    regular_gon_thickness,
    regular_polygon_vertices,
)
from .optimize import bisect_root
from .sphere_core import (
    GreatArc,
    Hemisphere,
    Lune,
    SpherePoint,
    Vec,
    cross,
    distance,
    dot,
    geodesic_point,
    lune_thickness,
    normalize,
    orthonormal_frame,
    perp_component,
    rotate,
    vec_angle,
)
from .width_engine import (
    DEGENERATE,
    coverage_margin,
    dual_boundary,
    is_constant_width,
    is_smooth,
    is_strictly_convex,
    minimizing_witnesses,
    order_triple,
    reducedness_certificate,
    supporting_hemisphere_at,
    thickness,
    width_at,
    width_value,
    widths_on_grid,
)

HALF_PI = math.pi / 2.0


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

@dataclass
class PropertyReport:
    property_id: str
    statement: str
    trials: int
    failures: list[dict]
    tolerances: dict
    runtime_s: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self) -> dict:
        """Deterministic serializable record (runtime excluded so that
        identical seeds give byte-identical report streams)."""
        return {
            "property": self.property_id,
            "statement": self.statement,
            "trials": self.trials,
            "pass": self.passed,
            "tolerances": self.tolerances,
            "failures": self.failures,
        }


@dataclass
class RandomBodySpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0


def _rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([seed, trial]))


def _round6(x: float) -> float:
    return float(f"{x:.6g}")


# ---------------------------------------------------------------------------
# random body families
# ---------------------------------------------------------------------------

def random_point(rng) -> SpherePoint:
    v = rng.normal(size=3)
    return SpherePoint.from_vector(tuple(v))


def random_rotation_params(rng) -> tuple[SpherePoint, float]:
    return random_point(rng), float(rng.uniform(0.0, 2.0 * math.pi))


def random_convex_polygon(rng, cap_radius: float = 0.6,
                          max_tries: int = 40) -> Body:
    """Convex hull of random points inside a cap, via the gnomonic
    projection (geodesics map to straight lines inside the cap)."""
    for _ in range(max_tries):
        center, _ = random_rotation_params(rng)
        e1, e2 = orthonormal_frame(center.vec)
        n = int(rng.integers(5, 10))
        rad = rng.uniform(0.15 * cap_radius, cap_radius, size=n)
        az = rng.uniform(0.0, 2.0 * math.pi, size=n)
        plane = [
            (math.tan(r) * math.cos(a), math.tan(r) * math.sin(a))
            for r, a in zip(rad, az)
        ]
        hull = _monotone_chain(plane)
        if len(hull) < 3:
            continue
        verts = [
            SpherePoint.from_vector((
                center.vec[0] + x * e1[0] + y * e2[0],
                center.vec[1] + x * e1[1] + y * e2[1],
                center.vec[2] + x * e1[2] + y * e2[2],
            ))
            for x, y in hull
        ]
        body = polygon(verts)
        if validate_body(body).ok:
            return body
    raise RuntimeError("failed to sample a convex polygon")


def _monotone_chain(points: list[tuple[float, float]]):
    pts = sorted(set(points))
    if len(pts) < 3:
        return pts

    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and (
                (out[-1][0] - out[-2][0]) * (p[1] - out[-2][1])
                - (out[-1][1] - out[-2][1]) * (p[0] - out[-2][0])
            ) <= 0.0:
                out.pop()
            out.append(p)
        return out

    lower = half(pts)
    upper = half(reversed(pts))
    return lower[:-1] + upper[:-1]


def random_odd_gon(rng, t_lo: float = 0.3, t_hi: float = 1.5,
                   include_half_pi: bool = False):
    n = int(rng.choice([3, 5, 7, 9]))
    if include_half_pi and rng.uniform() < 0.25:
        t = HALF_PI
    else:
        t = float(rng.uniform(t_lo, min(t_hi, HALF_PI - 1e-6)))
    center, ori = random_rotation_params(rng)
    gb = make_regular_odd_gon(n, t, center, ori)
    return gb, {"family": "regular_odd_gon", "n": n,
                "thickness": _round6(t)}


def random_even_gon(rng):
    """Regular even-gon: thickness is twice the apothem."""
    n = int(rng.choice([4, 6]))
    t = float(rng.uniform(0.4, 1.2))
    r = bisect_root(
        lambda rr: 2.0 * math.atan(math.tan(rr) * math.cos(math.pi / n)) - t,
        1e-9, HALF_PI - 1e-9,
    )
    center, ori = random_rotation_params(rng)
    body = polygon(regular_polygon_vertices(n, r, center, ori))
    return body, {"family": "regular_even_gon", "n": n, "thickness": _round6(t)}


def random_quarter_disk(rng, lo: float = 0.2, hi: float = 1.4):
    rho = float(rng.uniform(lo, hi))
    center, ori = random_rotation_params(rng)
    gb = make_quarter_disk(center, rho, ori)
    return gb, {"family": "quarter_disk", "rho": _round6(rho)}


def random_disk(rng, lo: float = 0.1, hi: float = 0.7):
    rho = float(rng.uniform(lo, hi))
    gb = make_disk(random_point(rng), rho)
    return gb, {"family": "disk", "rho": _round6(rho)}


def random_example(rng, regime: str = "any"):
    """Rounded-triangle constant-width body; regime selects the width
    range: 'below' (< pi/2), 'above' (> pi/2), 'at' (= pi/2), 'any'."""
    for _ in range(100):
        kappa = float(rng.uniform(0.2, HALF_PI - 0.05))
        if regime == "at":
            sigma = (HALF_PI - kappa) / 2.0
        else:
            sigma = float(rng.uniform(0.0, HALF_PI - kappa))
        width = kappa + 2.0 * sigma
        if regime == "below" and not width < HALF_PI - 0.05:
            continue
        if regime == "above" and not width > HALF_PI + 0.05:
            continue
        center, ori = random_rotation_params(rng)
        gb = make_example_body(kappa, sigma, center, ori)
        return gb, {
            "family": "example_kappa_sigma",
            "kappa": _round6(kappa),
            "sigma": _round6(sigma),
            "width": _round6(width),
        }
    raise RuntimeError(f"could not sample example body in regime {regime}")


def random_long_armed_isosceles(rng):
    """Isosceles triangle with arms over pi/2 and a short base: its
    diameter is attained at the base midpoint, not at a vertex."""
    for _ in range(100):
        arm = float(rng.uniform(HALF_PI + 0.05, HALF_PI + 0.35))
        half_base_az = float(rng.uniform(0.08, 0.25))
        apex = random_point(rng)
        e1, e2 = orthonormal_frame(apex.vec)
        ori = float(rng.uniform(0.0, 2.0 * math.pi))

        def at(az):
            u = (
                math.cos(az) * e1[0] + math.sin(az) * e2[0],
                math.cos(az) * e1[1] + math.sin(az) * e2[1],
                math.cos(az) * e1[2] + math.sin(az) * e2[2],
            )
            return SpherePoint.from_vector((
                math.cos(arm) * apex.vec[0] + math.sin(arm) * u[0],
                math.cos(arm) * apex.vec[1] + math.sin(arm) * u[1],
                math.cos(arm) * apex.vec[2] + math.sin(arm) * u[2],
            ))

        b1, b2 = at(ori - half_base_az), at(ori + half_base_az)
        body = polygon([apex, b2, b1])
        if not validate_body(body).ok:
            body = polygon([apex, b1, b2])
            if not validate_body(body).ok:
                continue
        delta, _ = thickness(body)
        if delta <= HALF_PI:
            return body, {
                "family": "isosceles_long_arms",
                "arm": _round6(arm),
                "half_base_az": _round6(half_base_az),
                "thickness": _round6(delta),
            }
    raise RuntimeError("could not sample long-armed isosceles triangle")


def random_lune(rng, max_thickness: float = HALF_PI,
                min_thickness: float = 0.1) -> Lune:
    g = random_point(rng)
    t = float(rng.uniform(min_thickness, max_thickness))
    e1, _ = orthonormal_frame(g.vec)
    h = SpherePoint.from_vector(rotate(g.vec, e1, math.pi - t))
    return Lune(Hemisphere(g), Hemisphere(h))


def sample_in_lune(rng, lune: Lune) -> SpherePoint:
    """Point of the lune: corner-anchored wedge coordinates."""
    c1, _ = lune.corners
    w0 = lune.center_gh.vec
    delta = lune_thickness(lune)
    sign = 1.0
    probe = rotate(w0, c1.vec, 0.5 * delta)
    if dot(probe, lune.h.pole.vec) < dot(w0, lune.h.pole.vec):
        sign = -1.0
    psi = float(rng.uniform(0.0, delta)) * sign
    phi = float(rng.uniform(0.02, math.pi - 0.02))
    w = rotate(w0, c1.vec, psi)
    return SpherePoint.from_vector((
        math.cos(phi) * c1.vec[0] + math.sin(phi) * w[0],
        math.cos(phi) * c1.vec[1] + math.sin(phi) * w[1],
        math.cos(phi) * c1.vec[2] + math.sin(phi) * w[2],
    ))


def semicircle_point(lune: Lune, t: float) -> SpherePoint:
    """Point of the bounding semicircle on bd(g), t in [0, pi]."""
    c1, _ = lune.corners
    m = lune.center_gh.vec
    return SpherePoint.from_vector((
        math.cos(t) * c1.vec[0] + math.sin(t) * m[0],
        math.cos(t) * c1.vec[1] + math.sin(t) * m[1],
        math.cos(t) * c1.vec[2] + math.sin(t) * m[2],
    ))


# ---------------------------------------------------------------------------
# brute-force thickness oracle
# ---------------------------------------------------------------------------

def brute_force_thickness(b: Body, n: int = 10_000) -> float:
    """Upper-bound thickness oracle: sample n supporting poles uniformly
    over the dual boundary, evaluate each width as pi minus the largest
    sampled pole distance, and take the min.  Pure pairwise arithmetic,
    no closed-form extremization and no refinement; converges to the
    thickness from above as n grows.
    """
    if n < 360:
        raise ValueError("oracle needs at least 360 samples")
    dual = dual_boundary(b)
    params = [dual.total * i / n for i in range(n)]
    params.extend(dual.anchor_params())
    poles = np.array([dual.pole_at_param(u) for u in params])
    min_inner = np.full(len(poles), np.inf)
    block = 1024
    for i in range(0, len(poles), block):
        sub = poles[i : i + block] @ poles.T
        min_inner[i : i + block] = sub.min(axis=1)
    widths = math.pi - np.arccos(np.clip(min_inner, -1.0, 1.0))
    return float(widths.min())


# ---------------------------------------------------------------------------
# property implementations
# ---------------------------------------------------------------------------

def _prop_boundary_structure(rng, tol: dict) -> Optional[dict]:
    """Between consecutive width minimizers the two witness-center
    boundary pieces are great arcs of equal length."""
    gb, desc = random_odd_gon(rng, 0.4, 1.4)
    body = gb.body
    wits, continuum = minimizing_witnesses(body)
    if continuum or len(wits) < 2:
        return {"desc": desc, "error": "minimizer extraction degenerate"}
    for w1, w2 in zip(wits, wits[1:] + wits[:1]):
        for p, q in ((w1.a, w2.a), (w1.b, w2.b)):
            if distance(p, q) < 1e-7:
                continue
            pts = boundary_piece_points(body, p, q, max_step=0.02)
            pole = normalize(cross(p.vec, q.vec))
            off_circle = max(abs(dot(pole, x.vec)) for x in pts)
            if off_circle > tol["arc"]:
                return {
                    "desc": desc,
                    "error": "witness piece is not a great arc",
                    "off_circle": off_circle,
                }
        if abs(distance(w1.a, w2.a) - distance(w1.b, w2.b)) > tol["length"]:
            return {
                "desc": desc,
                "error": "witness arcs differ in length",
                "a_len": distance(w1.a, w2.a),
                "b_len": distance(w1.b, w2.b),
            }
    return None


def _prop_quarter_disk_fan(rng, tol: dict) -> Optional[dict]:
    """Quarter disk: both edge witnesses share the corner as center and
    every supporting hemisphere between them realizes the thickness,
    with partner centers sweeping the circular piece."""
    gb, desc = random_quarter_disk(rng)
    body = gb.body
    corner = body.arcs[0].start  # first radius starts at the disk center
    delta = gb.meta.predicted_thickness
    edges = [a for a in body.arcs if isinstance(a, GreatArc)]
    a_centers = []
    for e in edges:
        wit = width_at(body, Hemisphere(e.pole))
        if abs(wit.width - delta) > tol["width"]:
            return {"desc": desc, "error": "edge width off",
                    "width": wit.width}
        a_centers.append(wit.a)
    if distance(a_centers[0], a_centers[1]) > tol["width"]:
        return {"desc": desc, "error": "edge witnesses disagree on center"}
    if distance(a_centers[0], corner) > tol["width"]:
        return {"desc": desc, "error": "witness center is not the corner"}
    m1, m2 = edges[0].pole.vec, edges[1].pole.vec
    w = normalize(perp_component(m1, m2))
    tau = vec_angle(m1, m2)
    for i in range(17):
        t = tau * i / 16
        k = tuple(m2[j] * math.cos(t) + w[j] * math.sin(t) for j in range(3))
        wit = width_at(body, Hemisphere(SpherePoint(*k)),
                       check_support=False)
        if abs(wit.width - delta) > tol["width"]:
            return {"desc": desc, "error": "fan width off", "t": t,
                    "width": wit.width}
        if abs(distance(corner, wit.b) - delta) > tol["width"]:
            return {"desc": desc, "error": "partner center off the circle"}
    return None


def _prop_edge_support(rng, tol: dict) -> Optional[dict]:
    """A hemisphere supporting along a boundary arc realizes the
    thickness, with its witness center inside that arc."""
    if rng.uniform() < 0.5:
        gb, desc = random_odd_gon(rng, 0.4, 1.4)
    else:
        gb, desc = random_quarter_disk(rng)
    body = gb.body
    delta, _ = thickness(body)
    for arc in body.arcs:
        if not isinstance(arc, GreatArc):
            continue
        wit = width_at(body, Hemisphere(arc.pole))
        if abs(wit.width - delta) > tol["width"]:
            return {"desc": desc, "error": "edge width exceeds thickness",
                    "width": wit.width, "thickness": delta}
        if not arc.contains_point(wit.a, tol["center"]):
            return {"desc": desc, "error": "witness center off the edge"}
    return None


def _prop_extreme_support(rng, tol: dict) -> Optional[dict]:
    """Left and right supporting hemispheres realize the thickness at
    every boundary point of a reduced body."""
    pick = rng.uniform()
    if pick < 0.4:
        gb, desc = random_odd_gon(rng, 0.4, 1.4)
    elif pick < 0.7:
        gb, desc = random_quarter_disk(rng)
    else:
        gb, desc = random_example(rng)
    body = gb.body
    delta, _ = thickness(body)
    for p in boundary_sample(body, 24):
        for side in ("left", "right"):
            k = supporting_hemisphere_at(body, p, side)
            w = width_value(body, k.pole.vec)
            if w < delta - tol["width"] or w > delta + tol["width"]:
                if abs(w - delta) > tol["width"]:
                    return {
                        "desc": desc,
                        "error": f"{side} pole width off at boundary point",
                        "width": w,
                        "thickness": delta,
                    }
    return None


def _prop_hemisphere_of_point(rng, tol: dict) -> Optional[dict]:
    """A reduced body of thickness at most pi/2 lies inside the
    hemisphere centered at any of its points."""
    pick = rng.uniform()
    if pick < 0.45:
        gb, desc = random_odd_gon(rng, 0.3, HALF_PI - 1e-6,
                                  include_half_pi=True)
    elif pick < 0.75:
        gb, desc = random_quarter_disk(rng)
    else:
        gb, desc = random_disk(rng, 0.1, 0.7)
    body = gb.body
    pts = boundary_sample(body, 300)
    ctr = body.interior_point()
    inner_pts = []
    for i in range(200):
        p = pts[int(rng.integers(0, len(pts)))]
        lam = float(rng.uniform(0.0, 1.0))
        inner_pts.append(SpherePoint.from_vector((
            (1 - lam) * p.x + lam * ctr.x,
            (1 - lam) * p.y + lam * ctr.y,
            (1 - lam) * p.z + lam * ctr.z,
        )))
    for p in pts + inner_pts:
        if min_inner_over_body(body, p.vec) < -tol["margin"]:
            return {"desc": desc, "error": "body leaves H(p)",
                    "point": p.vec}
    return None


def _prop_smooth_above_half_pi(rng, tol: dict) -> Optional[dict]:
    """Constant-width bodies wider than pi/2 are smooth."""
    gb, desc = random_example(rng, "above")
    if gb.meta.params["sigma"] < 1e-9:
        return None  # Reuleaux corner case needs sigma > 0 to be smooth
    if not is_smooth(gb.body):
        return {"desc": desc, "error": "body is not smooth"}
    return None


def _prop_constant_width_above(rng, tol: dict) -> Optional[dict]:
    """Certified-reduced bodies of thickness at least pi/2 have
    constant width."""
    if rng.uniform() < 0.3:
        gb, desc = random_odd_gon(rng, HALF_PI, HALF_PI)
        desc["thickness"] = HALF_PI
    else:
        gb, desc = random_example(rng, "above")
    cert = reducedness_certificate(gb.body)
    if cert.status != "certified-reduced":
        return {"desc": desc, "error": f"certificate: {cert.status}",
                "margin": cert.min_margin}
    rep = is_constant_width(gb.body, tol["spread"])
    if not rep.is_constant:
        return {"desc": desc, "error": "width not constant",
                "spread": rep.spread}
    return None


def _prop_strict_constant(rng, tol: dict) -> Optional[dict]:
    """Strictly convex certified-reduced bodies of thickness below pi/2
    have constant width."""
    if rng.uniform() < 0.3:
        gb, desc = random_disk(rng, 0.1, 0.7)
    else:
        gb, desc = random_example(rng, "below")
    if not is_strictly_convex(gb.body):
        return {"desc": desc, "error": "family must be strictly convex"}
    cert = reducedness_certificate(gb.body)
    if cert.status != "certified-reduced":
        return {"desc": desc, "error": f"certificate: {cert.status}"}
    rep = is_constant_width(gb.body, tol["spread"])
    if not rep.is_constant:
        return {"desc": desc, "error": "width not constant",
                "spread": rep.spread}
    return None


def _prop_triangle_not_constant(rng, tol: dict) -> Optional[dict]:
    """Counterexample guard: regular odd-gons of thickness below pi/2
    are reduced yet must fail the constant-width check."""
    gb, desc = random_odd_gon(rng, 0.3, 1.4)
    rep = is_constant_width(gb.body, tol["spread"])
    if rep.is_constant:
        return {"desc": desc,
                "error": "odd-gon below pi/2 reported constant width",
                "spread": rep.spread}
    return None


def _prop_constant_strict(rng, tol: dict) -> Optional[dict]:
    """Constant-width bodies narrower than pi/2 are strictly convex."""
    if rng.uniform() < 0.3:
        gb, desc = random_disk(rng, 0.1, 0.7)
    else:
        gb, desc = random_example(rng, "below")
    rep = is_constant_width(gb.body, tol["spread"])
    if not rep.is_constant:
        return {"desc": desc, "error": "family must be constant width"}
    if not is_strictly_convex(gb.body):
        return {"desc": desc, "error": "constant width below pi/2 but "
                                       "boundary holds a great arc"}
    return None


def _prop_lune_through_boundary(rng, tol: dict) -> Optional[dict]:
    """Constant-width bodies: through every boundary point passes a
    lune of thickness equal to the width with the point as a
    semicircle center."""
    pick = rng.uniform()
    if pick < 0.4:
        gb, desc = random_example(rng, "any")
    elif pick < 0.7:
        gb, desc = random_example(rng, "at")
    else:
        gb, desc = random_disk(rng, 0.1, 0.7)
    body = gb.body
    delta, _ = thickness(body)
    for p in boundary_sample(body, 40):
        m = coverage_margin(body, p, delta)
        if m < -tol["margin"]:
            return {"desc": desc, "error": "no witness lune through point",
                    "point": p.vec, "margin": m}
    return None


def _prop_lune_max_distance(rng, tol: dict) -> Optional[dict]:
    """In a lune of thickness at most pi/2, the distance from any lune
    point to a point moving along a bounding semicircle is maximized at
    an endpoint of its parameter interval."""
    lune = random_lune(rng, HALF_PI)
    t = sorted(rng.uniform(0.0, math.pi, size=2))
    tv = float(rng.uniform(t[0], t[1]))
    u, z = semicircle_point(lune, t[0]), semicircle_point(lune, t[1])
    v = semicircle_point(lune, tv)
    q = sample_in_lune(rng, lune)
    qv = distance(q, v)
    bound = max(distance(q, u), distance(q, z))
    if qv > bound + tol["slack"]:
        return {
            "lune_thickness": lune_thickness(lune),
            "params": [t[0], tv, t[1]],
            "excess": qv - bound,
        }
    return None


def _prop_extreme_diameter(rng, tol: dict) -> Optional[dict]:
    """Diameter over the extreme set equals the full diameter for
    bodies with diameter at most pi/2."""
    body = random_convex_polygon(rng, cap_radius=0.35)
    d_full = diameter(body)
    if d_full > HALF_PI:
        return None  # outside the hypothesis
    d_ext = extreme_diameter(body)
    if abs(d_full - d_ext) > tol["diam"]:
        return {"family": "random_polygon", "d_full": d_full,
                "d_ext": d_ext}
    return None


def _prop_extreme_diameter_counterexample(rng, tol: dict) -> Optional[dict]:
    """Counterexample: long-armed isosceles triangles (thickness at
    most pi/2, arms over pi/2) must violate the extreme-set diameter
    identity on every trial."""
    body, desc = random_long_armed_isosceles(rng)
    d_full = diameter(body)
    d_ext = extreme_diameter(body)
    if d_full <= d_ext + tol["gap"]:
        return {"desc": desc, "error": "expected violation did not occur",
                "d_full": d_full, "d_ext": d_ext}
    return None


def _prop_diameter_bound(rng, tol: dict) -> Optional[dict]:
    """Reduced bodies: diam <= arccos(cos^2 thickness) below pi/2 with
    equality exactly for quarter disks; diam = thickness at or above
    pi/2."""
    pick = rng.uniform()
    if pick < 0.35:
        gb, desc = random_odd_gon(rng, 0.3, 1.4)
    elif pick < 0.6:
        gb, desc = random_quarter_disk(rng)
    elif pick < 0.8:
        gb, desc = random_example(rng, "below")
    else:
        gb, desc = random_example(rng, "above")
    body = gb.body
    delta, _ = thickness(body)
    diam = diameter(body)
    if delta < HALF_PI - 1e-9:
        bound = math.acos(math.cos(delta) ** 2)
        if diam > bound + tol["bound"]:
            return {"desc": desc, "error": "diameter bound violated",
                    "diam": diam, "bound": bound}
        if desc["family"] == "quarter_disk":
            if abs(diam - bound) > tol["bound"]:
                return {"desc": desc, "error": "quarter disk must attain "
                                               "the bound",
                        "diam": diam, "bound": bound}
        elif bound - diam < 1e-7:
            return {"desc": desc, "error": "non-quarter-disk attained "
                                           "the bound"}
    else:
        if abs(diam - delta) > tol["bound"]:
            return {"desc": desc, "error": "diam must equal thickness at "
                                           "or above pi/2",
                    "diam": diam, "thickness": delta}
    return None


def _prop_half_pi_split(rng, tol: dict) -> Optional[dict]:
    """Reduced bodies: thickness and diameter fall on the same side of
    pi/2 (below, equal, above)."""
    pick = rng.uniform()
    if pick < 0.3:
        gb, desc = random_odd_gon(rng, 0.3, 1.4, include_half_pi=True)
    elif pick < 0.55:
        gb, desc = random_quarter_disk(rng)
    elif pick < 0.8:
        gb, desc = random_example(rng, "any")
    else:
        gb, desc = random_example(rng, "at")
    body = gb.body
    delta, _ = thickness(body)
    diam = diameter(body)

    def classify(x):
        if abs(x - HALF_PI) <= 1e-6:
            return "at"
        return "below" if x < HALF_PI else "above"

    if classify(delta) != classify(diam):
        return {"desc": desc, "error": "pi/2 classification differs",
                "thickness": delta, "diam": diam}
    return None


def _minimizer_pool(body: Body, delta: float) -> list:
    """Supporting hemispheres within 1e-9 of the minimum width."""
    params, widths = widths_on_grid(body)
    dual = dual_boundary(body)
    out = []
    for u, w in zip(params, widths):
        if w <= delta + 1e-9:
            out.append(dual.pole_at_param(float(u)))
    return out


def _prop_order_preserved(rng, tol: dict) -> Optional[dict]:
    """For three width minimizers of a reduced body below pi/2 the
    cyclic order of the hemispheres matches that of their partners."""
    if rng.uniform() < 0.6:
        gb, desc = random_odd_gon(rng, 0.4, 1.4)
    else:
        gb, desc = random_quarter_disk(rng)
    body = gb.body
    delta, _ = thickness(body)
    pool = _minimizer_pool(body, delta)
    if len(pool) < 3:
        return {"desc": desc, "error": "fewer than three minimizers"}
    for _ in range(10):
        idx = rng.choice(len(pool), size=3, replace=False)
        ks = [Hemisphere(SpherePoint(*pool[i])) for i in idx]
        if any(
            vec_angle(ks[i].pole.vec, ks[j].pole.vec) < 1e-6
            for i in range(3) for j in range(i + 1, 3)
        ):
            continue
        wits = [width_at(body, k, check_support=False) for k in ks]
        o1 = order_triple(ks[0], ks[1], ks[2])
        o2 = order_triple(wits[0].k_star, wits[1].k_star, wits[2].k_star)
        if DEGENERATE in (o1, o2):
            continue
        if o1 != o2:
            return {"desc": desc, "error": "order not preserved",
                    "order": o1, "partner_order": o2}
    return None


def _prop_left_right_attribution(rng, tol: dict) -> Optional[dict]:
    """Every thickness-realizing lune has a bounding hemisphere that is
    a right supporting hemisphere at its semicircle center, and one
    that is a left supporting hemisphere."""
    pick = rng.uniform()
    if pick < 0.4:
        gb, desc = random_odd_gon(rng, 0.4, 1.4)
    elif pick < 0.7:
        gb, desc = random_quarter_disk(rng)
    else:
        gb, desc = random_disk(rng)
    body = gb.body
    delta, _ = thickness(body)
    pool = _minimizer_pool(body, delta)
    step = max(1, len(pool) // 8)
    for pole in pool[::step]:
        wit = width_at(body, Hemisphere(SpherePoint(*pole)),
                       check_support=False)
        kv, ksv = wit.k.pole.vec, wit.k_star.pole.vec
        right_a = supporting_hemisphere_at(body, wit.a, "right").pole.vec
        left_a = supporting_hemisphere_at(body, wit.a, "left").pole.vec
        right_b = supporting_hemisphere_at(body, wit.b, "right").pole.vec
        left_b = supporting_hemisphere_at(body, wit.b, "left").pole.vec
        has_right = (vec_angle(kv, right_a) <= tol["pole"]
                     or vec_angle(ksv, right_b) <= tol["pole"])
        has_left = (vec_angle(kv, left_a) <= tol["pole"]
                    or vec_angle(ksv, left_b) <= tol["pole"])
        if not (has_right and has_left):
            return {"desc": desc, "error": "left/right attribution failed",
                    "width": wit.width}
    return None


def _prop_smooth_centers(rng, tol: dict) -> Optional[dict]:
    """For bodies of thickness over pi/2 both semicircle centers of any
    thickness-realizing lune are smooth boundary points."""
    gb, desc = random_example(rng, "above")
    body = gb.body
    delta, _ = thickness(body)
    pool = _minimizer_pool(body, delta)
    step = max(1, len(pool) // 8)
    for pole in pool[::step]:
        wit = width_at(body, Hemisphere(SpherePoint(*pole)),
                       check_support=False)
        for p in (wit.a, wit.b):
            lp = supporting_hemisphere_at(body, p, "left").pole.vec
            rp = supporting_hemisphere_at(body, p, "right").pole.vec
            if vec_angle(lp, rp) > tol["pole"]:
                return {"desc": desc, "error": "witness center not smooth",
                        "gap": vec_angle(lp, rp)}
    return None


# ---------------------------------------------------------------------------
# registry
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Property:
    statement: str
    trials: int
    tolerances: dict
    run: Callable[[np.random.Generator, dict], Optional[dict]]


PROPERTIES: dict[str, Property] = {
    "P-T1": Property(
        "between consecutive width minimizers of a reduced polygon below "
        "pi/2, the two witness-center boundary pieces are great arcs of "
        "equal length",
        10, {"arc": 1e-6, "length": 1e-6}, _prop_boundary_structure),
    "P-P1": Property(
        "quarter disk: edge witnesses share the corner as center, the fan "
        "between them realizes the thickness, partners sweep the circular "
        "piece of radius equal to the thickness",
        12, {"width": 1e-6}, _prop_quarter_disk_fan),
    "P-T2": Property(
        "a hemisphere supporting along a boundary arc of a reduced body "
        "realizes the thickness with witness center inside the arc",
        12, {"width": 1e-6, "center": 1e-9}, _prop_edge_support),
    "P-T3": Property(
        "left/right supporting hemispheres of a reduced body realize the "
        "thickness at every boundary point",
        12, {"width": 1e-6}, _prop_extreme_support),
    "P-P2": Property(
        "a reduced body of thickness at most pi/2 lies in the hemisphere "
        "centered at any of its points",
        10, {"margin": 1e-9}, _prop_hemisphere_of_point),
    "P-P3": Property(
        "constant-width bodies wider than pi/2 are smooth",
        10, {}, _prop_smooth_above_half_pi),
    "P-T4": Property(
        "certified-reduced bodies of thickness at least pi/2 have "
        "constant width",
        10, {"spread": 1e-6}, _prop_constant_width_above),
    "P-T5": Property(
        "strictly convex certified-reduced bodies below pi/2 have "
        "constant width",
        10, {"spread": 1e-6}, _prop_strict_constant),
    "P-T5-counterexample": Property(
        "regular odd-gons below pi/2 are reduced but must fail the "
        "constant-width check (guards the strict-convexity hypothesis)",
        10, {"spread": 1e-6}, _prop_triangle_not_constant),
    "P-T6": Property(
        "constant-width bodies narrower than pi/2 are strictly convex",
        12, {"spread": 1e-6}, _prop_constant_strict),
    "P-T7": Property(
        "constant-width bodies: every boundary point is a semicircle "
        "center of a lune of thickness equal to the width containing "
        "the body",
        8, {"margin": 1e-6}, _prop_lune_through_boundary),
    "P-L4": Property(
        "in a lune of thickness at most pi/2, distance from a lune point "
        "to a semicircle point is maximized at the ends of the "
        "semicircle interval",
        20000, {"slack": 1e-12}, _prop_lune_max_distance),
    "P-L5": Property(
        "diameter over the extreme set equals the full diameter when the "
        "diameter is at most pi/2",
        60, {"diam": 1e-9}, _prop_extreme_diameter),
    "P-L5-counterexample": Property(
        "long-armed isosceles triangles (arms over pi/2, thickness at "
        "most pi/2) must violate the extreme-set diameter identity",
        20, {"gap": 1e-6}, _prop_extreme_diameter_counterexample),
    "P-T8": Property(
        "reduced bodies: diam <= arccos(cos^2 thickness) below pi/2 with "
        "equality exactly for quarter disks; diam equals thickness at or "
        "above pi/2",
        36, {"bound": 1e-6}, _prop_diameter_bound),
    "P-P4": Property(
        "reduced bodies: thickness and diameter fall on the same side of "
        "pi/2",
        20, {}, _prop_half_pi_split),
    "P-L2": Property(
        "cyclic order of three width minimizers matches the order of "
        "their partners (thickness below pi/2)",
        10, {"pole": 1e-7}, _prop_order_preserved),
    "P-L1": Property(
        "every thickness-realizing lune has a right supporting hemisphere "
        "and a left supporting hemisphere among its two sides, at the "
        "respective semicircle centers",
        12, {"pole": 1e-6}, _prop_left_right_attribution),
    "P-L3": Property(
        "for thickness over pi/2, both semicircle centers of any "
        "thickness-realizing lune are smooth boundary points",
        10, {"pole": 1e-9}, _prop_smooth_centers),
}


def run_property(
    property_id: str,
    spec: Optional[RandomBodySpec] = None,
    trials: Optional[int] = None,
    seed: int = 0,
) -> PropertyReport:
    """Run one registered property; deterministic for a given seed."""
    if property_id not in PROPERTIES:
        raise KeyError(f"unknown property id: {property_id}")
    prop = PROPERTIES[property_id]
    n = trials if trials is not None else prop.trials
    if spec is not None:
        seed = spec.seed
    failures = []
    t0 = time.perf_counter()
    for trial in range(n):
        rng = _rng(seed, trial)
        try:
            fail = prop.run(rng, prop.tolerances)
        except Exception as exc:  # a crash is a failure, not an abort
            fail = {"error": f"exception: {exc!r}"}
        if fail is not None:
            fail["trial_seed"] = [seed, trial]
            failures.append(fail)
    runtime = time.perf_counter() - t0
    failures.sort(key=lambda f: f["trial_seed"])
    return PropertyReport(
        property_id=property_id,
        statement=prop.statement,
        trials=n,
        failures=failures,
        tolerances=prop.tolerances,
        runtime_s=runtime,
    )


def run_all(seed: int = 42, trials: Optional[int] = None
            ) -> list[PropertyReport]:
    return [
        run_property(pid, trials=trials, seed=seed)
        for pid in PROPERTIES
    ]
