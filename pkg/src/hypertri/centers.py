"""Triangle centers, each computed two ways where a closed form exists.

Every center has a constructive definition (meets of medians, bisectors,
altitudes, tangents...) carried out by the `plane` incidence kernel, and most
have closed-form triangular coordinates or radius formulas.  The registry
module compares the two routes; this module provides both.

Conventions: triangles are counterclockwise in the Klein chart (enforced at
construction), side lines are oriented so the opposite vertex has positive
signed distance, and the four circumcenters are ordered (O, O_A, O_B, O_C)
by which side keeps its real length.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import plane, trig
from .errors import (
    ConjugateAtInfinity,
    DegenerateTriangle,
    NoRootFound,
    OnSideLine,
)
from .extscalar import ExtLength, PointKind, Quantum, ext_tanh
from .plane import (
    HLine,
    HPoint,
    classify,
    distance,
    distance_ext,
    foot_of_perpendicular,
    geodesic_point,
    join,
    mdot,
    meet,
    midpoint,
    normalize,
    normalize_line,
    perpendicular_bisector,
    perpendicular_line,
    signed_line_distance,
    tangent_toward,
    vertex_angle,
)
from .trig import TriangleData, tri_coords


@dataclass(frozen=True, slots=True)
class CenterResult:
    """A computed center: its point, triangular coordinates, classification,
    and a map of named scalars (radii, common ratios...) tied to it."""

    name: str
    point: HPoint
    coords: tuple[float, float, float]
    classification: PointKind
    aux: dict = field(default_factory=dict)

    def to_json(self):
        if any(math.isnan(v) for v in self.coords):
            coords = None
        else:
            m = max(abs(v) for v in self.coords)
            coords = [v / m for v in self.coords] if m > 0 else list(self.coords)
        return {
            "name": self.name,
            "point": self.point.to_json("hyperboloid")
            if self.classification is PointKind.REAL
            else {"model": "hyperboloid", "coords": [self.point.x, self.point.y, self.point.w]},
            "coords": coords,
            "classification": self.classification.value,
            "aux": dict(sorted(self.aux.items())),
        }


def _line_sub(p: HLine, q: HLine) -> HLine:
    return HLine(p.x - q.x, p.y - q.y, p.w - q.w)


def _line_add(p: HLine, q: HLine) -> HLine:
    return HLine(p.x + q.x, p.y + q.y, p.w + q.w)


class Frame:
    """Shared constructive scaffolding for one triangle, built lazily.

    Vertices are unit-normalized, side lines unit and oriented toward the
    opposite vertex.  Everything downstream (centers, feet, radii) is cached
    here so a batch of identity checks constructs each object once.
    """

    def __init__(self, t: TriangleData):
        if t.vertices is None:
            t = trig.embed(t)
        self.t = t
        self.A, self.B, self.C = t.vertices
        self.lA = t.side_line("a")
        self.lB = t.side_line("b")
        self.lC = t.side_line("c")
        self._cache: dict = {}

    def _get(self, key, builder):
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    # -- bisector lines: at vertex A the adjacent side lines are lB (= AC)
    # and lC (= AB); the interior is where both signed distances are positive.
    def internal_bisector(self, vertex: str) -> HLine:
        return self._get(f"bis_int_{vertex}", lambda: {
            "A": _line_sub(self.lC, self.lB),
            "B": _line_sub(self.lA, self.lC),
            "C": _line_sub(self.lB, self.lA),
        }[vertex])

    def external_bisector(self, vertex: str) -> HLine:
        return self._get(f"bis_ext_{vertex}", lambda: {
            "A": _line_add(self.lC, self.lB),
            "B": _line_add(self.lA, self.lC),
            "C": _line_add(self.lB, self.lA),
        }[vertex])

    def side_tangent(self, side: str):
        """Unit tangent along the named side from its first vertex
        (a: B->C, b: C->A, c: A->B)."""
        def build():
            start, end = {
                "a": (self.B, self.C), "b": (self.C, self.A), "c": (self.A, self.B)
            }[side]
            return tangent_toward(start, end)
        return self._get(f"tangent_{side}", build)

    def side_start(self, side: str) -> HPoint:
        return {"a": self.B, "b": self.C, "c": self.A}[side]

    def altitude_foot(self, vertex: str) -> HPoint:
        def build():
            v, l = {"A": (self.A, self.lA), "B": (self.B, self.lB), "C": (self.C, self.lC)}[vertex]
            return normalize(foot_of_perpendicular(v, l))
        return self._get(f"alt_foot_{vertex}", build)

    def bisector_foot(self, vertex: str) -> HPoint:
        def build():
            l = {"A": self.lA, "B": self.lB, "C": self.lC}[vertex]
            return normalize(meet(self.internal_bisector(vertex), l))
        return self._get(f"bis_foot_{vertex}", build)


def _result(name: str, point: HPoint, t: TriangleData, aux=None) -> CenterResult:
    kind = classify(point)
    pt = normalize(point) if kind is PointKind.REAL else point
    coords = tri_coords(pt, t) if kind is not PointKind.INFINITE else (
        math.nan, math.nan, math.nan)
    return CenterResult(name=name, point=pt, coords=coords,
                        classification=kind, aux=aux or {})


def _radius_ext(center: HPoint, to: HPoint) -> ExtLength:
    return distance_ext(center, to)[0]


# --------------------------------------------------------------------------
# centroid

def centroid(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Meet of the medians; coordinates (1 : 1 : 1)."""
    f = frame or Frame(t)
    ma = midpoint(f.B, f.C)
    mb = midpoint(f.C, f.A)
    m = meet(join(f.A, ma), join(f.B, mb))
    if classify(m) is not PointKind.REAL:
        raise DegenerateTriangle("median meet is not a real point")
    mn = normalize(m)
    ratio = math.sinh(distance(f.A, mn)) / math.sinh(distance(mn, ma))
    return _result("M", mn, f.t, aux={"median_section_ratio": ratio})


# --------------------------------------------------------------------------
# circumcenters

def circumcenters(t: TriangleData, frame: Frame | None = None):
    """The four perpendicular-bisector meets (O, O_A, O_B, O_C).

    O uses the bisectors of the real segments; O_X keeps side x real and
    takes the complementary bisectors of the other two sides.  For real
    triangles the O_X are centers of hypercycles, so their radii carry
    imaginary quantum pi/2.
    """
    f = frame or Frame(t)
    pab = perpendicular_bisector(f.A, f.B)
    pbc = perpendicular_bisector(f.B, f.C)
    pca = perpendicular_bisector(f.C, f.A)
    qab = plane.complementary_bisector(f.A, f.B)
    qbc = plane.complementary_bisector(f.B, f.C)
    qca = plane.complementary_bisector(f.C, f.A)
    o = meet(pab, pbc)
    oa = meet(pbc, qab)
    ob = meet(pca, qab)
    oc = meet(pab, qbc)
    out = []
    for name, center in (("O", o), ("O_A", oa), ("O_B", ob), ("O_C", oc)):
        radius = _radius_ext(center if classify(center) is not PointKind.REAL
                             else normalize(center), f.A)
        out.append(_result(name, center, f.t, aux={
            "tanh_R": ext_tanh(radius).real,
            "radius_re": radius.re,
            "radius_quantum": radius.im.radians,
        }))
    return tuple(out)


# --------------------------------------------------------------------------
# incenter and excenters

def incenter_excenters(t: TriangleData, frame: Frame | None = None):
    """Bisector meets (I, I_A, I_B, I_C) with extended-valued radii.

    The incenter is always real; excenters may be real, at infinity or ideal
    (their classification is reported and the radius becomes extended)."""
    f = frame or Frame(t)
    i_pt = meet(f.internal_bisector("A"), f.internal_bisector("B"))
    ia = meet(f.internal_bisector("A"), f.external_bisector("B"))
    ib = meet(f.internal_bisector("B"), f.external_bisector("C"))
    ic = meet(f.internal_bisector("C"), f.external_bisector("A"))
    out = []
    for name, center in (("I", i_pt), ("I_A", ia), ("I_B", ib), ("I_C", ic)):
        kind = classify(center)
        aux = {}
        if kind is PointKind.REAL:
            cn = normalize(center)
            d = abs(signed_line_distance(cn, f.lA))
            aux = {"tanh_r": math.tanh(d), "radius_re": d, "radius_quantum": 0.0}
        elif kind is PointKind.IDEAL:
            cn = normalize(center)
            v = abs(mdot(cn, f.lA))
            d = plane.acosh_clamped(max(v, 1.0))
            r = ExtLength(d, Quantum.HALF_PI)
            aux = {"tanh_r": ext_tanh(r).real, "radius_re": d,
                   "radius_quantum": r.im.radians}
        out.append(_result(name, center, f.t, aux=aux))
    return tuple(out)


def point_line_ext_tanh(p: HPoint, l: HLine) -> float:
    """tanh of the extended distance from a real or ideal point to a real line.

    Real points give tanh of the plain distance; ideal points give
    tanh(d + i pi/2) = coth(d), with d the real part of the extended
    distance.  Used to evaluate radius formulas uniformly."""
    kind = classify(p)
    pn = normalize(p)
    v = abs(mdot(pn, normalize_line(l)))
    if kind is PointKind.REAL:
        return math.tanh(math.asinh(v))
    if kind is PointKind.IDEAL:
        d = plane.acosh_clamped(max(v, 1.0))
        return ext_tanh(ExtLength(d, Quantum.HALF_PI)).real
    return 1.0


# --------------------------------------------------------------------------
# radius identities (the inter-radius formulas)

def radius_identities(t: TriangleData, frame: Frame | None = None) -> dict[str, float]:
    """Relative residuals of the six identities tying r, r_A, r_B, r_C and R.

    Evaluated from oracle radii: tanh/coth of the measured distances from the
    bisector meets to the side lines, extended arithmetic for ideal excenters
    (where coth of the complex radius is the real tanh of its real part).
    """
    f = frame or Frame(t)
    td = f.t
    centers = incenter_excenters(td, f)
    tvals = [c.aux["tanh_r"] for c in centers]  # tanh r, tanh r_A, ...
    tr, tra, trb, trc = tvals
    o = circumcenters(td, f)[0]
    tR = o.aux["tanh_R"]
    a, b, c, s = td.a, td.b, td.c, td.s
    sh = math.sinh

    def rel(x, y):
        m = max(abs(x), abs(y))
        return abs(x - y) if m < 1e-6 else abs(x - y) / m

    res = {}
    res["coth_sum_vs_tanh_R"] = rel(-1 / tra - 1 / trb - 1 / trc + 1 / tr, 2 * tR)
    res["coth_products"] = rel(
        1 / (tra * trb) + 1 / (tra * trc) + 1 / (trb * trc),
        1 / (sh(s) * sh(s - a)) + 1 / (sh(s) * sh(s - b)) + 1 / (sh(s) * sh(s - c)),
    )
    res["tanh_products"] = rel(
        tra * trb + tra * trc + trb * trc,
        0.5 * (math.cosh(a + b) + math.cosh(a + c) + math.cosh(b + c)
               - math.cosh(a) - math.cosh(b) - math.cosh(c)),
    )
    res["coth_sum"] = rel(
        1 / tra + 1 / trb + 1 / trc,
        (math.cosh(a) + math.cosh(b) + math.cosh(c)
         - (sh(a) + sh(b) + sh(c)) / math.tanh(s)) / tr,
    )
    res["tanh_sum"] = rel(
        tra + trb + trc,
        (math.cosh(a) + math.cosh(b) + math.cosh(c)
         - math.cosh(b - a) - math.cosh(c - a) - math.cosh(c - b)) / (2 * tr),
    )
    res["sinh_products"] = rel(
        sh(a) * sh(b) + sh(a) * sh(c) + sh(b) * sh(c),
        tr * (tra + trb + trc) + tra * trb + tra * trc + trb * trc,
    )
    return res


# --------------------------------------------------------------------------
# orthocenter

def orthocenter(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Meet of the altitudes.  May be real, at infinity or ideal; the common
    value h = tanh(HX) tanh(HH_X) is attached when the meet is real."""
    f = frame or Frame(t)
    alt_a = perpendicular_line(f.A, f.lA)
    alt_b = perpendicular_line(f.B, f.lB)
    h = meet(alt_a, alt_b)
    aux = {}
    if classify(h) is PointKind.REAL:
        hn = normalize(h)
        ha = distance(hn, f.A)
        hha = distance(hn, f.altitude_foot("A"))
        aux["h"] = math.tanh(ha) * math.tanh(hha)
        h = hn
    return _result("H", h, f.t, aux=aux)


# --------------------------------------------------------------------------
# isogonal conjugation

def isogonal_conjugate(x: HPoint, t: TriangleData, frame: Frame | None = None) -> HPoint:
    """Reflect the cevians through ``x`` in the internal bisectors at two
    vertices and intersect the reflected lines.

    Raises OnSideLine for points of a side line (their conjugate cevians
    degenerate) and ConjugateAtInfinity when the reflected cevians meet in a
    non-real point; in the latter case the coordinate-form conjugate (from
    the sinh^2 / n_X inversion) is attached to the exception when it exists.
    """
    f = frame or Frame(t)
    xn = normalize(x)
    coords = tri_coords(xn, f.t)
    if min(abs(v) for v in coords) < 1e-13:
        raise OnSideLine("isogonal conjugate of a point on a side line")
    la = plane.reflect_line(join(f.A, xn), normalize_line(f.internal_bisector("A")))
    lb = plane.reflect_line(join(f.B, xn), normalize_line(f.internal_bisector("B")))
    conj = meet(la, lb)
    if classify(conj) is not PointKind.REAL:
        coords_pt = None
        try:
            target = (
                math.sinh(f.t.a) ** 2 / coords[0],
                math.sinh(f.t.b) ** 2 / coords[1],
                math.sinh(f.t.c) ** 2 / coords[2],
            )
            coords_pt = trig.point_from_coords(_positive_scale(target), f.t)
        except Exception:
            pass
        raise ConjugateAtInfinity(
            "reflected cevians meet in a non-real point", coords_pt
        )
    return normalize(conj)


def _positive_scale(k):
    m = max(abs(v) for v in k)
    return tuple(v / m for v in k)


def symmedian_point(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Isogonal conjugate of the centroid; coordinates
    (sinh^2 a : sinh^2 b : sinh^2 c)."""
    f = frame or Frame(t)
    m = centroid(f.t, f)
    mp = isogonal_conjugate(m.point, f.t, f)
    return _result("M'", mp, f.t)


def lemoine_point(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Meet of the cevians to the tangent triangle of the circumscribed cycle;
    coordinates (cosh a - 1 : cosh b - 1 : cosh c - 1).

    The tangent triangle vertices (meets of pairs of tangents at the triangle
    vertices) may be ideal; the cevians through them are still real lines.
    """
    f = frame or Frame(t)
    o = circumcenters(f.t, f)[0].point
    tan_a = perpendicular_line(f.A, join(o, f.A))
    tan_b = perpendicular_line(f.B, join(o, f.B))
    tan_c = perpendicular_line(f.C, join(o, f.C))
    ap = meet(tan_b, tan_c)
    bp = meet(tan_a, tan_c)
    cp = meet(tan_a, tan_b)
    l = meet(join(f.A, ap), join(f.B, bp))
    if classify(l) is not PointKind.REAL:
        raise DegenerateTriangle("tangent-triangle cevians meet in a non-real point")
    ln = normalize(l)
    third = abs(mdot(ln, normalize_line(join(f.C, cp))))
    return _result("L", ln, f.t, aux={"third_cevian_residual": third})


# --------------------------------------------------------------------------
# pseudo-centroid (area-bisecting cevians)

def _pseudomedian_foot_arc(half_len: float, rho: float) -> float:
    """Arc from the side's first vertex to the pseudomedian foot, from the
    half-angle ratio equation sinh(u/2)/sinh((L-u)/2) = rho."""
    arg = rho * math.sinh(half_len) / (1.0 + rho * math.cosh(half_len))
    return 2.0 * math.atanh(arg)


def pseudo_centroid(t: TriangleData, frame: Frame | None = None):
    """Meet of the three area-bisecting cevians, with their feet.

    The foot on side c (from C) satisfies
    sinh(AN_C/2) : sinh(N_CB/2) = cosh(b/2) : cosh(a/2), and cyclically; the
    coordinates are the reciprocals of cosh-half products.  Returns
    (CenterResult, (N_A, N_B, N_C)) with N_X the foot on side x.
    """
    f = frame or Frame(t)
    td = f.t
    ch = {s: math.cosh(getattr(td, s) / 2.0) for s in "abc"}
    # foot on a (from A, measured from B): sinh(BN_A/2):sinh(N_AC/2) = cosh(c/2):cosh(b/2)
    arcs = {
        "a": _pseudomedian_foot_arc(td.a / 2.0, ch["c"] / ch["b"]),
        "b": _pseudomedian_foot_arc(td.b / 2.0, ch["a"] / ch["c"]),
        "c": _pseudomedian_foot_arc(td.c / 2.0, ch["b"] / ch["a"]),
    }
    feet = {}
    for side in "abc":
        start = f.side_start(side)
        feet[side] = normalize(geodesic_point(start, f.side_tangent(side), arcs[side]))
    pm_a = join(f.A, feet["a"])
    pm_b = join(f.B, feet["b"])
    s_pt = meet(pm_a, pm_b)
    if classify(s_pt) is not PointKind.REAL:
        raise DegenerateTriangle("pseudomedians meet in a non-real point")
    sn = normalize(s_pt)
    third = abs(mdot(sn, normalize_line(join(f.C, feet["c"]))))
    res = _result("S", sn, td, aux={
        "third_cevian_residual": third,
        "foot_arc_a": arcs["a"], "foot_arc_b": arcs["b"], "foot_arc_c": arcs["c"],
    })
    return res, (feet["a"], feet["b"], feet["c"])


# --------------------------------------------------------------------------
# pseudo-orthocenter (directed-angle balance cevians)

def _pseudoaltitude_g(f: Frame, vertex: str, u: float) -> float:
    """Directed-angle balance for the cevian from ``vertex`` with foot at arc
    ``u`` along the opposite side.

    For the cevian AZ with Z on BC the balance is
    (AZB - ZBA - BAZ) - (CZA - ZAC - ACZ), all angles read as interior angles
    of the two sub-triangles with the triangle counterclockwise; it reduces
    to 2*theta - pi + alpha - beta + gamma - 2*phi with theta the angle AZB
    and phi the angle BAZ.
    """
    td = f.t
    apex, side = {"A": (f.A, "a"), "B": (f.B, "b"), "C": (f.C, "c")}[vertex]
    start = f.side_start(side)
    t0 = f.side_tangent(side)
    z = geodesic_point(start, t0, u)
    # tangent at z pointing back toward the side's start vertex, by parallel
    # transport (stable even when z sits next to the vertex)
    cu, su = math.cosh(u), math.sinh(u)
    back = (-(su * start.x + cu * t0[0]),
            -(su * start.y + cu * t0[1]),
            -(su * start.w + cu * t0[2]))
    t_apex = tangent_toward(z, apex)
    cth = -(t_apex[2] * back[2] - t_apex[0] * back[0] - t_apex[1] * back[1])
    theta = math.acos(min(1.0, max(-1.0, cth)))
    phi = vertex_angle(apex, start, z)
    ang = {"A": (td.alpha, td.beta, td.gamma),
           "B": (td.beta, td.gamma, td.alpha),
           "C": (td.gamma, td.alpha, td.beta)}[vertex]
    return 2.0 * theta - math.pi + ang[0] - ang[1] + ang[2] - 2.0 * phi


def _pseudoaltitude_foot_arc(f: Frame, vertex: str, scan: int = 64) -> float:
    """Locate the root of the balance function by sign scan plus bisection."""
    side = {"A": "a", "B": "b", "C": "c"}[vertex]
    length = getattr(f.t, side)
    eps = 1e-9 * length
    lo_u, hi_u = eps, length - eps
    us = [lo_u + (hi_u - lo_u) * i / scan for i in range(scan + 1)]
    vals = [_pseudoaltitude_g(f, vertex, u) for u in us]
    bracket = None
    for i in range(scan):
        if vals[i] == 0.0:
            return us[i]
        if vals[i] * vals[i + 1] < 0.0:
            bracket = (us[i], us[i + 1], vals[i])
            break
    if bracket is None:
        raise NoRootFound(
            f"no sign change for the pseudoaltitude from {vertex}",
            profile=list(zip(us, vals)),
        )
    lo, hi, flo = bracket
    while hi - lo > 1e-13:
        mid = 0.5 * (lo + hi)
        fm = _pseudoaltitude_g(f, vertex, mid)
        if fm == 0.0:
            return mid
        if (fm < 0.0) == (flo < 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def pseudo_orthocenter(t: TriangleData, frame: Frame | None = None):
    """Meet of the three pseudoaltitudes, with their feet.

    Returns (CenterResult, (Z_A, Z_B, Z_C)).  Raises NoRootFound (carrying
    the scanned profile) if a balance function does not change sign on the
    open side, which can happen for strongly obtuse triangles.
    """
    f = frame or Frame(t)
    feet = {}
    for vertex, side in (("A", "a"), ("B", "b"), ("C", "c")):
        u = _pseudoaltitude_foot_arc(f, vertex)
        feet[vertex] = normalize(
            geodesic_point(f.side_start(side), f.side_tangent(side), u))
    z = meet(join(f.A, feet["A"]), join(f.B, feet["B"]))
    if classify(z) is not PointKind.REAL:
        raise DegenerateTriangle("pseudoaltitudes meet in a non-real point")
    zn = normalize(z)
    third = abs(mdot(zn, normalize_line(join(f.C, feet["C"]))))
    res = _result("Z", zn, f.t, aux={"third_cevian_residual": third})
    return res, (feet["A"], feet["B"], feet["C"])


# --------------------------------------------------------------------------
# the bisector-feet cycle and the Euler line

def _cycle_center_result(name: str, pts, t: TriangleData) -> CenterResult:
    cyc = plane.cycle_through(*pts)
    return _result(name, cyc.center, t, aux={
        "cycle_kind": {"circle": 0.0, "paracycle": 1.0, "hypercycle": 2.0}[cyc.kind.value],
        "radius_re": cyc.radius.re,
        "radius_quantum": cyc.radius.im.radians,
    })


def pseudomedian_feet_center(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Center F of the cycle through the feet of the pseudomedians.

    This is the fourth point of the four-center line: differential testing
    puts it on the line through O, S and Z to machine precision, while the
    center of the bisector-feet cycle is measurably off that line (see
    `bisector_feet_center`).
    """
    f = frame or Frame(t)
    return _cycle_center_result("F", pseudo_centroid(f.t, f)[1], f.t)


def bisector_feet_center(t: TriangleData, frame: Frame | None = None) -> CenterResult:
    """Center of the cycle through the feet of the internal bisectors.

    A natural cycle of the triangle, kept for comparison; it does not lie on
    the four-center line."""
    f = frame or Frame(t)
    return _cycle_center_result(
        "F_bis",
        (f.bisector_foot("A"), f.bisector_foot("B"), f.bisector_foot("C")),
        f.t,
    )


def collinearity_residual(p: HPoint, q: HPoint, r: HPoint) -> float:
    """Scale-free |det| of the three homogeneous triples (max-norm rows)."""
    rows = []
    for v in (p, q, r):
        m = max(abs(v.x), abs(v.y), abs(v.w))
        rows.append([v.x / m, v.y / m, v.w / m])
    return abs(float(np.linalg.det(np.array(rows))))


@dataclass(frozen=True, slots=True)
class EulerLineReport:
    """Collinearity diagnostics for the four-center line (O, F, S, Z) and the
    classical O, M, H test."""

    residuals: dict
    classical_det: float
    isosceles_measure: float
    missing: tuple = ()

    @property
    def max_line_residual(self) -> float:
        return max(self.residuals.values()) if self.residuals else math.nan


def euler_line(t: TriangleData, frame: Frame | None = None) -> EulerLineReport:
    """Check that O (circumcenter), F (pseudomedian-feet cycle center), S
    (pseudo-centroid) and Z (pseudo-orthocenter) are collinear, and report
    the classical det(O, M, H) with the isosceles shape measure."""
    f = frame or Frame(t)
    td = f.t
    o = circumcenters(td, f)[0].point
    fc = pseudomedian_feet_center(td, f).point
    s = pseudo_centroid(td, f)[0].point
    missing = []
    residuals = {"OFS": collinearity_residual(o, fc, s)}
    try:
        z = pseudo_orthocenter(td, f)[0].point
        residuals["OFZ"] = collinearity_residual(o, fc, z)
        residuals["OSZ"] = collinearity_residual(o, s, z)
        residuals["FSZ"] = collinearity_residual(fc, s, z)
    except NoRootFound:
        missing.append("Z")
    m = centroid(td, f).point
    h = orthocenter(td, f).point
    classical = collinearity_residual(o, m, h)
    iso = min(abs(td.a - td.b), abs(td.b - td.c), abs(td.a - td.c))
    return EulerLineReport(
        residuals=residuals,
        classical_det=classical,
        isosceles_measure=iso,
        missing=tuple(missing),
    )


# --------------------------------------------------------------------------
# minimality of coordinate sums

@dataclass(frozen=True, slots=True)
class MinimalityReport:
    """Grid verdicts for the two coordinate-sum minimality statements.

    ``incenter_min_ok`` / ``incenter_closed_residual`` refer to the printed
    claim that Sum n_X(P) is minimized at the incenter with value
    (N/2) cosh(PI).  The verified behaviour of that sum is
    Sum n_X(P) = (n / cosh R) cosh(P O): minimized at the circumcenter;
    ``circumcenter_min_ok`` / ``circumcenter_closed_residual`` report it.
    ``centroid_min_ok`` checks that Sum cosh(YX) is minimized at the
    centroid, with the closed form Sum cosh(YX) = (n / n_A(M)) cosh(YM).
    """

    incenter_min_ok: bool
    incenter_closed_residual: float
    circumcenter_min_ok: bool
    circumcenter_closed_residual: float
    centroid_min_ok: bool
    centroid_closed_residual: float


def _perturbation_grid(p: HPoint, directions: int, radii) -> list[HPoint]:
    pn = normalize(p)
    # two orthonormal tangent vectors at p
    k = pn.klein()
    ref = plane.origin() if (k[0] ** 2 + k[1] ** 2) > 1e-4 else plane.klein_point(0.3, 0.0)
    t1 = tangent_toward(pn, ref)
    # second tangent: metric dual of the cross product of p and t1
    cx = pn.y * t1[2] - pn.w * t1[1]
    cy = pn.w * t1[0] - pn.x * t1[2]
    cw = pn.x * t1[1] - pn.y * t1[0]
    t2 = (-cx, -cy, cw)
    out = []
    for i in range(directions):
        ang = 2.0 * math.pi * i / directions
        d = tuple(math.cos(ang) * t1[j] + math.sin(ang) * t2[j] for j in range(3))
        nrm = math.sqrt(abs(d[2] * d[2] - d[0] * d[0] - d[1] * d[1]))
        d = tuple(v / nrm for v in d)
        for rad in radii:
            out.append(geodesic_point(pn, d, rad))
    return out


def coordinate_sum(x: HPoint, t: TriangleData) -> float:
    return sum(tri_coords(x, t))


def incenter_minimality(t: TriangleData, samples: int = 24,
                        frame: Frame | None = None) -> MinimalityReport:
    """Evaluate the coordinate-sum minimality claims on a radial grid.

    ``samples`` points are spread over ``samples // 3`` geodesic directions
    at radii 1e-3, 1e-2, 1e-1 around each tested center.
    """
    f = frame or Frame(t)
    td = f.t
    directions = max(1, samples // 3)
    radii = (1e-3, 1e-2, 1e-1)

    i_res = incenter_excenters(td, f)[0]
    o_res = circumcenters(td, f)[0]
    m_res = centroid(td, f)

    # printed claim: minimum at I with value (N/2) cosh(PI)
    f_i = coordinate_sum(i_res.point, td)
    inc_ok = True
    inc_closed = 0.0
    for p in _perturbation_grid(i_res.point, directions, radii):
        fp = coordinate_sum(p, td)
        if fp <= f_i:
            inc_ok = False
        want = td.bign / 2.0 * math.cosh(distance(p, i_res.point))
        inc_closed = max(inc_closed, abs(fp - want) / max(abs(fp), abs(want)))

    # verified behaviour: minimum at O with value (n / cosh R) cosh(PO)
    circ_ok = None
    circ_closed = math.inf
    if o_res.classification is PointKind.REAL and abs(o_res.aux["tanh_R"]) < 1.0:
        cosh_r = math.cosh(math.atanh(o_res.aux["tanh_R"]))
        f_o = coordinate_sum(o_res.point, td)
        circ_ok = True
        circ_closed = abs(f_o - td.n / cosh_r) / max(f_o, td.n / cosh_r)
        for p in _perturbation_grid(o_res.point, directions, radii):
            fp = coordinate_sum(p, td)
            if fp <= f_o:
                circ_ok = False
            want = td.n / cosh_r * math.cosh(distance(p, o_res.point))
            circ_closed = max(circ_closed, abs(fp - want) / max(abs(fp), abs(want)))

    # centroid claim: Sum cosh(YX) minimized at M, closed form via the
    # median section ratio n / n_A(M)
    ratio = td.n / tri_coords(m_res.point, td)[0]
    g_m = sum(math.cosh(distance(m_res.point, v)) for v in (f.A, f.B, f.C))
    cen_ok = True
    cen_closed = 0.0
    for p in _perturbation_grid(m_res.point, directions, radii):
        gp = sum(math.cosh(distance(p, v)) for v in (f.A, f.B, f.C))
        if gp <= g_m:
            cen_ok = False
        want = ratio * math.cosh(distance(p, m_res.point))
        cen_closed = max(cen_closed, abs(gp - want) / max(abs(gp), abs(want)))

    return MinimalityReport(
        incenter_min_ok=inc_ok,
        incenter_closed_residual=inc_closed,
        circumcenter_min_ok=bool(circ_ok),
        circumcenter_closed_residual=circ_closed,
        centroid_min_ok=cen_ok,
        centroid_closed_residual=cen_closed,
    )
