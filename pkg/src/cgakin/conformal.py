"""Conformal model of 3-D space on top of the G(4,1) kernel.

Points embed as null vectors X = x + e0 + x^2/2 einf.  Geometric objects
carry two dual encodings: the inner representation k (incidence test
X | k = 0) and the outer representation K = k* (construction by wedging
points).  The meet of objects with inner representations k1, k2, ... is

    k1 v k2 v ... = (k1 ^ k2 ^ ...)*

which is the outer representation of the intersection; intersecting
sphere/plane triples gives a point-pair bivector B = P1 ^ P2, from which the
points are recovered with the projector construction

    P+- = (B +- sqrt(<B B>_0)) (-(einf | B))

followed by null-point normalization.  Representations are stored
un-normalized; distance/angle operations normalize internally.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels as _k
from . import multivector as mv
from .multivector import Multivector, e0, einf, I3, EPSILON
from .errors import (
    DegenerateMeet,
    ImaginaryPair,
    NotNull,
    ParallelLines,
    SkewLines,
    ZeroBlade,
)


def embed(x) -> Multivector:
    """Null-point representation of a Euclidean point (meters)."""
    x = np.asarray(x, dtype=float)
    return Multivector(_k.embed_point(x[0], x[1], x[2]))


def normalize_point(X: Multivector) -> Multivector:
    """Scale a conformal point so its e0 coefficient is 1."""
    w = _k.point_weight(X.a)
    if abs(w) < 1e-300:
        raise NotNull("point has zero e0 weight")
    return Multivector(X.a / w)


def project(X: Multivector, eps: float | None = None) -> np.ndarray:
    """Inverse of embed; requires a null vector."""
    eps = EPSILON if eps is None else eps
    Xn = normalize_point(X)
    sq = float(_k.gp(Xn.a, Xn.a)[0])
    if abs(sq) > max(eps, eps * float(np.abs(Xn.a).max()) ** 2):
        raise NotNull(f"X^2 = {sq}, not a null vector")
    return Xn.vec3()


def distance(X1: Multivector, X2: Multivector) -> float:
    """d = sqrt(-2 X1.X2) for normalized null points (meters)."""
    a = normalize_point(X1)
    b = normalize_point(X2)
    ip = float(_k.lc(a.a, b.a)[0])
    return float(np.sqrt(max(-2.0 * ip, 0.0)))


# ---------------------------------------------------------------------------
# Geometric objects
# ---------------------------------------------------------------------------

KINDS = ("point", "point_pair", "line", "circle", "plane", "sphere")


@dataclass
class GeometricObject:
    """Tagged object representation; rep is 'inner' or 'outer'."""

    kind: str
    rep: str
    mv: Multivector

    def inner(self) -> Multivector:
        """Inner representation (k such that X | k = 0 on the object)."""
        return self.mv if self.rep == "inner" else self.mv.undual()

    def outer(self) -> Multivector:
        return self.mv if self.rep == "outer" else self.mv.dual()


def make_line(p, v) -> GeometricObject:
    """Line through p with unit direction v; inner rep
    v e123 - (p ^ v) e123 einf."""
    pv = Multivector.from_vec3(p)
    vv = Multivector.from_vec3(v)
    moment = (pv ^ vv) * I3
    k = vv * I3 - moment * einf
    return GeometricObject("line", "inner", k)


def make_plane(n, delta: float) -> GeometricObject:
    """Plane with unit normal n at signed distance delta from the origin;
    inner rep n + delta einf."""
    k = Multivector.from_vec3(n) + float(delta) * einf
    return GeometricObject("plane", "inner", k)


def make_sphere(center: Multivector, r: float) -> GeometricObject:
    """Sphere around a (conformal point) center: inner rep Z - r^2/2 einf."""
    k = normalize_point(center) - 0.5 * float(r) ** 2 * einf
    return GeometricObject("sphere", "inner", k)


def line_through_points(P1: Multivector, P2: Multivector) -> GeometricObject:
    return GeometricObject("line", "outer", P1 ^ P2 ^ einf)


def plane_through_points(P1: Multivector, P2: Multivector, P3: Multivector) -> GeometricObject:
    return GeometricObject("plane", "outer", P1 ^ P2 ^ P3 ^ einf)


def translate(obj: GeometricObject, v) -> GeometricObject:
    """Rigid translation of any object via the translator sandwich."""
    v = np.asarray(v, dtype=float)
    t = Multivector(_k.translator(v[0], v[1], v[2]))
    return GeometricObject(obj.kind, obj.rep, Multivector(_k.sandwich(t.a, obj.mv.a)))


def incidence(X: Multivector, obj: GeometricObject) -> float:
    """Max |X | k| coefficient; ~0 iff the point lies on the object."""
    k = obj.inner()
    kn = k.mv if isinstance(k, GeometricObject) else k
    val = Multivector(_k.lc(normalize_point(X).a, kn.a))
    return val.max_abs() / max(kn.max_abs(), 1e-300)


# ---------------------------------------------------------------------------
# Meet and point extraction
# ---------------------------------------------------------------------------


def meet(*objs, eps: float | None = None) -> Multivector:
    """Intersection of objects given by inner representations.

    Accepts GeometricObject (its inner rep is used) or raw Multivector inner
    reps.  Returns the outer representation of the intersection:
    (k1 ^ k2 ^ ...)*.
    """
    eps = EPSILON if eps is None else eps
    ks = [o.inner() if isinstance(o, GeometricObject) else o for o in objs]
    w = ks[0].a
    scale = 1.0
    for k in ks[1:]:
        scale = max(scale, float(np.abs(w).max()) * max(k.max_abs(), 1.0))
        w = _k.op(w, k.a)
    out = Multivector(_k.dual(w))
    if out.max_abs() <= eps * scale:
        raise DegenerateMeet("meet vanished; operands are degenerate or identical")
    return out


@dataclass
class PointPair:
    """Grade-2 intersection result with its classification."""

    bivector: Multivector
    classification: str  # real | tangent | imaginary | flat

    @property
    def discriminant(self) -> float:
        return float(_k.gp(self.bivector.a, self.bivector.a)[0])


def classify_pair(B: Multivector, eps: float | None = None) -> PointPair:
    """Classify a point-pair bivector; thresholds scale with |B|^2."""
    eps = EPSILON if eps is None else eps
    scale = max(B.max_abs() ** 2, 1e-300)
    flat = Multivector(_k.op(einf.a, B.a)).max_abs() <= eps * max(B.max_abs(), 1e-300)
    if flat:
        return PointPair(B, "flat")
    disc = float(_k.gp(B.a, B.a)[0])
    if disc > eps * scale:
        cls = "real"
    elif disc < -eps * scale:
        cls = "imaginary"
    else:
        cls = "tangent"
    return PointPair(B, cls)


def extract_points(pair: PointPair | Multivector, eps: float | None = None):
    """Points of a point pair.

    Real pairs give (P1, P2); tangent pairs give two coincident points; flat
    pairs (B = P ^ einf) give the single finite point.  Imaginary pairs raise
    ImaginaryPair: the intersection is empty, i.e. the target is unreachable
    for the calling solver.
    """
    if isinstance(pair, Multivector):
        pair = classify_pair(pair, eps=eps)
    B = pair.bivector
    if pair.classification == "imaginary":
        raise ImaginaryPair(f"discriminant {pair.discriminant}")
    if pair.classification == "flat":
        # B = P ^ einf: contracting with e0 leaves P up to an einf term;
        # re-embed the Euclidean part.
        cand = Multivector(_k.lc(e0.a, B.a))
        w = _k.point_weight(cand.a)
        if abs(w) < EPSILON * max(B.max_abs(), 1e-300):
            raise DegenerateMeet("flat pair carries no finite point")
        return embed(cand.vec3() / w)
    disc = max(pair.discriminant, 0.0)
    s = float(np.sqrt(disc))
    t = Multivector(-_k.lc(einf.a, B.a))
    if t.max_abs() <= EPSILON * max(B.max_abs(), 1e-300):
        raise DegenerateMeet("point pair has no finite carrier")
    p_plus = Multivector(_k.gp((B + s * mv.ONE).a, t.a))
    p_minus = Multivector(_k.gp((B - s * mv.ONE).a, t.a))
    out = []
    for p in (p_plus, p_minus):
        out.append(embed(normalize_point(p).vec3()))
    return out[0], out[1]


def _line_data(obj: GeometricObject):
    """(point, unit direction) of a line from its inner representation."""
    k = obj.inner() if isinstance(obj, GeometricObject) else obj
    # v e123 has coefficients on e23, e13, e12; see blade table:
    # e1 e123 = e23, e2 e123 = -e13, e3 e123 = e12.
    v = np.array([k.a[6], -k.a[5], k.a[3]])
    nv = np.linalg.norm(v)
    if nv < EPSILON:
        raise ZeroBlade("line has no direction part")
    # moment term: -(p ^ v) e123 einf; recover m = p x v from the
    # bivector-einf slots by undoing the gp with I3 einf.
    # (p^v) e123 = -(p x v) vector; its einf wedge sits on e_i einf slots.
    mx = k.a[17]  # coefficient of e1 ebar side; reconstruct via pairs
    # Simpler: build from coefficient pairs (i|EM) - matching translator layout.
    m = np.array([k.a[17], k.a[18], k.a[20]])
    # k = v e123 - (p^v) e123 einf; ((p^v) e123) = -(p x v) so the einf term
    # is +(p x v) einf with vector coefficient split over (i|EP),(i|EM).
    pxv = m  # e_i ebar slots carry the vector coefficient
    p0 = np.cross(v, -pxv) / (nv * nv)
    return p0, v / nv, pxv


def line_line_intersect(l1: GeometricObject, l2: GeometricObject,
                        eps: float | None = None) -> Multivector:
    """Intersection point of two coplanar, non-parallel lines.

    The raw meet of two intersecting lines degenerates, so the point is
    computed by meeting l1 with the transversal plane that contains l2 and is
    perpendicular to the common plane of the two lines.
    """
    eps = EPSILON if eps is None else eps
    p1, v1, _ = _line_data(l1)
    p2, v2, _ = _line_data(l2)
    n = np.cross(v1, v2)
    nn = np.linalg.norm(n)
    if nn < eps:
        raise ParallelLines("line directions are parallel")
    n = n / nn
    gap = abs(float(np.dot(p2 - p1, n)))
    if gap > max(eps, eps * max(np.linalg.norm(p1), np.linalg.norm(p2), 1.0)):
        raise SkewLines(f"lines are skew (separation {gap})")
    # Transversal plane: contains l2, normal perpendicular to v2 and to the
    # common-plane normal.
    tn = np.cross(n, v2)
    tn = tn / np.linalg.norm(tn)
    pl = make_plane(tn, float(np.dot(tn, p2)))
    B = meet(l1, pl, eps=eps)
    P = extract_points(classify_pair(B, eps=eps))
    if isinstance(P, tuple):  # pragma: no cover - flat meets give one point
        P = P[0]
    return P


# ---------------------------------------------------------------------------
# Angles
# ---------------------------------------------------------------------------


def angle(o1: GeometricObject, o2: GeometricObject) -> float:
    """Angle between same-grade objects: arccos(K1.K2 / |K1||K2|)."""
    K1 = o1.outer() if isinstance(o1, GeometricObject) else o1
    K2 = o2.outer() if isinstance(o2, GeometricObject) else o2
    n1 = _blade_mag(K1)
    n2 = _blade_mag(K2)
    if n1 < EPSILON or n2 < EPSILON:
        raise ZeroBlade("cannot measure the angle of a zero blade")
    ip = float(_k.lc(K1.a, K2.a)[0])
    c = np.clip(ip / (n1 * n2), -1.0, 1.0)
    return float(np.arccos(c))


def angle_line_plane(plane: GeometricObject, line: GeometricObject) -> float:
    """Angle between a line and a plane via the plane's normal line:
    pi/2 - angle(normal line, line)."""
    k = plane.inner() if isinstance(plane, GeometricObject) else plane
    n = k.vec3()
    nn = np.linalg.norm(n)
    if nn < EPSILON:
        raise ZeroBlade("plane has no normal part")
    normal_line = make_line((0.0, 0.0, 0.0), n / nn)
    a = angle(normal_line, line)
    if a > np.pi / 2:
        a = np.pi - a
    return float(np.pi / 2 - a)


def _blade_mag(K: Multivector) -> float:
    sq = float(_k.gp(K.a, _k.rev(K.a))[0])
    return float(np.sqrt(abs(sq)))
