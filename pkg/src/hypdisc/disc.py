"""Points, geodesics and boundary order in the projectivized Hermitian plane.

The model: C^2 with the signature (+,-) Hermitian form
``<v, w> = v1*conj(w1) - v2*conj(w2)``.  Projective points split into
negative (the disc interior, chart ``z = v1/v2`` with ``|z| < 1``),
isotropic (the boundary circle) and positive points.  Geodesics are stored
through their two ideal endpoints and carry an orientation; in the chart
they are diameters or circular arcs orthogonal to the unit circle.
"""

import cmath
import math
from enum import Enum

from .config import TOL
from .errors import (CoincidentPoints, DegenerateCycle, IsotropicArgument,
                     NotInDisc, SameGeodesic)


class PointClass(Enum):
    NEGATIVE = "negative"
    ISOTROPIC = "isotropic"
    POSITIVE = "positive"


class Side(Enum):
    PLUS = "plus"
    MINUS = "minus"
    ON = "on"


class CycleVerdict(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NEITHER = "neither"


class ProjPoint:
    """A projective point, stored through a canonical representative.

    Negative points are normalized to ``<p,p> = -1`` with ``v2`` real
    positive, isotropic points to ``(z, 1)`` with ``|z| = 1`` and positive
    points to ``<p,p> = +1``.  The canonical forms make equality tests and
    the tolerance bands meaningful.
    """

    __slots__ = ("v1", "v2", "cls")

    def __init__(self, v1, v2):
        v1 = complex(v1)
        v2 = complex(v2)
        norm2 = abs(v1) ** 2 + abs(v2) ** 2
        if norm2 == 0.0:
            raise ValueError("(0, 0) does not represent a projective point")
        s = abs(v1) ** 2 - abs(v2) ** 2
        if abs(s) / norm2 < TOL.tol_iso:
            z = v1 / v2
            z /= abs(z)
            self.v1, self.v2 = z, 1.0 + 0j
            self.cls = PointClass.ISOTROPIC
        elif s < 0:
            z = v1 / v2
            r = math.sqrt(1.0 - abs(z) ** 2)
            self.v1, self.v2 = z / r, (1.0 + 0j) / r
            self.cls = PointClass.NEGATIVE
        else:
            r = math.sqrt(s)
            self.v1, self.v2 = v1 / r, v2 / r
            self.cls = PointClass.POSITIVE

    @classmethod
    def from_chart(cls, z):
        """Point with chart coordinate z, interior (|z| < 1) or boundary."""
        z = complex(z)
        if abs(z) > 1.0 + TOL.tol_iso:
            raise NotInDisc(f"chart coordinate {z} lies outside the closed disc")
        return cls(z, 1.0)

    @classmethod
    def boundary(cls, angle_rad):
        """Boundary point at the given argument."""
        return cls(cmath.exp(1j * angle_rad), 1.0)

    @property
    def chart(self):
        """Affine coordinate v1/v2; defined for negative and isotropic points."""
        if self.cls is PointClass.POSITIVE and abs(self.v2) < 1e-15:
            raise NotInDisc("positive point at infinity of the chart")
        return self.v1 / self.v2

    @property
    def is_negative(self):
        return self.cls is PointClass.NEGATIVE

    @property
    def is_isotropic(self):
        return self.cls is PointClass.ISOTROPIC

    def boundary_angle(self):
        if self.cls is not PointClass.ISOTROPIC:
            raise IsotropicArgument("boundary angle of a non-isotropic point")
        return cmath.phase(self.v1) % (2.0 * math.pi)

    def __repr__(self):
        return f"ProjPoint({self.chart!r})" if self.cls is not PointClass.POSITIVE \
            else f"ProjPoint({self.v1!r}, {self.v2!r})"


def pairing(p: ProjPoint, q: ProjPoint) -> complex:
    """Hermitian pairing <p, q> of the stored representatives."""
    return p.v1 * q.v1.conjugate() - p.v2 * q.v2.conjugate()


def classify_point(p: ProjPoint) -> PointClass:
    return p.cls


def same_point(p: ProjPoint, q: ProjPoint, tol=None) -> bool:
    """Projective equality within tolerance (uses canonical representatives)."""
    tol = TOL.tol_sep if tol is None else tol
    if p.cls is not q.cls:
        return False
    if p.cls is PointClass.POSITIVE:
        # compare up to phase
        return abs(abs(pairing(p, q))) > 1.0 - 10 * tol
    return abs(p.chart - q.chart) < tol


def tance(p: ProjPoint, q: ProjPoint) -> float:
    """<p,q><q,p> / (<p,p><q,q>); equals cosh^2(dist/2) on interior pairs."""
    pp = pairing(p, p).real
    qq = pairing(q, q).real
    if abs(pp) < TOL.tol_iso or abs(qq) < TOL.tol_iso:
        raise IsotropicArgument("tance undefined for isotropic points")
    return abs(pairing(p, q)) ** 2 / (pp * qq)


def distance(p: ProjPoint, q: ProjPoint) -> float:
    """Hyperbolic distance 2*arccosh(sqrt(tance)) between interior points."""
    if not (p.is_negative and q.is_negative):
        raise NotInDisc("distance requires two interior points")
    return 2.0 * math.acosh(math.sqrt(max(tance(p, q), 1.0)))


class Geodesic:
    """Oriented geodesic given by two distinct ideal endpoints."""

    __slots__ = ("src", "dst")

    def __init__(self, src: ProjPoint, dst: ProjPoint):
        if not (src.is_isotropic and dst.is_isotropic):
            raise IsotropicArgument("geodesic endpoints must be isotropic")
        if abs(src.chart - dst.chart) < TOL.tol_sep:
            raise CoincidentPoints("geodesic endpoints coincide")
        self.src = src
        self.dst = dst

    @property
    def endpoints(self):
        return self.src.chart, self.dst.chart

    def reversed(self):
        return Geodesic(self.dst, self.src)

    def is_diameter(self):
        u, w = self.endpoints
        return abs(u + w) < TOL.tol_sep

    def arc_center(self):
        """Euclidean center of the orthocircle carrying the geodesic.

        None for diameters.  Satisfies Re(e * conj(c)) = 1 for both
        endpoints e, whence |c|^2 = 1 + r^2.
        """
        u, w = self.endpoints
        det = u.real * w.imag - u.imag * w.real
        if abs(det) < TOL.tol_sep:
            return None
        return complex((w.imag - u.imag) / det, (u.real - w.real) / det)

    def __repr__(self):
        return f"Geodesic({self.src.chart!r} -> {self.dst.chart!r})"


def _align(p: ProjPoint, q: ProjPoint):
    """Representatives of p, q rescaled so that <p, q> is real positive."""
    z = pairing(p, q)
    phase = cmath.exp(1j * cmath.phase(z))
    return (p.v1, p.v2), (q.v1 * phase, q.v2 * phase)


def geodesic_through(p: ProjPoint, q: ProjPoint) -> Geodesic:
    """The oriented geodesic through p and q, traveling past p before q.

    Endpoints are the isotropic points of the real projective line spanned
    by phase-aligned representatives of p and q.
    """
    if p.cls is PointClass.POSITIVE or q.cls is PointClass.POSITIVE:
        raise NotInDisc("geodesics connect interior or boundary points")
    if same_point(p, q):
        raise CoincidentPoints("no unique geodesic through coincident points")
    if p.is_isotropic and q.is_isotropic:
        return Geodesic(p, q)
    (a1, a2), (b1, b2) = _align(p, q)
    P = (abs(a1) ** 2 - abs(a2) ** 2)
    R = (a1 * b1.conjugate() - a2 * b2.conjugate()).real
    Q = (abs(b1) ** 2 - abs(b2) ** 2)
    if abs(P) < TOL.tol_iso:       # p on the boundary: p itself is an endpoint
        lam = -Q / (2.0 * R)
        other = ProjPoint(lam * a1 + b1, lam * a2 + b2)
        return Geodesic(p, other)
    if abs(Q) < TOL.tol_iso:       # q on the boundary
        mu = -P / (2.0 * R)
        other = ProjPoint(a1 + mu * b1, a2 + mu * b2)
        return Geodesic(other, q)
    disc = max(R * R - P * Q, 0.0)
    sq = math.sqrt(disc)
    e1 = ProjPoint(((-R + sq) / P) * a1 + b1, ((-R + sq) / P) * a2 + b2)
    e2 = ProjPoint(((-R - sq) / P) * a1 + b1, ((-R - sq) / P) * a2 + b2)
    u, w = e1.chart, e2.chart
    zp, zq = p.chart, q.chart
    # orient so that the monotone parameter |x - u| / |x - w| grows p -> q
    if abs(zp - u) * abs(zq - w) > abs(zq - u) * abs(zp - w):
        e1, e2 = e2, e1
    return Geodesic(e1, e2)


def _side_value(x: ProjPoint, g: Geodesic) -> float:
    """Scale-invariant signed incidence of x with g, in [-1, 1].

    Writing x = alpha*a + beta*b in the canonically phase-aligned endpoint
    basis (a, b), the geodesic is the locus where beta/alpha is real and the
    returned value is Im(alpha*conj(beta))/|alpha*beta|: positive exactly on
    the left of the travel direction src -> dst.
    """
    a, b = g.src, g.dst
    (a1, a2), (b1, b2) = _align(a, b)
    det = a1 * b2 - b1 * a2
    alpha = (x.v1 * b2 - b1 * x.v2) / det
    beta = (a1 * x.v2 - x.v1 * a2) / det
    scale = abs(alpha * beta)
    if scale < 1e-300:
        return 0.0
    return (alpha * beta.conjugate()).imag / scale


def side_of(x: ProjPoint, g: Geodesic) -> Side:
    """Which half-space of g contains x (PLUS = left of travel src -> dst)."""
    v = _side_value(x, g)
    if abs(v) < TOL.tol_geo:
        return Side.ON
    return Side.PLUS if v > 0 else Side.MINUS


def on_geodesic(x: ProjPoint, g: Geodesic) -> bool:
    return abs(_side_value(x, g)) < TOL.tol_geo


def _in_open_arc(angle, lo, hi, margin):
    """Is angle inside the open counterclockwise arc lo -> hi?"""
    span = (hi - lo) % (2.0 * math.pi)
    off = (angle - lo) % (2.0 * math.pi)
    return margin < off < span - margin


def endpoints_interleave(g1: Geodesic, g2: Geodesic, margin=None) -> bool:
    """Strict interleaving of the endpoint pairs on the boundary circle."""
    margin = TOL.tol_sep if margin is None else margin
    a1, b1 = g1.src.boundary_angle(), g1.dst.boundary_angle()
    a2, b2 = g2.src.boundary_angle(), g2.dst.boundary_angle()
    return _in_open_arc(a2, a1, b1, margin) != _in_open_arc(b2, a1, b1, margin)


def _same_geodesic(g1: Geodesic, g2: Geodesic) -> bool:
    u1, w1 = g1.endpoints
    u2, w2 = g2.endpoints
    return (abs(u1 - u2) < TOL.tol_sep and abs(w1 - w2) < TOL.tol_sep) or \
           (abs(u1 - w2) < TOL.tol_sep and abs(w1 - u2) < TOL.tol_sep)


def intersect_geodesics(g1: Geodesic, g2: Geodesic):
    """Interior crossing point, or None for disjoint/asymptotic geodesics.

    A crossing exists exactly when the endpoint pairs interleave on the
    circle.  The point is found in the chart: the radical line of two
    orthocircles passes through the origin, so the crossing is t*d with d a
    unit direction and t the root of ``t^2 - 2 t Re(conj(d) c) + 1 = 0``
    inside the disc.
    """
    if _same_geodesic(g1, g2):
        raise SameGeodesic("geodesics share their point set")
    if not endpoints_interleave(g1, g2):
        return None
    c1 = g1.arc_center()
    c2 = g2.arc_center()
    if c1 is None and c2 is None:
        return ProjPoint.from_chart(0.0)
    if c1 is None:
        d = g1.endpoints[0]
        beta = (d.conjugate() * c2).real
    elif c2 is None:
        d = g2.endpoints[0]
        beta = (d.conjugate() * c1).real
    else:
        dd = c2 - c1
        d = 1j * dd / abs(dd)
        beta = (d.conjugate() * c1).real
    disc = beta * beta - 1.0
    if disc < 0.0:
        if disc < -1e-9:
            return None
        disc = 0.0
    sq = math.sqrt(disc)
    t = beta - sq if beta > 0 else beta + sq
    return ProjPoint.from_chart(t * d)


def is_positive_cycle(points) -> CycleVerdict:
    """Cyclic orientation of a list of boundary points.

    POSITIVE when visiting the points in list order winds exactly once
    counterclockwise (one cyclic descent of the arguments), NEGATIVE for
    one full clockwise turn, NEITHER otherwise.
    """
    pts = list(points)
    if len(pts) < 3:
        raise DegenerateCycle("a cycle needs at least three points")
    args = [p.boundary_angle() for p in pts]
    m = len(args)
    for i in range(m):
        for j in range(i + 1, m):
            gap = abs(args[i] - args[j]) % (2.0 * math.pi)
            if min(gap, 2.0 * math.pi - gap) < TOL.tol_sep:
                raise DegenerateCycle(f"cycle points {i} and {j} coincide")
    descents = sum(1 for k in range(m) if args[(k + 1) % m] < args[k])
    ascents = m - descents
    if descents == 1:
        return CycleVerdict.POSITIVE
    if ascents == 1:
        return CycleVerdict.NEGATIVE
    return CycleVerdict.NEITHER
