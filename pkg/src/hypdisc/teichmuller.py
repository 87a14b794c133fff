"""Maximal representations from boundary data and back.

A positively wound maximal representation of length n is coded by 2n-6
boundary points on the open upper semicircle: prepending -1 and 1 gives its
endpoint chain.  The inverse direction normalizes the chain of a maximal
representation so that its first two points sit at -1 and 1 and the base
center at the origin.  The regular right-angled polygon supplies a concrete
maximal instance for every n >= 5.
"""

import math
from dataclasses import dataclass
from typing import Tuple

from .config import TOL
from .disc import (CycleVerdict, Geodesic, ProjPoint, geodesic_through,
                   intersect_geodesics, is_positive_cycle, same_point)
from .errors import (ClosingCenterOffAxis, IntersectionMissing, NotAReflection,
                     NotMaximal, NotPositiveCycle)
from .isometry import (SpecialUnitary, apply, extract_reflection_center,
                       map_boundary_pair, reflection, translation)
from .representation import (Representation, i_cycle, is_maximal,
                             relation_product)

_MINUS_ONE = ProjPoint.from_chart(-1.0)
_PLUS_ONE = ProjPoint.from_chart(1.0)


@dataclass(frozen=True)
class BoundaryCoordinates:
    """2n-6 boundary points on the open upper semicircle, positively cyclic."""

    n: int
    points: Tuple[ProjPoint, ...]

    def __post_init__(self):
        if self.n < 5:
            raise NotPositiveCycle("coordinates need n >= 5")
        if len(self.points) != 2 * self.n - 6:
            raise NotPositiveCycle(
                f"expected {2 * self.n - 6} boundary points, got {len(self.points)}")
        for p in self.points:
            if not p.is_isotropic:
                raise NotPositiveCycle("coordinates must be boundary points")
            ang = p.boundary_angle()
            if not TOL.tol_sep < ang < math.pi - TOL.tol_sep:
                raise NotPositiveCycle(
                    f"point at argument {math.degrees(ang):.3f} deg is not in the "
                    "open upper semicircle")
        full = (_MINUS_ONE, _PLUS_ONE) + self.points
        if is_positive_cycle(full) is not CycleVerdict.POSITIVE:
            raise NotPositiveCycle("(-1, 1, z_1, ..., z_{2n-6}) must wind "
                                   "counterclockwise once")

    @classmethod
    def from_angles(cls, n: int, degrees):
        pts = tuple(ProjPoint.boundary(math.radians(a)) for a in degrees)
        return cls(n, pts)

    def angles_deg(self):
        return [math.degrees(p.boundary_angle()) for p in self.points]


def _crossing(g1: Geodesic, g2: Geodesic, k: int) -> ProjPoint:
    pt = intersect_geodesics(g1, g2)
    if pt is None:
        raise IntersectionMissing(k)
    return pt


def from_boundary(coords: BoundaryCoordinates) -> Representation:
    """Build the maximal representation whose chain is (-1, 1, z_1, ...).

    Centers: q_0 at the origin, then crossings of consecutive construction
    geodesics; the last center is recovered by demanding that the residual
    of the first n-1 reflections be (up to sign) one more reflection.  That
    closing center lies on the real axis strictly left of the origin.
    """
    n = coords.n
    z = coords.points
    centers = [ProjPoint.from_chart(0.0)]
    centers.append(_crossing(geodesic_through(_MINUS_ONE, z[0]),
                             geodesic_through(_PLUS_ONE, z[1]), 1))
    for k in range(2, n - 2):
        centers.append(_crossing(
            geodesic_through(z[2 * k - 4], z[2 * k - 2]),
            geodesic_through(z[2 * k - 3], z[2 * k - 1]), k))
    centers.append(_crossing(geodesic_through(z[2 * n - 8], _MINUS_ONE),
                             geodesic_through(z[2 * n - 7], _PLUS_ONE), n - 2))
    partial = relation_product(centers)
    try:
        closing, eps = extract_reflection_center(partial.inverse())
    except NotAReflection as exc:
        raise ClosingCenterOffAxis(
            f"residual of the partial product is not a reflection: {exc}") from exc
    zc = closing.chart
    if abs(zc.imag) > 1e-7:
        raise ClosingCenterOffAxis(f"closing center {zc} is off the real axis")
    if zc.real >= 0:
        raise ClosingCenterOffAxis(f"closing center {zc} is not left of the origin")
    centers.append(closing)
    return Representation(centers, eps)


def to_boundary(rho: Representation, i: int = 0):
    """Boundary coordinates of a positively wound maximal representation.

    Returns (coordinates, conjugator): the conjugator sends the endpoint
    chain's first two points to -1 and 1 and the base center q_i to 0, and
    the conjugated representation is from_boundary(coordinates).
    """
    if not is_maximal(rho):
        raise NotMaximal("boundary coordinates exist only for maximal "
                         "representations")
    chain = i_cycle(rho, i)
    verdict = chain.verdict()
    if verdict is not CycleVerdict.POSITIVE:
        raise NotPositiveCycle(
            f"chain winds {verdict.value}; take reverse() for the mirror chart")
    m0 = map_boundary_pair(chain.points[0], chain.points[1], _MINUS_ONE, _PLUS_ONE)
    x0 = apply(m0, rho.centers[i % rho.n])
    z0 = x0.chart
    if abs(z0.imag) > 1e-7:
        raise ClosingCenterOffAxis("base center does not land on the real axis")
    # slide x0 to the origin along the real axis; s > 0 moves toward +1
    s = 2.0 * math.atanh(abs(z0.real)) if abs(z0.real) > 0 else 0.0
    s = -s if z0.real > 0 else s
    conj = translation(Geodesic(_MINUS_ONE, _PLUS_ONE), s) @ m0
    pts = tuple(apply(conj, p) for p in chain.points[2:])
    return BoundaryCoordinates(rho.n, pts), conj


def conjugate_representation(rho: Representation, m: SpecialUnitary) -> Representation:
    """Centers mapped by m; the relation and its sign are unchanged."""
    return Representation(tuple(apply(m, q) for q in rho.centers), rho.epsilon)


def _interior_angle_at_vertex(n: int, radius: float) -> float:
    """Interior angle of the regular n-gon with chart circumradius r."""
    import cmath
    from .area import _interior_angle
    v0 = ProjPoint.from_chart(radius)
    prev = ProjPoint.from_chart(radius * cmath.exp(-2j * math.pi / n))
    nxt = ProjPoint.from_chart(radius * cmath.exp(2j * math.pi / n))
    return _interior_angle(v0, prev, nxt)


def regular_polygon(n: int) -> Representation:
    """Reflections in the vertices of the regular right-angled n-gon.

    The circumradius is solved by bisection on the monotone interior-angle
    function; the relation sign is whatever the product yields (it is
    reported through the representation, not asserted a priori).
    """
    if n < 5:
        raise NotPositiveCycle("right-angled regular polygons need n >= 5")
    import cmath
    lo, hi = 1e-6, 1.0 - 1e-12
    target = math.pi / 2.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if _interior_angle_at_vertex(n, mid) > target:
            lo = mid
        else:
            hi = mid
    r = 0.5 * (lo + hi)
    centers = [ProjPoint.from_chart(r * cmath.exp(2j * math.pi * k / n))
               for k in range(n)]
    from .representation import relation_sign
    eps, _ = relation_sign(centers)
    return Representation(centers, eps)
