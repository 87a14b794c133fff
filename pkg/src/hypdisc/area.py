"""Oriented hyperbolic area of geodesic triangles and polygons.

Primary formula: the Gauss-Bonnet angle defect ``pi - (sum of interior
angles)`` for the curvature -1 metric, signed so that counterclockwise
boundary order in the chart is positive.  Ideal vertices contribute angle
zero.  An independent formula through the argument of the Hermitian triple
product is provided as a cross-validation oracle.
"""

import cmath
import math

from .config import TOL
from .disc import (PointClass, ProjPoint, _side_value, geodesic_through,
                   pairing, same_point)
from .errors import NotInDisc


def _interior_angle(v: ProjPoint, x: ProjPoint, y: ProjPoint) -> float:
    """Angle at the interior vertex v between the geodesic rays to x and y."""
    zv = v.chart
    def direction(p):
        t = (p.chart - zv) / (1.0 - zv.conjugate() * p.chart)
        return t
    dx, dy = direction(x), direction(y)
    return abs(cmath.phase(dx * dy.conjugate()))


def triangle_area(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> float:
    """Oriented area of the geodesic triangle, in (-pi, pi].

    Magnitude is the angle defect; the sign is read from the side of the
    oriented geodesic p1 -> p2 on which p3 lies (left = positive).
    Degenerate triangles (coincident or collinear vertices) have area 0.
    """
    pts = (p1, p2, p3)
    for p in pts:
        if p.cls is PointClass.POSITIVE:
            raise NotInDisc("triangle vertices must be interior or boundary points")
    if same_point(p1, p2) or same_point(p2, p3) or same_point(p1, p3):
        return 0.0
    g = geodesic_through(p1, p2)
    orientation = _side_value(p3, g)
    if abs(orientation) < TOL.tol_geo:
        return 0.0
    angles = 0.0
    for k in range(3):
        v = pts[k]
        if v.is_isotropic:
            continue
        angles += _interior_angle(v, pts[(k + 1) % 3], pts[(k + 2) % 3])
    return math.copysign(math.pi - angles, orientation)


def triangle_area_triple_product(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> float:
    """Oriented area through the Hermitian triple product.

    Equals ``2 * Arg(-<p1,p2><p2,p3><p3,p1>)`` for the canonical
    representatives; the factor is calibrated by the ideal triangle, whose
    counterclockwise area is +pi.  Used as an independent oracle.
    """
    if same_point(p1, p2) or same_point(p2, p3) or same_point(p1, p3):
        return 0.0
    triple = pairing(p1, p2) * pairing(p2, p3) * pairing(p3, p1)
    return 2.0 * cmath.phase(-triple)


def polygon_area(vertices, basepoint: ProjPoint) -> float:
    """Oriented area of the closed geodesic polygon as a triangle fan.

    Sums the oriented triangles (basepoint, v_i, v_{i+1}) with indices mod n;
    the value does not depend on the basepoint.
    """
    verts = list(vertices)
    if len(verts) < 3:
        raise ValueError("a polygon needs at least three vertices")
    if not basepoint.is_negative:
        raise NotInDisc("fan basepoint must be an interior point")
    total = 0.0
    n = len(verts)
    for i in range(n):
        total += triangle_area(basepoint, verts[i], verts[(i + 1) % n])
    return total
