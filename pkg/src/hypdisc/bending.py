"""Bending deformations: sliding a consecutive center pair along its geodesic.

Replacing (q_i, q_{i+1}) by their images under a translation along the
geodesic through them leaves the pair product, their distance and the
representation's area unchanged, so the defining relation survives.  The
move parameter is the signed translation length, positive toward the
geodesic's dst endpoint (the direction q_i -> q_{i+1}).
"""

from dataclasses import dataclass
from enum import Enum

from .disc import Geodesic, ProjPoint, distance, geodesic_through, on_geodesic, same_point
from .errors import BadIndex, CoincidentPoints, TargetOffGeodesic
from .isometry import SpecialUnitary, apply, translation
from .representation import Representation


@dataclass(frozen=True)
class BendingMove:
    """One bending: pair (q_index, q_{index+1}), translation length s."""
    index: int
    s: float


class Which(Enum):
    MOVE_LOWER = "lower"   # place q_i on the target
    MOVE_UPPER = "upper"   # place q_{i+1} on the target


def bending_group(q1: ProjPoint, q2: ProjPoint, s: float) -> SpecialUnitary:
    """The translation B(s) along the geodesic through the pair.

    B lies in the centralizer of reflection(q2) @ reflection(q1) and
    satisfies B(s) @ B(t) = B(s + t); positive s moves q1 toward q2.
    """
    if same_point(q1, q2):
        raise CoincidentPoints("bending axis undefined for equal centers")
    return translation(geodesic_through(q1, q2), s)


def _bend_centers(centers, index, s):
    """Raw bending on a center list; indices cyclic."""
    n = len(centers)
    i, j = index % n, (index + 1) % n
    if same_point(centers[i], centers[j]):
        raise CoincidentPoints(f"pair ({i}, {j}) coincides; cannot bend")
    b = bending_group(centers[i], centers[j], s)
    out = list(centers)
    out[i] = apply(b, centers[i])
    out[j] = apply(b, centers[j])
    return out


def apply_bending(rho: Representation, move: BendingMove) -> Representation:
    """The bent representation; the relation is revalidated on construction."""
    if not 0 <= move.index < rho.n:
        raise BadIndex(f"bending index {move.index} outside 0..{rho.n - 1}")
    return Representation(_bend_centers(rho.centers, move.index, move.s),
                          rho.epsilon)


def signed_axis_distance(g: Geodesic, start: ProjPoint, target: ProjPoint) -> float:
    """Translation length moving start to target along g (sign follows g)."""
    if same_point(start, target):
        return 0.0
    d = distance(start, target)
    u, w = g.endpoints
    zs, zt = start.chart, target.chart
    forward = abs(zt - u) * abs(zs - w) > abs(zs - u) * abs(zt - w)
    return d if forward else -d


def bend_to_target(rho: Representation, index: int, target: ProjPoint,
                   which: Which = Which.MOVE_LOWER):
    """Bending that lands the selected center of the pair on the target.

    The target must lie on the geodesic through the pair; the parameter is
    the signed distance along it, so the solve is exact.
    Returns (bent representation, the move).
    """
    n = rho.n
    i, j = index % n, (index + 1) % n
    q1, q2 = rho.centers[i], rho.centers[j]
    if same_point(q1, q2):
        raise CoincidentPoints(f"pair ({i}, {j}) coincides; cannot bend")
    g = geodesic_through(q1, q2)
    if not on_geodesic(target, g):
        raise TargetOffGeodesic("target does not lie on the pair's geodesic")
    selected = q1 if which is Which.MOVE_LOWER else q2
    s = signed_axis_distance(g, selected, target)
    move = BendingMove(i, s)
    return apply_bending(rho, move), move
