"""Signed reflection relations R^{q_n} ... R^{q_1} = eps and their invariants.

A representation is an ordered tuple of interior centers together with a
sign; the defining product identity is validated on every construction.
Lengths 2 (cancellations) and >= 5 are admitted.  Indices are 0-based and
cyclic throughout.
"""

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .area import polygon_area
from .config import TOL, maximality_tol
from .disc import CycleVerdict, ProjPoint, is_positive_cycle, same_point
from .errors import (BadIndex, BadLength, ConsecutiveCoincidence,
                     DegenerateCycle, InternalConsistencyError,
                     RelationViolated, SignMismatch)
from .isometry import (SpecialUnitary, apply, hyperbolic_fixed_points,
                       reflection)

_FALLBACK_BASEPOINT = 0.07 + 0.13j  # used when a center sits at the origin


def relation_product(centers) -> SpecialUnitary:
    """The product reflection(q_n) ... reflection(q_1), rightmost first."""
    m = SpecialUnitary.identity()
    for q in centers:
        m = reflection(q) @ m
    return m


def relation_residual(centers, epsilon) -> float:
    """Entrywise distance of the reflection product from epsilon * Id."""
    m = relation_product(centers)
    return max(abs(m.a - epsilon), abs(m.b))


def relation_sign(centers):
    """(epsilon, residual) with epsilon the best-matching sign."""
    m = relation_product(centers)
    res_plus = max(abs(m.a - 1.0), abs(m.b))
    res_minus = max(abs(m.a + 1.0), abs(m.b))
    return (1, res_plus) if res_plus <= res_minus else (-1, res_minus)


class Representation:
    """Centers q_0 ... q_{n-1} with reflection(q_{n-1})...reflection(q_0) = epsilon."""

    __slots__ = ("centers", "epsilon")

    def __init__(self, centers, epsilon):
        centers = tuple(centers)
        n = len(centers)
        if n != 2 and n < 5:
            raise BadLength(f"relation length {n} is not a representation "
                            "(only n = 2 and n >= 5)")
        if epsilon not in (1, -1):
            raise SignMismatch(f"sign must be +1 or -1, got {epsilon}")
        for q in centers:
            if not q.is_negative:
                raise RelationViolated("all reflection centers must be interior points")
        if n == 2:
            if epsilon != -1:
                raise SignMismatch("a length-2 relation is a cancellation: epsilon = -1")
            if not same_point(centers[0], centers[1], 1e-6):
                raise RelationViolated("a cancellation needs two equal centers")
        res = relation_residual(centers, epsilon)
        if res > TOL.tol_rel:
            raise RelationViolated(f"relation residual {res:.3e} exceeds "
                                   f"{TOL.tol_rel:.0e}")
        self.centers = centers
        self.epsilon = int(epsilon)

    @property
    def n(self):
        return len(self.centers)

    def __len__(self):
        return len(self.centers)

    def center_charts(self):
        return [q.chart for q in self.centers]

    def __repr__(self):
        return f"Representation(n={self.n}, epsilon={self.epsilon:+d})"


def from_centers(centers, epsilon) -> Representation:
    return Representation(centers, epsilon)


def cancellation(center: ProjPoint) -> Representation:
    """The length-2 relation at a single interior point."""
    return Representation((center, center), -1)


def cycle_of(rho: Representation, c0: ProjPoint):
    """Orbit points c_0, c_i = reflection(q_i) c_{i-1}, i = 1..n-1."""
    pts = [c0]
    for q in rho.centers[:-1]:
        pts.append(apply(reflection(q), pts[-1]))
    return pts


def rep_area(rho: Representation) -> float:
    """Oriented area enclosed by the cycle of a fixed interior basepoint.

    Equals n*pi modulo 2*pi and is bounded by (n-4)*pi in absolute value
    for n >= 5; independent of the basepoint.
    """
    c0 = ProjPoint.from_chart(0.0)
    if any(same_point(c0, q) for q in rho.centers):
        c0 = ProjPoint.from_chart(_FALLBACK_BASEPOINT)
    cyc = cycle_of(rho, c0)
    return polygon_area(cyc, c0)


def reverse(rho: Representation) -> Representation:
    """Centers in reverse order; the sign flips for odd n.

    Inverting the defining relation replaces every reflection by its
    inverse (= its negative), so the reversed product equals
    (-1)^n * epsilon.  The area changes sign.
    """
    eps = rho.epsilon if rho.n % 2 == 0 else -rho.epsilon
    return Representation(tuple(reversed(rho.centers)), eps)


def concatenate(rho1: Representation, rho2: Representation, i: int) -> Representation:
    """Splice rho1 into rho2 after position i (0 <= i <= n2); signs multiply.

    The spliced center list is q_0..q_{i-1}, p_0..p_{m-1}, q_i..q_{n-1}; the
    areas of the factors add.
    """
    if not 0 <= i <= rho2.n:
        raise BadIndex(f"splice index {i} outside 0..{rho2.n}")
    centers = rho2.centers[:i] + rho1.centers + rho2.centers[i:]
    return Representation(centers, rho1.epsilon * rho2.epsilon)


@dataclass(frozen=True)
class ICycle:
    """Endpoint chain derived from one pair product.

    Points are v_i, w_i, then their images under the successive reflections
    reflection(q_{i+1}), ..., reflection(q_{i+n-3}): 2n-4 boundary points.
    Here w_i is the attractor and v_i the repeller of the pair product
    reflection(q_i) @ reflection(q_{i-1}); with that pairing the chain of a
    maximal representation winds once around the circle.
    """
    base_index: int
    points: Tuple[ProjPoint, ...]

    def verdict(self) -> CycleVerdict:
        return is_positive_cycle(self.points)


def i_cycle(rho: Representation, i: int) -> ICycle:
    """The 2n-4 boundary points generated from pair (q_{i-1}, q_i)."""
    n = rho.n
    if n < 5:
        raise BadLength("the endpoint chain needs n >= 5")
    for j in range(n):
        if same_point(rho.centers[j], rho.centers[(j + 1) % n]):
            raise ConsecutiveCoincidence(j)
    i = i % n
    pair = reflection(rho.centers[i]) @ reflection(rho.centers[(i - 1) % n])
    attractor, repeller = hyperbolic_fixed_points(pair)
    v, w = repeller, attractor
    pts = [v, w]
    for k in range(1, n - 2):
        r = reflection(rho.centers[(i + k) % n])
        v = apply(r, v)
        w = apply(r, w)
        pts.extend((v, w))
    return ICycle(i, tuple(pts))


def is_maximal(rho: Representation) -> bool:
    """Whether |area| attains the bound (n-4)*pi, within 1e-6 * n."""
    if rho.n < 5:
        raise BadLength("maximality is defined for n >= 5")
    bound = (rho.n - 4) * math.pi
    return abs(abs(rep_area(rho)) - bound) <= maximality_tol(rho.n)


@dataclass(frozen=True)
class DiscretenessReport:
    discrete_faithful: bool
    area: float
    icycle_index: Optional[int]
    icycle_verdict: Optional[CycleVerdict]
    note: str = ""


def is_discrete_faithful(rho: Representation, icycle_index: int = 0) -> DiscretenessReport:
    """Area-based verdict with the endpoint-chain verdict as evidence.

    The two criteria are equivalent; if they ever disagree the input data
    is inconsistent and an InternalConsistencyError is raised.  When a
    consecutive-center coincidence makes the chain undefined the evidence
    downgrades to the area alone.
    """
    area = rep_area(rho)
    maximal = is_maximal(rho)
    try:
        verdict = i_cycle(rho, icycle_index).verdict()
    except ConsecutiveCoincidence as exc:
        return DiscretenessReport(maximal, area, None, None,
                                  f"chain undefined: {exc}")
    except DegenerateCycle as exc:
        return DiscretenessReport(maximal, area, None, None,
                                  f"degenerate chain: {exc}")
    winds = verdict in (CycleVerdict.POSITIVE, CycleVerdict.NEGATIVE)
    if winds != maximal:
        raise InternalConsistencyError(
            f"area verdict (maximal={maximal}, area={area}) disagrees with "
            f"chain verdict {verdict}")
    return DiscretenessReport(maximal, area, icycle_index % rho.n, verdict)


@dataclass(frozen=True)
class BasicnessReport:
    basic: bool
    area: float
    witness: Optional["ReductionWitness"] = None  # noqa: F821  (reduction module)


def is_basic(rho: Representation) -> BasicnessReport:
    """A representation is basic exactly when it is maximal.

    For a non-maximal input the reduction machinery produces a constructive
    witness: bending moves that create two adjacent equal centers.
    """
    if rho.n < 5:
        raise BadLength("basicness is defined for n >= 5")
    area = rep_area(rho)
    if is_maximal(rho):
        return BasicnessReport(True, area, None)
    from .reduction import find_reduction_witness
    return BasicnessReport(False, area, find_reduction_witness(rho))
