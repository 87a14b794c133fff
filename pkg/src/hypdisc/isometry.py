"""SU(1,1) matrices as sign-carrying lifts of disc isometries.

A matrix is stored through its first row (a, b); the full matrix is
``[[a, b], [conj(b), conj(a)]]`` with ``|a|^2 - |b|^2 = 1``.  The pair
``{M, -M}`` projects to one isometry of the disc; products are never
silently projectivized, so relation signs stay observable.
"""

import cmath
import math
from enum import Enum

import numpy as np

from .config import TOL
from .disc import Geodesic, PointClass, ProjPoint, geodesic_through, pairing
from .errors import (BadParameter, NotAReflection, NotHyperbolic, NotInDisc)

_DET_TOL = 1e-9


class IsometryClass(Enum):
    IDENTITY = "identity"
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


class SpecialUnitary:
    """Element of SU(1,1): the matrix [[a, b], [conj(b), conj(a)]]."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        a = complex(a)
        b = complex(b)
        det = abs(a) ** 2 - abs(b) ** 2
        if abs(det - 1.0) > _DET_TOL:
            raise BadParameter(f"not an SU(1,1) matrix: |a|^2 - |b|^2 = {det}")
        self.a = a
        self.b = b

    @classmethod
    def identity(cls):
        return cls(1.0, 0.0)

    def __matmul__(self, other):
        return SpecialUnitary(
            self.a * other.a + self.b * other.b.conjugate(),
            self.a * other.b + self.b * other.a.conjugate(),
        )

    def __neg__(self):
        return SpecialUnitary(-self.a, -self.b)

    def inverse(self):
        return SpecialUnitary(self.a.conjugate(), -self.b)

    def trace(self) -> float:
        """Trace is real for this matrix shape: a + conj(a)."""
        return 2.0 * self.a.real

    def entry_distance(self, other) -> float:
        """Max entrywise distance to another matrix."""
        return max(abs(self.a - other.a), abs(self.b - other.b))

    def is_plus_minus_identity(self, tol=None) -> bool:
        tol = TOL.tol_cls if tol is None else tol
        return abs(self.b) < tol and abs(abs(self.a.real) - 1.0) < tol \
            and abs(self.a.imag) < tol

    def matrix(self):
        """The 2x2 complex matrix as a numpy array."""
        return np.array([[self.a, self.b],
                         [self.b.conjugate(), self.a.conjugate()]])

    def chart_action(self, z: complex) -> complex:
        return (self.a * z + self.b) / (self.b.conjugate() * z + self.a.conjugate())

    def __repr__(self):
        return f"SpecialUnitary({self.a!r}, {self.b!r})"


def apply(m: SpecialUnitary, p: ProjPoint) -> ProjPoint:
    """Matrix-vector action on a projective point, renormalized."""
    return ProjPoint(m.a * p.v1 + m.b * p.v2,
                     m.b.conjugate() * p.v1 + m.a.conjugate() * p.v2)


def elliptic(center: ProjPoint, alpha: complex) -> SpecialUnitary:
    """Rotation about an interior point: x -> (conj(a)-a)<x,p>/<p,p> p + a x.

    Fixes the center and rotates the tangent space there by Arg(alpha^2).
    """
    if not center.is_negative:
        raise NotInDisc("elliptic center must be an interior point")
    alpha = complex(alpha)
    if abs(abs(alpha) - 1.0) > _DET_TOL:
        raise BadParameter("elliptic parameter must be unimodular")
    if abs(alpha - 1.0) < _DET_TOL or abs(alpha + 1.0) < _DET_TOL:
        raise BadParameter("elliptic parameter +-1 gives the identity")
    # center normalized to <p,p> = -1, so M = alpha*I - (conj(alpha)-alpha) p p* J
    d = alpha.conjugate() - alpha
    v1, v2 = center.v1, center.v2
    a = alpha - d * abs(v1) ** 2
    b = d * v1 * v2.conjugate()
    return SpecialUnitary(a, b)


def reflection(center: ProjPoint) -> SpecialUnitary:
    """The lift with parameter i of the point-reflection fixing the center.

    Squares to minus the identity.
    """
    return elliptic(center, 1j)


def classify_isometry(m: SpecialUnitary) -> IsometryClass:
    if m.is_plus_minus_identity():
        return IsometryClass.IDENTITY
    t = abs(m.trace())
    if t < 2.0 - TOL.tol_cls:
        return IsometryClass.ELLIPTIC
    if t > 2.0 + TOL.tol_cls:
        return IsometryClass.HYPERBOLIC
    return IsometryClass.PARABOLIC


def hyperbolic_fixed_points(m: SpecialUnitary):
    """(attractor, repeller) of a hyperbolic element, both boundary points.

    The attractor is the eigenvector whose eigenvalue has modulus > 1;
    near-parabolic input (eigenvalue moduli closer than 1e-9) is rejected.
    """
    if classify_isometry(m) is not IsometryClass.HYPERBOLIC:
        raise NotHyperbolic(f"trace {m.trace()} is not hyperbolic")
    t = m.trace()
    disc = t * t - 4.0
    lam_big = (t + math.copysign(math.sqrt(disc), t)) / 2.0
    lam_small = 1.0 / lam_big
    if abs(abs(lam_big) - abs(lam_small)) < 1e-9:
        raise NotHyperbolic("eigenvalue moduli too close")

    def eigenvector(lam):
        # (M - lam) v = 0; pick the numerically larger of the two rows
        cand1 = (m.b, lam - m.a)
        cand2 = (lam - m.a.conjugate(), m.b.conjugate())
        n1 = abs(cand1[0]) + abs(cand1[1])
        n2 = abs(cand2[0]) + abs(cand2[1])
        v = cand1 if n1 >= n2 else cand2
        return ProjPoint(v[0], v[1])

    big = lam_big if abs(lam_big) > abs(lam_small) else lam_small
    small = lam_small if abs(lam_big) > abs(lam_small) else lam_big
    return eigenvector(big), eigenvector(small)


def extract_reflection_center(m: SpecialUnitary):
    """Solve m = sign * reflection(p); returns (p, sign).

    A reflection has a = i(1 + 2|v1|^2) with positive imaginary part, so the
    sign is read off Im(a) and the center from the residual rank-one block.
    """
    sigma = 1 if m.a.imag > 0 else -1
    ka = (m.a / (sigma * 1j) - 1.0) / 2.0       # |p1|^2
    kb = (m.b / (sigma * 1j)) / 2.0             # -p1 * conj(p2), p2 real > 0
    p2sq = 1.0 + ka.real                        # <p,p> = -1 forces |p2|^2 = 1 + |p1|^2
    if p2sq <= 0:
        raise NotAReflection("no interior center reproduces this matrix")
    p2 = math.sqrt(p2sq)
    p1 = -kb / p2
    try:
        center = ProjPoint(p1, p2)
        if not center.is_negative:
            raise NotAReflection("recovered center is not interior")
        candidate = reflection(center)
    except (ValueError, NotInDisc, BadParameter) as exc:
        raise NotAReflection(str(exc)) from exc
    residual = max(abs(sigma * candidate.a - m.a), abs(sigma * candidate.b - m.b))
    if residual > 1e-8:
        raise NotAReflection(f"residual {residual} exceeds tolerance")
    return center, sigma


def translation(g: Geodesic, s: float) -> SpecialUnitary:
    """Hyperbolic translation by signed length s along an oriented geodesic.

    Positive s moves points toward g.dst.  Built from the eigenvector
    decomposition with eigenvalues exp(+-s/2) attached to the endpoints.
    """
    u, w = g.endpoints
    lam = math.exp(s / 2.0)
    a = (lam * w - u / lam) / (w - u)
    b = u * w * (1.0 / lam - lam) / (w - u)
    return SpecialUnitary(a, b)


def map_boundary_pair(v: ProjPoint, w: ProjPoint,
                      tv: ProjPoint, tw: ProjPoint) -> SpecialUnitary:
    """Some SU(1,1) element sending boundary points v -> tv and w -> tw.

    The two conditions leave a one-parameter family (translations along the
    target geodesic); any member is returned.  Solved as a real linear
    system in (Re a, Im a, Re b, Im b).
    """
    rows = []
    for z, t in ((v.chart, tv.chart), (w.chart, tw.chart)):
        # a z + b - t conj(b) z - t conj(a) = 0
        ca, cca, cb, ccb = z, -t, 1.0 + 0j, -t * z
        rows.append([(ca + cca).real, (1j * ca - 1j * cca).real,
                     (cb + ccb).real, (1j * cb - 1j * ccb).real])
        rows.append([(ca + cca).imag, (1j * ca - 1j * cca).imag,
                     (cb + ccb).imag, (1j * cb - 1j * ccb).imag])
    _, _, vt = np.linalg.svd(np.array(rows))
    basis = [vt[-1], vt[-2]]
    for k in range(21):
        mix = basis[0] + (k - 10) / 10.0 * basis[1] if k != 20 else basis[1]
        a = complex(mix[0], mix[1])
        b = complex(mix[2], mix[3])
        det = abs(a) ** 2 - abs(b) ** 2
        if det > 1e-9:
            m = SpecialUnitary(a / math.sqrt(det), b / math.sqrt(det))
            if abs(m.chart_action(v.chart) - tv.chart) < 1e-7 and \
               abs(m.chart_action(w.chart) - tw.chart) < 1e-7:
                return m
    raise BadParameter("no SU(1,1) map for the requested boundary images")
