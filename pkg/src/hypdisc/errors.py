"""Exception types raised by the geometry and reduction layers."""


class HypdiscError(Exception):
    """Base class for all package errors."""


class IsotropicArgument(HypdiscError):
    """A boundary point was passed where an off-boundary point is required."""


class NotInDisc(HypdiscError):
    """Point is not an interior (negative) point of the disc."""


class CoincidentPoints(HypdiscError):
    """Two points that must be distinct coincide within tolerance."""


class SameGeodesic(HypdiscError):
    """Two geodesics share the same point set."""


class DegenerateCycle(HypdiscError):
    """A boundary cycle contains coincident points."""


class BadParameter(HypdiscError):
    """Invalid elliptic parameter (not unimodular, or equal to +-1)."""


class NotHyperbolic(HypdiscError):
    """Fixed-point extraction requested for a non-hyperbolic matrix."""


class NotAReflection(HypdiscError):
    """Matrix is not, up to sign, a reflection in an interior point."""


class RelationViolated(HypdiscError):
    """Reflection product differs from epsilon times the identity."""


class BadLength(HypdiscError):
    """Unsupported relation length (only n = 2 and n >= 5 are representations)."""


class SignMismatch(HypdiscError):
    """A length-2 relation must carry sign -1."""


class BadIndex(HypdiscError):
    """Concatenation or bending index out of range."""


class ConsecutiveCoincidence(HypdiscError):
    """Two consecutive centers coincide, so a pair product is not hyperbolic."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"consecutive centers {index} and {index + 1} coincide")


class TargetOffGeodesic(HypdiscError):
    """Requested bending target does not lie on the pair's geodesic."""


class NotPositiveCycle(HypdiscError):
    """Boundary points do not form a positive cycle."""


class IntersectionMissing(HypdiscError):
    """A geodesic intersection required by the boundary construction is missing."""

    def __init__(self, index, message=None):
        self.index = index
        super().__init__(message or f"construction geodesics for center {index} do not cross")


class ClosingCenterOffAxis(HypdiscError):
    """The recovered closing reflection center is not where it must be."""


class NotMaximal(HypdiscError):
    """Operation requires a maximal representation."""


class AlreadyMaximal(HypdiscError):
    """Nothing to reduce: the representation is maximal, hence basic."""


class ReductionFailed(HypdiscError):
    """The reduction loop could not make progress; carries diagnostic state."""

    def __init__(self, message, state=None):
        self.state = state
        super().__init__(message)


class InternalConsistencyError(HypdiscError):
    """Two verdicts that must agree (area vs. cycle test) disagree."""
