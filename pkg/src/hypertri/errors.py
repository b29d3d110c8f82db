"""Exception hierarchy shared by all geometry modules."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class ZeroVector(GeometryError):
    """A homogeneous triple was identically zero."""


class CoincidentArguments(GeometryError):
    """Two projective arguments were proportional where distinct ones are required."""


class IdenticalPoints(CoincidentArguments):
    """Distance queried between two copies of the same projective point."""


class CoincidentLines(CoincidentArguments):
    """Angle queried between two copies of the same projective line."""


class ImaginaryOverflow(GeometryError):
    """Sum of imaginary parts left the admissible set {0, pi/2, pi}."""


class UndefinedComparison(GeometryError):
    """Order comparison between extended lengths of different imaginary parts."""


class UndefinedProduct(GeometryError):
    """Product not covered by the operational rules of the extended system."""


class UnsupportedConfiguration(GeometryError):
    """Point-kind pair not covered by the requested segment table."""


class OutOfDomain(GeometryError):
    """Coordinates outside the model's domain (e.g. on or outside the unit disk)."""


class CollinearPoints(GeometryError):
    """Three points on a common line where a genuine triangle is required."""


class DegenerateTriangle(GeometryError):
    """Side or angle data violating the triangle conditions."""


class OverflowRisk(GeometryError):
    """Inputs large enough that identity residuals would be numerically meaningless."""


class OnSideLine(GeometryError):
    """The queried point lies on a side line of the reference triangle."""


class ConjugateAtInfinity(GeometryError):
    """Reflected cevians meet in a non-real point.

    The coordinate-form conjugate is attached as ``coords_point`` when it
    could still be reconstructed.
    """

    def __init__(self, message, coords_point=None):
        super().__init__(message)
        self.coords_point = coords_point


class InconsistentCoords(GeometryError):
    """Cevian reconstruction from a coordinate triple failed its closure check."""


class NoSolution(GeometryError):
    """A ratio equation has no root on the (real) line."""


class CevianParallel(GeometryError):
    """A cevian meets the target side line in a non-real point."""


class FootOutsideSegment(GeometryError):
    """A foot point was required to lie on the closed segment but does not."""


class NoRootFound(GeometryError):
    """Sign scan found no root bracket on the open side.

    Carries the scanned profile as ``profile`` (list of (parameter, value))
    so the failure can be inspected rather than hidden.
    """

    def __init__(self, message, profile=None):
        super().__init__(message)
        self.profile = profile or []


class NonRealOrthocenter(GeometryError):
    """The altitudes meet in a non-real point; real-distance identities do not apply."""


class ExhaustedAttempts(GeometryError):
    """Rejection sampling hit its attempt cap without satisfying the constraints."""


class UnknownIdentity(GeometryError):
    """Identity code not present in the registry."""


class IoFailure(GeometryError):
    """Could not write a requested output file."""
