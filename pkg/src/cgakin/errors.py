"""Exception hierarchy for the algebra kernel, geometry, and solvers."""


class CgaKinError(Exception):
    """Base class for every error raised by this package."""


class AlgebraError(CgaKinError):
    """Errors from the multivector kernel."""


class NegativeNormSquare(AlgebraError):
    """norm() requested for a multivector with <A ~A>_0 < 0."""


class NonUnitBivector(AlgebraError):
    """rotor() requires a bivector squaring to -1."""


class GeometryError(CgaKinError):
    """Errors from conformal-model constructions."""


class NotNull(GeometryError):
    """project() requires a null vector."""


class ZeroBlade(GeometryError):
    """Angle or normalization requested for a (near-)zero blade."""


class DegenerateMeet(GeometryError):
    """Intersection result vanished; operands are degenerate."""


class ImaginaryPair(GeometryError):
    """Point-pair extraction on an imaginary pair (no real intersection)."""


class ParallelLines(GeometryError):
    """Line-line intersection on parallel lines."""


class SkewLines(GeometryError):
    """Line-line intersection on non-coplanar lines."""


class DegenerateFrame(GeometryError):
    """Frame-to-frame rotor construction hit the 180-degree singularity and
    the eigen-axis fallback also failed (inputs are not a rotation)."""


class ModelError(CgaKinError):
    """Robot model failed validation or deserialization."""


class NoSphericalWrist(ModelError):
    """Operation requires a spherical-wrist model."""


class IKError(CgaKinError):
    """Errors from the inverse-kinematics solvers."""


class UnsupportedPattern(IKError):
    """The first joints do not form a supported position pattern."""


class ParallelAxes(IKError):
    """Prismatic axes are parallel where the construction needs them independent."""


class UnreachableTarget(IKError):
    """Target wrist center is outside the reachable set."""


class InfeasibleParameter(IKError):
    """Redundant-joint value makes the reduced problem unsolvable."""


class NoSolution(IKError):
    """All candidate branches were filtered by the residual contract."""


class NotConverged(CgaKinError):
    """Numerical (DLS) solver did not reach the requested tolerance."""
