"""Semantic exception hierarchy.

Public functions raise these instead of bare ValueError so callers (and the
CLI) can map failures to exit codes and machine-readable diagnostics.
"""


class HypmetricaError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(HypmetricaError, ValueError):
    """Inputs violate a contract: domain, type, shape or parameter range."""


# -- geometry ----------------------------------------------------------------

class PointOutsideDomain(ValidationError):
    pass


class DegenerateBoundary(ValidationError):
    pass


class InversionAtCenter(ValidationError):
    pass


class EmptyInput(ValidationError):
    pass


class UnsupportedInfinityInDomain(HypmetricaError):
    """The domain declares the point at infinity as interior; the
    negative-radius tangent-ball branch is deliberately not implemented."""


# -- metrics / geodesics -----------------------------------------------------

class Disconnected(HypmetricaError):
    pass


class ResolutionTooCoarse(HypmetricaError):
    pass


class NotTwoExtremal(HypmetricaError):
    pass


class UnsupportedMoebiusDisk(HypmetricaError):
    """The recovered extremal object would be a Moebius disk containing
    infinity; not representable as a Euclidean disk or half-plane."""


class UnknownCurvature(HypmetricaError):
    pass


# -- relations ---------------------------------------------------------------

class MetricUnavailable(HypmetricaError):
    pass


# -- analytic functions ------------------------------------------------------

class OutsideDisk(ValidationError):
    pass


class VanishingCore(HypmetricaError):
    """f(z)/z vanishes (numerically) somewhere on the check grid."""


class VanishingDerivative(HypmetricaError):
    pass


class PolyLikePole(ValidationError):
    """Lower hypergeometric parameter is a nonpositive integer."""


class NonConvergent(HypmetricaError):
    pass


class NegativeCoefficient(ValidationError):
    pass


class BadParameters(ValidationError):
    pass


class NotAttestedUnivalent(ValidationError):
    pass


class HypergeometricFailure(HypmetricaError):
    pass


# -- bounds ------------------------------------------------------------------

class NoRoot(HypmetricaError):
    def __init__(self, message, lo=None, hi=None, f_lo=None, f_hi=None):
        super().__init__(message)
        self.lo, self.hi, self.f_lo, self.f_hi = lo, hi, f_lo, f_hi


class ConstraintViolation(ValidationError):
    def __init__(self, message, failed=()):
        super().__init__(message)
        self.failed = tuple(failed)
