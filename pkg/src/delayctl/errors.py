"""Exception types shared across the toolkit."""


class DelayctlError(Exception):
    """Base class for all toolkit errors."""


class NotHurwitz(DelayctlError):
    """A matrix or polynomial required to be Hurwitz has a root with
    nonnegative real part (within the stability margin)."""


class SingularSystem(DelayctlError):
    """A dense linear solve was numerically singular."""


class NoConvergence(DelayctlError):
    """Iterative root refinement hit its iteration cap.

    The best iterate found so far is attached as ``best``.
    """

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class ImproperTf(DelayctlError):
    """Transfer function has numerator degree above denominator degree."""


class TailBoundFailure(DelayctlError):
    """No truncation horizon below the cap certifies the requested tail bound."""


class StabilityLost(DelayctlError):
    """A delay pair left the region where the loop transfer functions are
    exponentially stable (non-Hurwitz Pade-substituted denominator)."""


class DegenerateInput(DelayctlError):
    """An input vector that must be nonzero was zero (e.g. b with b'b = 0)."""


class ConfigInvalid(DelayctlError):
    """Scenario configuration failed validation."""


class EmptyWindow(DelayctlError):
    """Requested metric window contains no samples."""


class ConditionViolatedAtZero(DelayctlError):
    """The gain condition already fails at zero delay; no margin exists."""


class ConditionViolatedOnIdentity(DelayctlError):
    """The gain condition fails at the requested point on the identity line."""


class NoRootInRange(DelayctlError):
    """Bracketing search found no sign change up to the allowed maximum."""


class StartNotConverged(DelayctlError):
    """Continuation could not converge its start guess onto the level set."""
