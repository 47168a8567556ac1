"""Exception types shared across the package."""


class ArtifactError(Exception):
    pass


class NonIntegral(ArtifactError, ValueError):
    """A pairing that must be an integer came out as an odd half-integer."""


class NonLaurent(ArtifactError, ArithmeticError):
    """Exact division in the quantum torus left a nonzero remainder."""


class WindowTooSmall(ArtifactError, ValueError):
    """A computation needs vertices outside the finite window it was given."""


class UnknownPair(ArtifactError, KeyError):
    """No denominator formula is available for this pair of nodes."""


class BadRank(ArtifactError, ValueError):
    pass


class OutOfStatedDomain(ArtifactError, ValueError):
    """No dictionary case covers the requested segment."""


class NotStated(ArtifactError, ValueError):
    pass
