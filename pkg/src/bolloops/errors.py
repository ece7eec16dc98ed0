"""Exception types shared across the package."""


class BolloopsError(Exception):
    """Base class for all errors raised by this package."""


class DegreeMismatch(BolloopsError):
    """Permutations of different degrees were combined."""


class CapExceeded(BolloopsError):
    """Group enumeration grew past the configured element cap."""


class UnsupportedDimension(BolloopsError):
    """No hardcoded primitive polynomial for this dimension."""


class InvalidParameter(BolloopsError):
    """A construction parameter is outside the supported range."""


class NotSubgroup(BolloopsError):
    """A claimed subgroup is not contained in the ambient group."""


class NotExact(BolloopsError):
    """The pair of subgroups does not factorize the group exactly."""


class NotFaithful(BolloopsError):
    """A factor contains a nontrivial normal subgroup of the group."""


class NotInGroup(BolloopsError):
    """An element does not belong to the group it was used with."""


class NotNormal(BolloopsError):
    """A claimed normal subloop fails the normality predicate."""


class NotNormalSocle(BolloopsError):
    """The proposed socle is not a normal subgroup."""


class FolderViolation(BolloopsError):
    """A folder axiom fails; args carry the offending pair or coset."""


class SizeGate(BolloopsError):
    """The input exceeds the size gate for this operation."""
