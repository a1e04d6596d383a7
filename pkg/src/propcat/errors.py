"""Exception hierarchy shared by every propcat module."""


class PropcatError(Exception):
    """Base class for all propcat errors."""


class IllTyped(PropcatError):
    """A sampler produced data violating its dom/cod contract."""


class InvalidArrow(PropcatError):
    """Arrow data that does not denote a morphism of its category."""


class TypeMismatch(PropcatError):
    """Composition of arrows whose boundaries do not agree."""


class DimensionMismatch(TypeMismatch):
    """Matrix dimensions do not agree with the wire counts."""


class ContentMismatch(PropcatError):
    """The payload type disagrees with the contents of the lists."""


class ListMismatch(PropcatError):
    """Lists differ element-wise at a seam; an adapter is required."""


class NoSuchWire(PropcatError):
    """No bureaucracy arrow exists between lists of different content."""


class OutOfBounds(PropcatError):
    """Data exceeds a desk-scale bound; harnesses resample on this."""


class ArityExceeded(OutOfBounds):
    """More wires than the instance supports."""


class BoxLimitExceeded(OutOfBounds):
    """Too many boxes for the brute-force equality oracle."""
