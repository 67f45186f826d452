"""Exception types shared across the package."""


class SternTilesError(Exception):
    """Base class for all domain errors."""


class NotInvertible(SternTilesError):
    """An element (or matrix) has no inverse modulo the active modulus."""


class SingularMatrix(NotInvertible):
    """Matrix inversion failed because the determinant is not a unit."""


class OutOfBounds(SternTilesError):
    """A lattice point or tile index lies outside the patch domain."""


class ShapeMismatch(SternTilesError):
    """Pointwise patch operation applied to incompatible patches."""


class InconsistentRule(SternTilesError):
    """A substitution rule assigns conflicting values to a shared edge."""


class InvalidCenter(SternTilesError):
    """Hexagonal patch requested with a zero central value."""


class InvalidSector(SternTilesError):
    """Sector index outside 0..5."""


class SearchExhausted(SternTilesError):
    """A bounded occurrence search ran out of budget without an answer."""


class UnsupportedFormat(SternTilesError):
    """Unknown output format requested."""
