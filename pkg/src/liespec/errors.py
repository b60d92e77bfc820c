"""Exception taxonomy.

Domain errors (bad mathematical input) are kept separate from I/O errors so
the command line interface can map them to distinct exit codes.
"""


class LiespecError(Exception):
    """Base class for all package errors."""


class DomainError(LiespecError):
    """Input outside the mathematical domain of an operation."""


class InadmissibleMetricError(DomainError):
    """Metric parameters violate an admissibility constraint."""


class MalformedEmbeddingError(DomainError):
    """Restriction data does not describe a subalgebra embedding."""


class UnsupportedDimensionError(DomainError):
    """Operation only implemented up to a stated dimension or rank."""
