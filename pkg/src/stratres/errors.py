"""Exception hierarchy.

Everything raised on bad input derives from :class:`InputError` so the CLI
can map it to exit code 1; :class:`UndecidableError` is reserved for
rule checkers that cannot settle a verdict with the data given (exit 2 is
produced from the verdict itself, not from an exception).
"""


class StratresError(Exception):
    """Base class for all package errors."""


class InputError(StratresError, ValueError):
    """Malformed or contract-violating input."""


class DimensionMismatchError(InputError):
    pass


class WrongSymmetryError(InputError):
    """Symmetric operation applied to a skew form or vice versa."""


class DegenerateFormError(InputError):
    pass


class NotUnimodularError(InputError):
    pass


class ZeroVectorError(InputError):
    """The zero vector has no primitive part."""


class IndexUndefinedError(InputError):
    """Subgroup index requested for non-stable normal data."""


class MismatchedTriplesError(InputError):
    """Direct sum or gluing of triples with incompatible n or coefficients."""


class UnsupportedGluingError(InputError):
    """Gluing along a boundary not flagged as a homology sphere."""


class UnsupportedCaseError(InputError):
    """Decision case outside the implemented theory (e.g. type I form
    where the case split requires type II)."""


class InsufficientInputError(InputError):
    """The triple does not carry the data the selected case needs."""


class NontrivialNormalBundleError(InputError):
    """Surgery step requested on a class with nonzero normal-bundle value."""


class NotElementaryError(StratresError):
    """Surgery reduction on a non-elementary triple; carries the obstruction."""

    def __init__(self, obstruction):
        self.obstruction = obstruction
        super().__init__(f"triple is not elementary: {obstruction}")


class SearchBudgetError(StratresError):
    """Isotropic-vector search exhausted its radius budget."""

    def __init__(self, radius):
        self.radius = radius
        super().__init__(f"no isotropic vector found within radius {radius}")


class WitnessConstructionError(StratresError):
    """A constructive witness failed its own verification; indicates a
    precondition violation upstream."""


class DocumentError(InputError):
    """Problem-document validation failure; carries a pointer to the field."""

    def __init__(self, pointer, message):
        self.pointer = pointer
        super().__init__(f"{pointer}: {message}")
