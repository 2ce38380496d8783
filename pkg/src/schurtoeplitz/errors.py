"""Exception hierarchy shared by every module."""


class SchurToeplitzError(Exception):
    """Base class for all library errors."""


class DimensionError(SchurToeplitzError, ValueError):
    """Operands have incompatible sizes or shapes."""


class ShapeError(SchurToeplitzError, ValueError):
    """A Schur shape is invalid, or operands live in different Schur algebras."""


class NotInSchurAlgebra(SchurToeplitzError, ValueError):
    pass


class NotInvertible(SchurToeplitzError, ArithmeticError):
    pass


class IndexRangeError(SchurToeplitzError, ValueError):
    """A diagonal index lies outside ``{1-n, ..., n-1}``."""


class NotBlockToeplitz(SchurToeplitzError, ValueError):
    pass


class ConditionViolated(SchurToeplitzError, ValueError):
    """The product condition fails, so the product is not block Toeplitz."""


class NotCommutative(SchurToeplitzError, ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotToeplitzClosed(SchurToeplitzError, ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class NotClosed(SchurToeplitzError, ValueError):
    """A supposedly closed basis has a product outside its span."""


class DegeneratePair(SchurToeplitzError, ValueError):
    """A generator pair violates ``Ker A ∩ Ker B = {0}``."""


class NoInvertibleOffDiagonal(SchurToeplitzError, LookupError):
    pass


class FormatError(SchurToeplitzError, ValueError):
    """Malformed JSON payload."""
