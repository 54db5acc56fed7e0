from typing import Optional


class PfisterCheckError(ValueError):
    """
    Base class for all errors raised by the pfister_check library.
    """


class DomainMismatchError(PfisterCheckError):
    pass


class ZeroDivisionInFieldError(PfisterCheckError, ZeroDivisionError):
    pass


class NotExactlyDivisibleError(PfisterCheckError):
    pass


class ArityError(PfisterCheckError):
    pass


class ZeroEntryError(PfisterCheckError):
    pass


class MissingUnitEntryError(PfisterCheckError):
    pass


class IsotropicFormError(PfisterCheckError):
    pass


class NonzeroValuationError(PfisterCheckError):
    # None stands for an infinite value, which only the zero element has.
    value: Optional[int]

    def __init__(self, message: str, value: Optional[int]) -> None:
        super().__init__(message)
        self.value = value


class ResidueValuationError(PfisterCheckError):
    index: int
    value: Optional[int]

    def __init__(self, message: str, index: int, value: Optional[int]) -> None:
        super().__init__(message)
        self.index = index
        self.value = value


class DegenerateResidueError(PfisterCheckError):
    index: int

    def __init__(self, message: str, index: int) -> None:
        super().__init__(message)
        self.index = index


class ExprSyntaxError(PfisterCheckError):
    detail: str
    position: int

    def __init__(self, detail: str, position: int) -> None:
        super().__init__("%s (at position %d)" % (detail, position))
        self.detail = detail
        self.position = position


class UnknownVariableError(PfisterCheckError):
    pass


class CeilingExceededError(PfisterCheckError):
    pass


class MalformedCertificateError(PfisterCheckError):
    pass
