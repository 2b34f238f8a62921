"""Exception types raised by bwspinor operations."""


class BWSpinorError(Exception):
    """Base class for all bwspinor errors."""


class NegativeMass(BWSpinorError):
    pass


class NonUnitDeterminant(BWSpinorError):
    pass


class NotNull(BWSpinorError):
    pass


class NotFuturePointing(BWSpinorError):
    pass


class NotTimelike(BWSpinorError):
    pass


class ZeroSpinor(BWSpinorError):
    pass


class DegenerateReference(BWSpinorError):
    pass


class ComplexEigenvalues(BWSpinorError):
    pass


class DegenerateSpinDirection(BWSpinorError):
    pass


class MasslessNotSupported(BWSpinorError):
    pass


class NotMassive(BWSpinorError):
    pass


class ValenceMismatch(BWSpinorError):
    pass


class FrameMismatch(BWSpinorError):
    pass


class OrthogonalDirection(BWSpinorError):
    pass


class NotAntisymmetric(BWSpinorError):
    pass


class InconsistentPair(BWSpinorError):
    pass


class InvalidResolution(BWSpinorError):
    pass


class SchemaError(BWSpinorError):
    """Raised on malformed field/amplitude files; carries a JSON pointer."""

    def __init__(self, pointer: str, message: str):
        self.pointer = pointer
        self.message = message
        super().__init__(f"{pointer}: {message}")
