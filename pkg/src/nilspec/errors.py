class NilspecError(Exception):
    """Base class for all package errors."""


class RingAxiomError(NilspecError):
    """A ring law failed on explicit tables; carries the violating witness."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"ring axiom violated: {witness}")


class NotIdealError(NilspecError):
    """A member set is not an ideal; carries the violating witness."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"not an ideal: {witness}")


class NotHomomorphismError(NilspecError):
    """An element map is not a ring homomorphism."""

    def __init__(self, witness, message=None):
        self.witness = witness
        super().__init__(message or f"not a homomorphism: {witness}")


class NotEMorphismError(NilspecError):
    """A homomorphism fails the pair-morphism conditions (unitality or
    exact transport of the distinguished ideal)."""

    def __init__(self, reason, witness=None):
        self.reason = reason
        self.witness = witness
        super().__init__(f"not a pair morphism: {reason}" + (f" (witness {witness})" if witness is not None else ""))


class SizeLimitError(NilspecError):
    """A construction or enumeration exceeded the configured resource limit."""


class SearchBudgetError(NilspecError):
    """The homomorphism search exceeded its node budget."""


class VerificationFault(NilspecError):
    """A structural claim that must hold on every instance failed.

    Raised by the checking machinery itself; seeing one means either the
    input tables are corrupt or there is a bug in this package.
    """


class SpecParseError(NilspecError):
    """A ring-spec JSON document does not match the grammar."""
