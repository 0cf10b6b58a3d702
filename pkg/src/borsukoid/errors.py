"""Exception hierarchy."""


class BorsukoidError(Exception):
    pass


class MatroidError(BorsukoidError, ValueError):
    pass


class EmptyBases(MatroidError):
    pass


class UnequalCardinality(MatroidError):
    pass


class ExchangeAxiomViolation(MatroidError):
    """Carries the witnessing triple as external labels."""

    def __init__(self, basis, other, element):
        self.basis = basis
        self.other = other
        self.element = element
        super().__init__(
            f"exchange axiom fails: e={element!r} in {sorted(map(str, basis))} "
            f"has no partner in {sorted(map(str, other))}"
        )


class UnknownLabel(MatroidError):
    pass


class DuplicateLabel(MatroidError):
    pass


class LabelCollision(MatroidError):
    pass


class GroundSetTooLarge(MatroidError):
    pass


class ColoopShared(MatroidError):
    pass


class LoopShared(MatroidError):
    pass


class NotABasis(MatroidError):
    pass


class BadParams(BorsukoidError, ValueError):
    pass


class InvalidPathSpec(BadParams):
    pass


class TooManyEdges(BadParams):
    pass


class AttachNotInjective(BadParams):
    pass


class DegreeTooLarge(BadParams):
    pass


class Disconnected(BadParams):
    pass


class TooLarge(BadParams):
    pass


class SingleBasis(BorsukoidError, ValueError):
    pass


class NotACocircuit(BorsukoidError, ValueError):
    pass


class NotConnected(BorsukoidError, ValueError):
    pass


class DisjointBasesExist(BorsukoidError, ValueError):
    pass


class InvalidInputCertificate(BorsukoidError, ValueError):
    pass


class PreconditionFailed(BorsukoidError, ValueError):
    pass


class UnknownClaim(BorsukoidError, KeyError):
    pass


class BudgetExhausted(BorsukoidError):
    """An exact search ran out of budget; ``lower``/``upper`` bracket the answer."""

    def __init__(self, lower, upper, message=None):
        self.lower = lower
        self.upper = upper
        super().__init__(message or f"budget exhausted: value in [{lower}, {upper}]")
