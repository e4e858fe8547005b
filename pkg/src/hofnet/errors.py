"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain where an operation is defined."""


class SizeError(DomainError):
    """A requested construction would exceed the configured facet cap."""

    def __init__(self, predicted: int, cap: int):
        self.predicted = predicted
        self.cap = cap
        super().__init__(f"predicted facet count {predicted} exceeds cap {cap}")


class EstimationError(RuntimeError):
    """Too few usable data points to fit a scaling exponent."""


class DisconnectedGraphError(DomainError):
    """Distance computations require a connected graph."""
