"""Exception hierarchy. Every error is a ValueError so callers can catch broadly."""


class MixedPolyError(ValueError):
    pass


class ParseError(MixedPolyError):
    def __init__(self, message: str, position: int | None = None):
        self.position = position
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)


class DimensionError(MixedPolyError):
    pass


class ZeroPolynomialError(MixedPolyError):
    pass


class WeightError(MixedPolyError):
    pass


class HomogeneityError(MixedPolyError):
    """A homogeneity precondition of an identity check does not hold."""


class FamilyError(MixedPolyError):
    """Parameters of the four-term family violate an invariant or a condition."""

    def __init__(self, message: str, violations: list[str] | None = None):
        self.violations = list(violations or [])
        super().__init__(message)
