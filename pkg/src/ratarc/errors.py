"""Exception types shared across the library."""


class RatarcError(Exception):
    """Base class for all library-specific failures."""


class NotASquare(RatarcError):
    """Polynomial is not the square of a rational-coefficient polynomial."""


class NonzeroResidue(RatarcError):
    """An order -1 coefficient survives at a pole, so the integral is not rational."""

    def __init__(self, root, value=None):
        self.root = root
        self.value = value
        super().__init__(f"nonzero residue at t = {root}")


class Infeasible(RatarcError):
    """Linear system has no solution."""


class UnderdeterminedSystem(RatarcError):
    """Linear system has a solution space of positive dimension where a unique
    solution was required."""


class FactorMismatch(RatarcError):
    """Supplied factored denominator does not reconstruct the actual one."""


class NotRepresentable(RatarcError):
    """Quantity cannot be expressed over the rationals."""


class HasRealFactor(RatarcError):
    """Vector polynomial carries a nonconstant real polynomial factor."""

    def __init__(self, content):
        self.content = content
        super().__init__(f"real polynomial factor present: {content}")


class NotPH(RatarcError):
    """Norm of the hodograph is not a polynomial square."""


class UnsupportedSplittingField(RatarcError):
    """Factorization would need irrational quadratic factors of the speed."""


class DegenerateEnvelope(RatarcError):
    """Hyperplane family has identically singular derivative system."""


class NotAnEnvelopeSolution(RatarcError):
    """Curve tangents do not lie in the given hyperplane family."""


class DirectionMismatch(RatarcError):
    """Prescribed derivative direction disagrees with the tangent field."""


class CannotExtractMu(RatarcError):
    """Cusp factor is unavailable and cannot be reconstructed."""


class NotInSpan(RatarcError):
    """Curve is not a combination of the basis plus translations."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)
