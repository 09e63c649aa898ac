"""Exception hierarchy for gridtomo."""


class GridTomoError(Exception):
    """Base class for all gridtomo errors."""


class DirectionSetError(GridTomoError):
    """Invalid direction input."""


class EmptyDirectionSetError(DirectionSetError):
    pass


class ZeroDirectionError(DirectionSetError):
    pass


class NonPrimitiveDirectionError(DirectionSetError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"direction {pair} is not primitive (gcd > 1)")


class DuplicateDirectionError(DirectionSetError):
    def __init__(self, pair):
        self.pair = pair
        super().__init__(f"duplicate direction {pair} after sign identification")


class PointOutOfGridError(GridTomoError):
    def __init__(self, p, q, grid):
        super().__init__(f"point ({p}, {q}) outside {grid.m}x{grid.n} grid")


class DirectionNotInSetError(GridTomoError):
    def __init__(self, direction):
        super().__init__(f"direction {direction} not in the direction set")


class FreeValueOutsideBlockError(GridTomoError):
    """A supplied free value targets a point outside the free-choice block."""


class InconsistentInputError(GridTomoError):
    """Line sums admit no solution: a residual is nonzero after reconstruction."""


class InconsistentLineSumsError(GridTomoError):
    """Two images that were required to share line sums do not."""


class InfeasibleDirectionSpecError(GridTomoError):
    """Cannot sample the requested number of distinct primitive directions."""
