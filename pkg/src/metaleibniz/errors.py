"""Exception types raised across the package."""


class RankMismatchError(ValueError):
    """Operands live in algebras of different rank."""


class IndexRangeError(ValueError):
    """A generator or variable index lies outside ``1..n``."""


class NotInCommutatorIdealError(ValueError):
    """The element has a nonzero linear part where ``L_n'`` is required."""


class SubmoduleError(ValueError):
    """The element is not supported on the required submodule."""


class NotSymmetricError(ValueError):
    """A symmetric element was required."""


class ConstraintError(ValueError):
    """Stabilizer constraints on symmetric data are violated."""


class CostBoundError(ValueError):
    """The requested computation exceeds its configured size bound."""


class CriterionError(ValueError):
    """No decomposition exists because the preservation criterion fails."""


class ParseError(ValueError):
    """Syntax error in textual input, with 1-based line and column."""

    def __init__(self, message, text="", pos=0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col
