"""Exception hierarchy shared by all modules.

Every error carries a stable ``code`` string (used by the CLI) and an
``exit_code`` for process-level reporting.
"""


class GridAlgebraError(Exception):
    code = "error"
    exit_code = 70


class DomainMismatch(GridAlgebraError):
    code = "domain-mismatch"


class NotDivisible(GridAlgebraError):
    code = "not-divisible"


class DivisionByZero(GridAlgebraError):
    code = "division-by-zero"


class ZeroPolynomial(GridAlgebraError):
    code = "zero-polynomial"


class NotUnimodular(GridAlgebraError):
    code = "not-unimodular"


class ShapeTooLarge(GridAlgebraError):
    code = "shape-too-large"


class EmptyValidRegion(GridAlgebraError):
    code = "empty-valid-region"


class NotLowComplexity(GridAlgebraError):
    code = "not-low-complexity"


class DegeneratePatterns(GridAlgebraError):
    code = "degenerate-patterns"


class NotALinePolynomial(GridAlgebraError):
    code = "not-a-line-polynomial"


class NotAnnihilated(GridAlgebraError):
    code = "not-annihilated"


class WindowSmallerThanShape(GridAlgebraError):
    code = "window-smaller-than-shape"


class InvalidAlphabet(GridAlgebraError):
    code = "invalid-alphabet"


class InputFormatError(GridAlgebraError):
    code = "input-format"
    exit_code = 65


class UsageError(GridAlgebraError):
    code = "usage"
    exit_code = 64
