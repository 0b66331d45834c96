"""Exception hierarchy shared by the library, the CLI and the HTTP layer."""
from typing import Optional


class BranchCoverError(Exception):
    """Base class for every error raised by branchcover."""

    exit_code: int = 1
    status_code: int = 422
    error_code: str = "BRANCHCOVER_ERROR"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class DSLSyntaxError(BranchCoverError):
    """Raised when fibration source text does not match the grammar."""

    exit_code = 2
    error_code = "SYNTAX_ERROR"

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} at line {line}, column {column}")
        self.line = line
        self.column = column


class IndexOutOfRange(BranchCoverError):
    """A generator index does not fit the genus."""

    exit_code = 2
    error_code = "INDEX_OUT_OF_RANGE"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        if line is not None:
            message = f"{message} at line {line}, column {column}"
        super().__init__(message)
        self.line = line
        self.column = column


class NotCertified(BranchCoverError):
    status_code = 409
    error_code = "NOT_CERTIFIED"


class DivisibilityError(BranchCoverError):
    exit_code = 3
    error_code = "DIVISIBILITY"


class GenusMismatch(BranchCoverError):
    error_code = "GENUS_MISMATCH"


class NotSeparating(BranchCoverError):
    error_code = "NOT_SEPARATING"


class NotAChainBlock(BranchCoverError):
    error_code = "NOT_A_CHAIN_BLOCK"


class NotBlowdownable(BranchCoverError):
    error_code = "NOT_BLOWDOWNABLE"


class UnexpectedShape(BranchCoverError):
    error_code = "UNEXPECTED_SHAPE"


class NonIntegral(BranchCoverError):
    error_code = "NON_INTEGRAL"


class ParityError(BranchCoverError):
    error_code = "PARITY"


class RangeError(BranchCoverError):
    error_code = "RANGE"


class SourceUnreadable(BranchCoverError):
    exit_code = 2
    error_code = "SOURCE_UNREADABLE"
