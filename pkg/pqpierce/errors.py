from enum import Enum
from typing import Any, Dict


class ErrorCode(str, Enum):
    EMPTY_REGION = "EMPTY_REGION"
    UNBOUNDED_REGION = "UNBOUNDED_REGION"
    BAD_PARAMS = "BAD_PARAMS"
    BAD_SEQUENCE = "BAD_SEQUENCE"
    NO_ESCAPE_PROOF = "NO_ESCAPE_PROOF"
    BUDGET_EXCEEDED = "BUDGET_EXCEEDED"
    NOT_COMPACT = "NOT_COMPACT"
    NOT_DISJOINT = "NOT_DISJOINT"
    NO_WITNESS = "NO_WITNESS"
    INVALID_INPUT = "INVALID_INPUT"
    HYPOTHESIS_VIOLATED = "HYPOTHESIS_VIOLATED"
    PARSE_ERROR = "PARSE_ERROR"
    DUPLICATE_LABEL = "DUPLICATE_LABEL"


# CLI exit code per error code; anything not listed exits 1.
EXIT_CODES: Dict[ErrorCode, int] = {
    ErrorCode.PARSE_ERROR: 2,
    ErrorCode.DUPLICATE_LABEL: 2,
    ErrorCode.BAD_PARAMS: 2,
    ErrorCode.BAD_SEQUENCE: 2,
    ErrorCode.INVALID_INPUT: 2,
    ErrorCode.HYPOTHESIS_VIOLATED: 3,
    ErrorCode.NOT_DISJOINT: 3,
    ErrorCode.NOT_COMPACT: 3,
}


class PqPierceError(Exception):
    """Domain error carrying a stable code and an optional certificate.

    ``details`` holds whatever makes the failure checkable after the fact:
    violating labels, the offending line of a family file, a lower bound.
    """

    def __init__(self, code: ErrorCode, message: str, **details: Any) -> None:
        super().__init__(f"{code.value}: {message}")
        self.code = code
        self.message = message
        self.details = details

    @property
    def exit_code(self) -> int:
        return EXIT_CODES.get(self.code, 1)

    def to_dict(self) -> Dict[str, Any]:
        return {"code": self.code.value, "message": self.message, **self.details}
