from typing import Any, Optional


class HetccError(Exception):
    """Root of every error the solver raises on purpose.

    `exit_code` is what the command line reports when the error escapes a run:
    2 for bad input, 3 for internal failures that signal a bug.
    """

    exit_code: int = 2

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


# ---------- kernel ----------
class KernelError(HetccError):
    pass


class MalformedTermError(KernelError):
    pass


class UnboundNameError(MalformedTermError):
    def __init__(self, name: str) -> None:
        super().__init__(f"unbound name '{name}'")
        self.name = name


class TypeMismatchError(KernelError):
    def __init__(self, subterm: Any, expected: Any, actual: Any, detail: Optional[str] = None) -> None:
        super().__init__(detail or f"type mismatch in {subterm}: expected {expected}, got {actual}")
        self.subterm = subterm
        self.expected = expected
        self.actual = actual


# ---------- equality theory / proofs ----------
class TheoryError(HetccError):
    pass


class InvalidArityError(TheoryError):
    pass


class RegistrationError(TheoryError):
    pass


class UnsupportedFunctionTypeError(TheoryError):
    pass


class ProofConstructionError(TheoryError):
    exit_code = 3


class NoCommonAncestorError(ProofConstructionError):
    pass


class PathRangeError(ProofConstructionError):
    pass


# ---------- flattening / engine ----------
class UnsupportedGoalError(HetccError):
    pass


class EngineInvariantError(HetccError):
    exit_code = 3


# ---------- input ----------
class ProblemSyntaxError(HetccError):
    def __init__(self, detail: str, line: int, column: int) -> None:
        super().__init__(f"{detail} (line {line}, column {column})")
        self.line = line
        self.column = column


class ElaborationError(HetccError):
    def __init__(self, detail: str, line: Optional[int] = None) -> None:
        super().__init__(detail if line is None else f"line {line}: {detail}")
        self.line = line
