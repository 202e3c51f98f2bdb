"""Exception hierarchy shared across the package."""


class InputError(ValueError):
    """Malformed or inconsistent input document."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        where = []
        if field is not None:
            where.append(f"field {field!r}")
        if line is not None:
            where.append(f"line {line}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.message = message
        self.field = field
        self.line = line


class HypothesisError(ValueError):
    """The input data violates a standing hypothesis (nonsingularity, shellability)."""


class NonsingularityError(HypothesisError):
    def __init__(self, faces):
        self.faces = list(faces)
        super().__init__(f"nonsingularity fails on faces {self.faces}")


class NotShellableError(HypothesisError):
    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class IndeterminateRankError(RuntimeError):
    """The degree bound was too small to pin down the quotient module."""
