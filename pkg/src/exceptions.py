class RigidityError(Exception):
    """Base class for every error raised by the rigidity toolkit."""

    status_code = 400


class InvalidArgumentError(RigidityError, ValueError):
    status_code = 400


class RelationParseError(InvalidArgumentError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceLimitError(RigidityError):
    status_code = 413

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what}: size {size} exceeds the configured bound {bound}")


class ConstructionPreconditionError(RigidityError):
    status_code = 422


class HypothesisViolationError(RigidityError):
    status_code = 422


class NotApplicableError(RigidityError):
    status_code = 422
