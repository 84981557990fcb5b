"""Errors raised by the triplet store and instruction synthesis."""


class InstructError(ValueError):
    pass


class MalformedRow(InstructError):
    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class HeaderMismatch(InstructError):
    pass


class UnknownProperty(InstructError):
    pass


class MissingConstraintProperty(InstructError):
    pass


class InsufficientTriplets(InstructError):
    pass


class TooFewRecords(InstructError):
    pass
