"""Errors raised by the evaluation harness."""


class EvalError(ValueError):
    pass


class LengthMismatch(EvalError):
    pass


class EmptyInput(EvalError):
    pass
