"""Errors raised by the alignment trainer."""


class AlignError(ValueError):
    pass


class EmptyCorpus(AlignError):
    pass


class TokenIdOutOfRange(AlignError):
    pass


class LabelOutOfRange(AlignError):
    pass


class BatchTooSmall(AlignError):
    pass


class TargetTooShort(AlignError):
    pass


class NegativeWeight(AlignError):
    pass


class NonFiniteGradient(AlignError):
    pass


class DivergedLoss(AlignError):
    pass


class InvalidSmiles(AlignError):
    pass


class MissingCaptionFile(AlignError):
    pass
