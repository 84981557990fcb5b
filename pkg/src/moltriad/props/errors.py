"""Errors raised by the descriptor and fingerprint layer."""


class PropsError(ValueError):
    pass


class UnknownElementMass(PropsError):
    pass


class UnknownDescriptorId(PropsError):
    pass


class UnsupportedKind(PropsError):
    pass


class KindMismatch(PropsError):
    pass
