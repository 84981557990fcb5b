"""Exceptions raised by the SMILES/SMARTS machinery."""


class SmilesError(ValueError):
    """Base class for all SMILES parsing failures."""


class IllegalCharacter(SmilesError):
    def __init__(self, char: str, position: int):
        super().__init__(f"illegal character {char!r} at index {position}")
        self.char = char
        self.position = position


class UnterminatedBracket(SmilesError):
    def __init__(self, position: int):
        super().__init__(f"bracket atom opened at index {position} is never closed")
        self.position = position


class UnclosedRing(SmilesError):
    def __init__(self, labels):
        super().__init__(f"ring closure(s) never matched: {sorted(labels)}")
        self.labels = set(labels)


class UnmatchedParenthesis(SmilesError):
    def __init__(self, position: int):
        super().__init__(f"unmatched parenthesis at index {position}")
        self.position = position


class ValenceError(SmilesError):
    def __init__(self, atom_index: int, valence: float):
        super().__init__(
            f"atom {atom_index} has valence {valence:g}, not permitted for its element"
        )
        self.atom_index = atom_index
        self.valence = valence


class AromaticPerceptionError(SmilesError):
    def __init__(self, atom_index: int):
        super().__init__(
            f"atom {atom_index} was written aromatic but lies in no aromatic ring"
        )
        self.atom_index = atom_index


class SmartsError(ValueError):
    """Base class for SMARTS pattern failures."""


class UnsupportedSmartsFeature(SmartsError):
    def __init__(self, feature: str):
        super().__init__(f"unsupported SMARTS feature: {feature}")
        self.feature = feature
