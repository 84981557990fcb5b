"""Lossless SMILES tokenizer.

Concatenating the lexemes of the produced tokens always reproduces the
input string exactly; the parser works from these tokens only.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import IllegalCharacter, UnterminatedBracket

ATOM = "atom"
BOND = "bond"
OPEN = "open"
CLOSE = "close"
RING = "ring"
DOT = "dot"

_TWO_CHAR = ("Cl", "Br")
_ONE_CHAR = set("BCNOPSFI")
_AROMATIC_ONE = set("bcnops")
_BOND_CHARS = set("-=#:/\\")


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


def tokenize_smiles(text: str) -> list[Token]:
    """Split a SMILES string into atom / bond / branch / ring-closure tokens."""
    if not text:
        raise IllegalCharacter("", 0)
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "[":
            end = text.find("]", i)
            if end < 0:
                raise UnterminatedBracket(i)
            tokens.append(Token(ATOM, text[i : end + 1], i))
            i = end + 1
        elif text[i : i + 2] in _TWO_CHAR:
            tokens.append(Token(ATOM, text[i : i + 2], i))
            i += 2
        elif ch in _ONE_CHAR or ch in _AROMATIC_ONE:
            tokens.append(Token(ATOM, ch, i))
            i += 1
        elif ch in _BOND_CHARS:
            tokens.append(Token(BOND, ch, i))
            i += 1
        elif ch == "(":
            tokens.append(Token(OPEN, ch, i))
            i += 1
        elif ch == ")":
            tokens.append(Token(CLOSE, ch, i))
            i += 1
        elif ch == ".":
            tokens.append(Token(DOT, ch, i))
            i += 1
        elif ch.isdigit():
            tokens.append(Token(RING, ch, i))
            i += 1
        elif ch == "%":
            if i + 2 >= n or not text[i + 1 : i + 3].isdigit():
                raise IllegalCharacter(ch, i)
            tokens.append(Token(RING, text[i : i + 3], i))
            i += 3
        else:
            raise IllegalCharacter(ch, i)
    return tokens
