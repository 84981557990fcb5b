"""SMILES parsing, canonicalization, and substructure matching."""

from .canonical import canonical_ranks, write_canonical_smiles
from .errors import (
    AromaticPerceptionError,
    IllegalCharacter,
    SmartsError,
    SmilesError,
    UnclosedRing,
    UnmatchedParenthesis,
    UnsupportedSmartsFeature,
    UnterminatedBracket,
    ValenceError,
)
from .mol import AROMATIC, DOUBLE, SINGLE, TRIPLE, Atom, Bond, Molecule
from .parser import is_valid_smiles, parse_smiles
from .tokenizer import Token, tokenize_smiles

__all__ = [
    "AROMATIC",
    "Atom",
    "AromaticPerceptionError",
    "Bond",
    "DOUBLE",
    "IllegalCharacter",
    "Molecule",
    "SINGLE",
    "SmartsError",
    "SmilesError",
    "TRIPLE",
    "Token",
    "UnclosedRing",
    "UnmatchedParenthesis",
    "UnsupportedSmartsFeature",
    "UnterminatedBracket",
    "ValenceError",
    "canonical_ranks",
    "is_valid_smiles",
    "parse_smiles",
    "tokenize_smiles",
    "write_canonical_smiles",
]
