"""Hashed molecular fingerprints and Tanimoto similarity.

Three kinds: `morgan` (circular environments), `path` (linear paths up to a
length cap), `maccs_lite` (structural keys from the shipped pattern list).
Similarity protocol matches common practice; bit layouts are our own.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..chem.mol import Molecule
from ..chem.smarts import has_match
from .errors import KindMismatch, UnsupportedKind
from .tables import maccs_lite_keys

_ORDER_CODE = {"single": 1, "double": 2, "triple": 3, "aromatic": 4}


@dataclass(frozen=True)
class Fingerprint:
    kind: str
    width: int
    bits: frozenset[int]
    params: dict = field(default_factory=dict, compare=False, hash=False)


def _initial_invariants(mol: Molecule) -> list[int]:
    out = []
    for idx, atom in enumerate(mol.atoms):
        key = (
            atom.element,
            mol.degree(idx),
            atom.formal_charge,
            mol.total_h(idx),
            atom.aromatic,
            mol.in_ring(idx),
        )
        out.append(hash(key) & 0xFFFFFFFF)
    return out


def _morgan_bits(mol: Molecule, radius: int, width: int) -> frozenset[int]:
    invariants = _initial_invariants(mol)
    bits = {inv % width for inv in invariants}
    current = invariants
    for _ in range(radius):
        updated = []
        for idx in range(len(mol.atoms)):
            env = sorted(
                (_ORDER_CODE[bond.order], current[nb])
                for nb, bond in mol.neighbors(idx)
            )
            code = hash((current[idx], tuple(env))) & 0xFFFFFFFF
            updated.append(code)
            bits.add(code % width)
        current = updated
    return frozenset(bits)


def _path_bits(mol: Molecule, max_length: int, width: int) -> frozenset[int]:
    invariants = [
        hash((atom.element, atom.aromatic)) & 0xFFFFFFFF for atom in mol.atoms
    ]
    bits: set[int] = set()

    def walk(path: list[int], codes: list[int]) -> None:
        if len(path) > 1:
            # hash the path in its direction-independent orientation
            forward = tuple(codes)
            backward = tuple(reversed(codes))
            bits.add(hash(min(forward, backward)) % width)
        if len(path) - 1 >= max_length:
            return
        last = path[-1]
        for nb, bond in mol.neighbors(last):
            if nb in path:
                continue
            walk(
                path + [nb],
                codes + [_ORDER_CODE[bond.order], invariants[nb]],
            )

    for start in range(len(mol.atoms)):
        walk([start], [invariants[start]])
    return frozenset(bits)


def _maccs_bits(mol: Molecule) -> tuple[frozenset[int], int]:
    keys = maccs_lite_keys()
    bits = frozenset(
        index for index, _, pattern in keys if has_match(mol, pattern)
    )
    return bits, len(keys)


def fingerprint(mol: Molecule, kind: str = "morgan", **params) -> Fingerprint:
    if kind == "morgan":
        radius = int(params.get("radius", 2))
        width = int(params.get("width", 2048))
        return Fingerprint(
            kind, width, _morgan_bits(mol, radius, width),
            {"radius": radius},
        )
    if kind == "path":
        max_length = int(params.get("max_length", 7))
        width = int(params.get("width", 2048))
        return Fingerprint(
            kind, width, _path_bits(mol, max_length, width),
            {"max_length": max_length},
        )
    if kind == "maccs_lite":
        bits, width = _maccs_bits(mol)
        return Fingerprint(kind, width, bits, {"key_set": "maccs_lite.txt"})
    raise UnsupportedKind(kind)


def tanimoto(a: Fingerprint, b: Fingerprint) -> float:
    if a.kind != b.kind or a.width != b.width:
        raise KindMismatch(f"{a.kind}/{a.width} vs {b.kind}/{b.width}")
    union = a.bits | b.bits
    if not union:
        return 1.0
    return len(a.bits & b.bits) / len(union)
