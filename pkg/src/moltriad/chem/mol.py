"""Molecular graph data model.

A molecule is a simple undirected graph of atoms and bonds, annotated with
perceived rings, aromaticity flags, and derived implicit hydrogen counts.
All structures are treated as immutable once parsing has finished.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

SINGLE = "single"
DOUBLE = "double"
TRIPLE = "triple"
AROMATIC = "aromatic"

BOND_ORDER_VALUE = {SINGLE: 1.0, DOUBLE: 2.0, TRIPLE: 3.0, AROMATIC: 1.5}

# symbol -> atomic number for every element the parser accepts
ELEMENTS = {
    "H": 1, "He": 2, "Li": 3, "Be": 4, "B": 5, "C": 6, "N": 7, "O": 8,
    "F": 9, "Ne": 10, "Na": 11, "Mg": 12, "Al": 13, "Si": 14, "P": 15,
    "S": 16, "Cl": 17, "K": 19, "Ca": 20, "Fe": 26, "Co": 27, "Ni": 28,
    "Cu": 29, "Zn": 30, "As": 33, "Se": 34, "Br": 35, "Ag": 47, "Sn": 50,
    "Sb": 51, "Te": 52, "I": 53, "Pt": 78, "Au": 79, "Hg": 80,
}
SYMBOLS = {num: sym for sym, num in ELEMENTS.items()}

# organic subset: writable without brackets, implicit hydrogens filled in
ORGANIC_SUBSET = {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}
AROMATIC_SYMBOLS = {"b", "c", "n", "o", "p", "s", "se", "as", "te"}

# permitted valences for implicit-H filling; charge shifts these by |charge|
DEFAULT_VALENCES = {
    "B": (3,), "C": (4,), "N": (3,), "O": (2,), "P": (3, 5),
    "S": (2, 4, 6), "F": (1,), "Cl": (1,), "Br": (1,), "I": (1,),
}

HALOGENS = {9, 17, 35, 53}


@dataclass(frozen=True)
class Atom:
    element: int                  # atomic number
    formal_charge: int = 0
    isotope: int | None = None
    explicit_h: int = 0           # hydrogen count given inside brackets
    aromatic: bool = False
    bracket: bool = False         # written as a bracket atom in the input
    stereo: str | None = None     # '@' / '@@', stored but never interpreted

    @property
    def symbol(self) -> str:
        return SYMBOLS[self.element]


@dataclass(frozen=True)
class Bond:
    a: int
    b: int
    order: str = SINGLE

    def other(self, idx: int) -> int:
        return self.b if idx == self.a else self.a

    @property
    def order_value(self) -> float:
        return BOND_ORDER_VALUE[self.order]


@dataclass
class Molecule:
    atoms: list[Atom] = field(default_factory=list)
    bonds: list[Bond] = field(default_factory=list)
    rings: list[list[int]] = field(default_factory=list)   # SSSR atom cycles
    implicit_h: list[int] = field(default_factory=list)

    def __post_init__(self):
        self._neighbors: list[list[tuple[int, Bond]]] | None = None

    # -- graph access ------------------------------------------------------

    def neighbors(self, idx: int) -> list[tuple[int, Bond]]:
        if self._neighbors is None:
            table: list[list[tuple[int, Bond]]] = [[] for _ in self.atoms]
            for bond in self.bonds:
                table[bond.a].append((bond.b, bond))
                table[bond.b].append((bond.a, bond))
            self._neighbors = table
        return self._neighbors[idx]

    def degree(self, idx: int) -> int:
        return len(self.neighbors(idx))

    def bond_between(self, a: int, b: int) -> Bond | None:
        for other, bond in self.neighbors(a):
            if other == b:
                return bond
        return None

    def total_h(self, idx: int) -> int:
        """Hydrogen count: bracket atoms carry it explicitly, others derived."""
        atom = self.atoms[idx]
        return atom.explicit_h if atom.bracket else self.implicit_h[idx]

    def ring_membership(self, idx: int) -> int:
        return sum(1 for ring in self.rings if idx in ring)

    def in_ring(self, idx: int) -> bool:
        return any(idx in ring for ring in self.rings)

    def bond_in_ring(self, bond: Bond) -> bool:
        for ring in self.rings:
            n = len(ring)
            for i in range(n):
                pair = {ring[i], ring[(i + 1) % n]}
                if pair == {bond.a, bond.b}:
                    return True
        return False

    def heavy_atom_count(self) -> int:
        return sum(1 for atom in self.atoms if atom.element != 1)

    def components(self) -> list[list[int]]:
        seen: set[int] = set()
        out = []
        for start in range(len(self.atoms)):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                cur = stack.pop()
                comp.append(cur)
                for nb, _ in self.neighbors(cur):
                    if nb not in seen:
                        seen.add(nb)
                        stack.append(nb)
            out.append(sorted(comp))
        return out

    def with_atom(self, idx: int, **changes) -> None:
        self.atoms[idx] = replace(self.atoms[idx], **changes)
        # frozen atoms are replaced wholesale; adjacency is unaffected
