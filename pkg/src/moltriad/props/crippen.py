"""Wildman-Crippen atom-contribution logP.

Each heavy atom is assigned a type code by hard-coded structural rules;
hydrogens are typed from the heavy atom that carries them.  Contributions
per type live in the crippen.txt data table.  Untypeable atoms fall to the
per-element wildcard class (CS/NS/OS/Me1).
"""
from __future__ import annotations

from ..chem.mol import AROMATIC, DOUBLE, HALOGENS, SINGLE, TRIPLE, Molecule
from .tables import crippen_contributions

_HETERO = {7, 8, 15, 16} | HALOGENS
_ORGANIC = {5, 6, 7, 8, 15, 16} | HALOGENS


def _neighbor_elements(mol: Molecule, idx: int) -> list[int]:
    return [mol.atoms[nb].element for nb, _ in mol.neighbors(idx)]


def _carbon_type(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    h = mol.total_h(idx)
    nbrs = mol.neighbors(idx)
    orders = [bond.order for _, bond in nbrs]

    if atom.aromatic:
        if DOUBLE in orders:
            return "C25"
        if orders.count(AROMATIC) >= 3:
            return "C19"
        if h > 0:
            return "C18"
        subs = [nb for nb, bond in nbrs if bond.order != AROMATIC]
        if not subs:
            return "C18"
        sub = mol.atoms[subs[0]]
        if sub.aromatic:
            return "C20"
        table = {9: "C14", 17: "C15", 35: "C16", 53: "C17",
                 6: "C21", 7: "C22", 8: "C23", 16: "C24"}
        return table.get(sub.element, "C13")

    if TRIPLE in orders or orders.count(DOUBLE) == 2:
        return "C7"
    if DOUBLE in orders:
        partners = [mol.atoms[nb] for nb, bond in nbrs if bond.order == DOUBLE]
        if any(p.element != 6 for p in partners):
            return "C5"
        if any(p.aromatic for p in partners):
            return "C26"
        if any(mol.atoms[nb].aromatic for nb, _ in nbrs):
            return "C26"
        return "C6"

    # sp3 carbon
    if any(mol.atoms[nb].element not in _ORGANIC | {1} for nb, _ in nbrs):
        return "C27"
    hetero = any(mol.atoms[nb].element in _HETERO and not mol.atoms[nb].aromatic
                 for nb, _ in nbrs)
    if hetero:
        return "C3" if h >= 2 else "C4"
    aromatic_nbrs = [mol.atoms[nb] for nb, _ in nbrs if mol.atoms[nb].aromatic]
    if aromatic_nbrs:
        if h == 3:
            return "C8" if any(p.element == 6 for p in aromatic_nbrs) else "C9"
        if h == 2:
            return "C10"
        if h == 1:
            return "C11"
        return "C12"
    return "C1" if h >= 2 else "C2"


def _nitrogen_type(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    h = mol.total_h(idx)
    nbrs = mol.neighbors(idx)
    orders = [bond.order for _, bond in nbrs]

    if atom.formal_charge > 0:
        if atom.aromatic:
            return "N12" if h > 0 else "N13"
        if h > 0:
            return "N10"
        return "N14" if DOUBLE in orders or TRIPLE in orders else "N13"
    if atom.formal_charge < 0:
        return "N14"
    if atom.aromatic:
        return "N11"
    if TRIPLE in orders:
        return "N9"
    if DOUBLE in orders:
        return "N5" if h >= 1 else "N6"
    aromatic_nbr = any(mol.atoms[nb].aromatic for nb, _ in nbrs)
    if h >= 2:
        return "N3" if aromatic_nbr else "N1"
    if h == 1:
        return "N4" if aromatic_nbr else "N2"
    if len(nbrs) == 3:
        return "N8" if aromatic_nbr else "N7"
    return "NS"


def _oxygen_type(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    h = mol.total_h(idx)
    nbrs = mol.neighbors(idx)

    if atom.aromatic:
        return "O1"
    if atom.formal_charge < 0:
        partners = [mol.atoms[nb].element for nb, _ in nbrs]
        if 7 in partners or 8 in partners:
            return "O5"
        if 16 in partners:
            return "O6"
        if any(mol.atoms[nb].element == 6 and _has_double_o(mol, nb)
               for nb, _ in nbrs):
            return "O12"
        return "O7"
    if h >= 1:
        return "O2"
    double = [nb for nb, bond in nbrs if bond.order == DOUBLE]
    if double:
        partner = mol.atoms[double[0]]
        if partner.element in (7, 8):
            return "O5"
        if partner.element == 16:
            return "O6"
        if partner.element == 6:
            # carbonyl: class follows the carbon's other two substituents;
            # only the all-hetero case (urea, carbamate) reaches O11
            carbon = double[0]
            others = [mol.atoms[nb] for nb, _ in mol.neighbors(carbon)
                      if nb != idx]
            carbon_h = mol.total_h(carbon)
            if any(o.element == 6 and not o.aromatic for o in others) or carbon_h:
                return "O9"
            if any(o.aromatic for o in others):
                return "O10"
            return "O11"
        return "OS"
    if mol.degree(idx) == 2:
        if any(mol.atoms[nb].aromatic for nb, _ in nbrs):
            return "O4"
        return "O3"
    return "OS"


def _has_double_o(mol: Molecule, idx: int) -> bool:
    return any(bond.order == DOUBLE and mol.atoms[nb].element == 8
               for nb, bond in mol.neighbors(idx))


def _sulfur_type(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    if atom.aromatic:
        return "S3"
    if atom.formal_charge != 0:
        return "S2"
    if any(bond.order == DOUBLE for _, bond in mol.neighbors(idx)):
        return "S2"
    return "S1"


def _halogen_type(mol: Molecule, idx: int) -> str:
    symbol = mol.atoms[idx].symbol
    attached_c = any(mol.atoms[nb].element == 6 for nb, _ in mol.neighbors(idx))
    return symbol if attached_c or not mol.neighbors(idx) else "Hal"


def _hydrogen_type(mol: Molecule, idx: int) -> str:
    """Type of hydrogens carried by heavy atom `idx`."""
    atom = mol.atoms[idx]
    if atom.element == 6:
        return "H1"
    if atom.element == 7:
        return "H3"
    if atom.element == 8:
        nbr_elems = _neighbor_elements(mol, idx)
        if 7 in nbr_elems:
            return "H3"
        if 8 in nbr_elems or 16 in nbr_elems:
            return "H4"
        for nb, _ in mol.neighbors(idx):
            if mol.atoms[nb].element == 6 and _has_double_o(mol, nb):
                return "H4"
        return "H2"
    return "HS"


def atom_types(mol: Molecule) -> list[str]:
    """Per-heavy-atom Crippen type codes, in atom order."""
    out = []
    for idx, atom in enumerate(mol.atoms):
        el = atom.element
        if el == 6:
            out.append(_carbon_type(mol, idx))
        elif el == 7:
            out.append(_nitrogen_type(mol, idx))
        elif el == 8:
            out.append(_oxygen_type(mol, idx))
        elif el == 16:
            out.append(_sulfur_type(mol, idx))
        elif el in HALOGENS:
            out.append(_halogen_type(mol, idx))
        elif el == 15:
            out.append("P")
        elif el == 1:
            out.append("HS")
        else:
            out.append("Me1")
    return out


def atom_contributions(mol: Molecule) -> list[tuple[str, float]]:
    """(type, contribution) per heavy atom, hydrogens folded into their
    carrier's entry.  Exposed for debugging and per-atom inspection."""
    table = crippen_contributions()
    out = []
    for idx, code in enumerate(atom_types(mol)):
        value = table[code]
        h = mol.total_h(idx)
        if h:
            value += h * table[_hydrogen_type(mol, idx)]
        out.append((code, value))
    return out


def crippen_logp(mol: Molecule) -> float:
    return sum(value for _, value in atom_contributions(mol))
