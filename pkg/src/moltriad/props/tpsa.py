"""Topological polar surface area from N/O fragment contributions."""
from __future__ import annotations

from ..chem.mol import AROMATIC, DOUBLE, SINGLE, TRIPLE, Molecule
from .tables import tpsa_contributions


def _atom_key(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    symbol = atom.symbol.lower() if atom.aromatic else atom.symbol
    counts = {SINGLE: 0, DOUBLE: 0, TRIPLE: 0, AROMATIC: 0}
    in_3ring = any(len(ring) == 3 and idx in ring for ring in mol.rings)
    for _, bond in mol.neighbors(idx):
        counts[bond.order] += 1
    h = mol.total_h(idx)
    # bond counts cover heavy-atom bonds only; hydrogens have their own slot
    bond_sig = "{}:{}:{}:{}".format(
        counts[SINGLE], counts[DOUBLE], counts[TRIPLE], counts[AROMATIC]
    )
    return "{},{},{},{},{}".format(
        symbol, atom.formal_charge, h, bond_sig, 1 if in_3ring else 0
    )


def ertl_tpsa(mol: Molecule) -> float:
    """Fragment-additive polar surface area; atoms with no table entry
    contribute zero (the table covers the N/O subset only)."""
    table = tpsa_contributions()
    total = 0.0
    for idx, atom in enumerate(mol.atoms):
        if atom.element not in (7, 8):
            continue
        total += table.get(_atom_key(mol, idx), 0.0)
    return total
