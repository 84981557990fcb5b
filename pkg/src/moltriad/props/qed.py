"""Quantitative estimate of drug-likeness and its count subdescriptors."""
from __future__ import annotations

import math

from ..chem.mol import DOUBLE, HALOGENS, SINGLE, TRIPLE, Molecule
from ..chem.smarts import has_match
from .balaban import balaban_j  # noqa: F401  (re-export convenience)
from .crippen import crippen_logp
from .tables import alert_patterns, qed_parameters
from .tpsa import ertl_tpsa
from .weight import exact_mol_wt


def num_h_donors(mol: Molecule) -> int:
    """Heteroatoms (N, O, S) carrying at least one hydrogen."""
    return sum(
        1
        for idx, atom in enumerate(mol.atoms)
        if atom.element in (7, 8, 16) and mol.total_h(idx) > 0
    )


def _is_acceptor_nitrogen(mol: Molecule, idx: int) -> bool:
    atom = mol.atoms[idx]
    if atom.formal_charge != 0:
        return False
    orders = [bond.order for _, bond in mol.neighbors(idx)]
    if TRIPLE in orders:
        return True
    # adjacent carbonyl/sulfonyl nitrogens (amides) do not accept
    for nb, _ in mol.neighbors(idx):
        partner = mol.atoms[nb]
        if partner.element in (6, 16):
            for nb2, bond2 in mol.neighbors(nb):
                if bond2.order == DOUBLE and mol.atoms[nb2].element == 8:
                    return False
    if atom.aromatic:
        # pyridine-type ring nitrogen: two ring bonds, no substituent, no H
        return mol.degree(idx) == 2 and mol.total_h(idx) == 0
    return DOUBLE not in orders or mol.total_h(idx) == 0


def num_h_acceptors(mol: Molecule) -> int:
    count = 0
    for idx, atom in enumerate(mol.atoms):
        if atom.element == 8:
            count += 1
        elif atom.element == 7 and _is_acceptor_nitrogen(mol, idx):
            count += 1
    return count


def num_rotatable_bonds(mol: Molecule) -> int:
    """Non-ring single bonds between two non-terminal heavy atoms, excluding
    bonds whose endpoint sits in a triple bond (amide bonds stay counted)."""

    def in_triple(idx: int) -> bool:
        return any(bond.order == TRIPLE for _, bond in mol.neighbors(idx))

    count = 0
    for bond in mol.bonds:
        if bond.order != SINGLE or mol.bond_in_ring(bond):
            continue
        if mol.degree(bond.a) < 2 or mol.degree(bond.b) < 2:
            continue
        if in_triple(bond.a) or in_triple(bond.b):
            continue
        count += 1
    return count


def num_aromatic_rings(mol: Molecule) -> int:
    return sum(
        1 for ring in mol.rings if all(mol.atoms[i].aromatic for i in ring)
    )


def num_alerts(mol: Molecule) -> int:
    """Number of structural alert patterns with at least one match."""
    return sum(1 for _, pattern in alert_patterns() if has_match(mol, pattern))


def _ads(x: float, p: dict[str, float]) -> float:
    exp1 = 1.0 + math.exp(-(x - p["c"] + p["d"] / 2.0) / p["e"])
    exp2 = 1.0 + math.exp(-(x - p["c"] - p["d"] / 2.0) / p["f"])
    return p["a"] + p["b"] / exp1 * (1.0 - 1.0 / exp2)


def qed_properties(mol: Molecule) -> dict[str, float]:
    return {
        "MW": exact_mol_wt(mol),
        "ALOGP": crippen_logp(mol),
        "HBA": num_h_acceptors(mol),
        "HBD": num_h_donors(mol),
        "PSA": ertl_tpsa(mol),
        "ROTB": num_rotatable_bonds(mol),
        "AROM": num_aromatic_rings(mol),
        "ALERTS": num_alerts(mol),
    }


def qed(mol: Molecule) -> float:
    """Weighted geometric mean of the eight desirability functions."""
    params = qed_parameters()
    values = qed_properties(mol)
    num = 0.0
    den = 0.0
    for name, p in params.items():
        d = max(_ads(values[name], p) / p["dmax"], 1e-9)
        num += p["weight"] * math.log(d)
        den += p["weight"]
    return math.exp(num / den)
