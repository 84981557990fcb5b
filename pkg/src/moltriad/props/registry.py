"""Descriptor registry and property vectors.

The registry maps descriptor ids to implementations; the default manifest
(default.reg) fixes the output order.  Extra manifests may list any subset
of the implemented ids.
"""
from __future__ import annotations

from dataclasses import dataclass

from ..chem.mol import HALOGENS, Molecule
from .balaban import balaban_j
from .crippen import crippen_logp
from .errors import UnknownDescriptorId
from .qed import (
    num_aromatic_rings,
    num_h_acceptors,
    num_h_donors,
    num_rotatable_bonds,
    qed,
)
from .tables import default_registry_ids
from .tpsa import ertl_tpsa
from .weight import exact_mol_wt


def _fraction_csp3(mol: Molecule) -> float:
    carbons = [
        i for i, atom in enumerate(mol.atoms) if atom.element == 6
    ]
    if not carbons:
        return 0.0
    sp3 = sum(
        1
        for i in carbons
        if not mol.atoms[i].aromatic
        and all(bond.order == "single" for _, bond in mol.neighbors(i))
    )
    return sp3 / len(carbons)


DESCRIPTORS = {
    "BalabanJ": balaban_j,
    "ExactMolWt": exact_mol_wt,
    "MolLogP": crippen_logp,
    "TPSA": ertl_tpsa,
    "QED": qed,
    "HeavyAtomCount": lambda mol: float(mol.heavy_atom_count()),
    "NumHDonors": lambda mol: float(num_h_donors(mol)),
    "NumHAcceptors": lambda mol: float(num_h_acceptors(mol)),
    "NumRotatableBonds": lambda mol: float(num_rotatable_bonds(mol)),
    "RingCount": lambda mol: float(len(mol.rings)),
    "NumAromaticRings": lambda mol: float(num_aromatic_rings(mol)),
    "FractionCSP3": _fraction_csp3,
    "FormalCharge": lambda mol: float(
        sum(atom.formal_charge for atom in mol.atoms)
    ),
    "NumHalogenAtoms": lambda mol: float(
        sum(1 for atom in mol.atoms if atom.element in HALOGENS)
    ),
    "NumHeteroatoms": lambda mol: float(
        sum(1 for atom in mol.atoms if atom.element not in (1, 6))
    ),
}


@dataclass(frozen=True)
class PropertyVector:
    names: tuple[str, ...]
    values: tuple[float, ...]

    def as_dict(self) -> dict[str, float]:
        return dict(zip(self.names, self.values))


def descriptor_vector(
    mol: Molecule, registry: tuple[str, ...] | list[str] | None = None
) -> PropertyVector:
    ids = tuple(registry) if registry is not None else default_registry_ids()
    values = []
    for name in ids:
        if name not in DESCRIPTORS:
            raise UnknownDescriptorId(name)
        values.append(float(DESCRIPTORS[name](mol)))
    return PropertyVector(names=ids, values=tuple(values))
