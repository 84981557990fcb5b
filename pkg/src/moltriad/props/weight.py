"""Monoisotopic molecular weight."""
from __future__ import annotations

from ..chem.mol import Molecule
from .errors import UnknownElementMass
from .tables import isotope_masses, monoisotopic_masses


def exact_mol_wt(mol: Molecule) -> float:
    """Sum of monoisotopic masses over all atoms, implicit hydrogens
    included.  An isotope label overrides the default mass for that atom."""
    masses = monoisotopic_masses()
    isotopes = isotope_masses()
    h_mass = masses["H"]
    total = 0.0
    for idx, atom in enumerate(mol.atoms):
        symbol = atom.symbol
        if symbol not in masses:
            raise UnknownElementMass(symbol)
        if atom.isotope is not None:
            key = (symbol, atom.isotope)
            if key not in isotopes:
                raise UnknownElementMass(f"{symbol}-{atom.isotope}")
            total += isotopes[key]
        else:
            total += masses[symbol]
        total += h_mass * mol.total_h(idx)
    return total
