"""Shared fixtures and graph-level helpers for the test suite."""
from __future__ import annotations

import random
from pathlib import Path

import networkx as nx
import pytest

from moltriad.chem import Molecule, parse_smiles
from moltriad.chem.mol import Bond

DATA = Path(__file__).parent / "data"


def load_list(name: str) -> list[str]:
    lines = (DATA / name).read_text(encoding="utf-8").splitlines()
    return [s.strip() for s in lines if s.strip() and not s.startswith("#")]


@pytest.fixture(scope="session")
def corpus() -> list[str]:
    return load_list("corpus.smi")


@pytest.fixture(scope="session")
def invalid_corpus() -> list[str]:
    return load_list("invalid.smi")


def permute_molecule(mol: Molecule, rng: random.Random) -> Molecule:
    """Rebuild the molecule with its atoms in a random order."""
    n = len(mol.atoms)
    perm = list(range(n))
    rng.shuffle(perm)          # perm[new] = old
    inverse = [0] * n
    for new, old in enumerate(perm):
        inverse[old] = new
    atoms = [mol.atoms[old] for old in perm]
    bonds = [Bond(inverse[b.a], inverse[b.b], b.order) for b in mol.bonds]
    rings = [[inverse[i] for i in ring] for ring in mol.rings]
    implicit = [mol.implicit_h[old] for old in perm]
    return Molecule(atoms=atoms, bonds=bonds, rings=rings, implicit_h=implicit)


def to_graph(mol: Molecule) -> nx.Graph:
    graph = nx.Graph()
    for idx, atom in enumerate(mol.atoms):
        graph.add_node(
            idx,
            element=atom.element,
            charge=atom.formal_charge,
            h=mol.total_h(idx),
            aromatic=atom.aromatic,
        )
    for bond in mol.bonds:
        graph.add_edge(bond.a, bond.b, order=bond.order)
    return graph


def isomorphic(a: Molecule, b: Molecule) -> bool:
    return nx.is_isomorphic(
        to_graph(a),
        to_graph(b),
        node_match=lambda x, y: x == y,
        edge_match=lambda x, y: x == y,
    )


def parse_corpus(smiles_list: list[str]) -> list[Molecule]:
    return [parse_smiles(s) for s in smiles_list]
