"""Canonical SMILES output.

Canonical atom ranks come from iterative neighborhood-invariant refinement
(Morgan-style).  Remaining ties are broken deterministically by picking the
atom with the smallest original index inside the tied class and re-refining,
so the output depends only on the abstract graph for all molecules whose
symmetry the refinement resolves.
"""
from __future__ import annotations

import heapq
import math

from .mol import (
    AROMATIC,
    DEFAULT_VALENCES,
    DOUBLE,
    ORGANIC_SUBSET,
    SINGLE,
    TRIPLE,
    Molecule,
)

_BOND_KEY = {SINGLE: 1, AROMATIC: 2, DOUBLE: 3, TRIPLE: 4}
_BOND_CHAR = {SINGLE: "", AROMATIC: "", DOUBLE: "=", TRIPLE: "#"}


def _initial_invariants(mol: Molecule) -> list[tuple]:
    out = []
    for idx, atom in enumerate(mol.atoms):
        out.append(
            (
                atom.element,
                mol.degree(idx),
                atom.formal_charge,
                mol.total_h(idx),
                atom.aromatic,
                mol.in_ring(idx),
                atom.isotope or 0,
            )
        )
    return out


def _dense(values: list, keys: list) -> list[int]:
    order = sorted(range(len(values)), key=lambda i: keys[i])
    ranks = [0] * len(values)
    rank = 0
    for pos, idx in enumerate(order):
        if pos > 0 and keys[idx] != keys[order[pos - 1]]:
            rank = pos
        ranks[idx] = rank
    return ranks


def _refine(mol: Molecule, ranks: list[int]) -> list[int]:
    while True:
        signatures = []
        for idx in range(len(ranks)):
            neighborhood = sorted(
                (_BOND_KEY[bond.order], ranks[nb]) for nb, bond in mol.neighbors(idx)
            )
            signatures.append((ranks[idx], tuple(neighborhood)))
        new_ranks = _dense(ranks, signatures)
        if new_ranks == ranks:
            return ranks
        ranks = new_ranks


def canonical_ranks(mol: Molecule) -> list[int]:
    invariants = _initial_invariants(mol)
    ranks = _refine(mol, _dense(invariants, invariants))
    while True:
        classes: dict[int, list[int]] = {}
        for idx, r in enumerate(ranks):
            classes.setdefault(r, []).append(idx)
        tied = [members for members in classes.values() if len(members) > 1]
        if not tied:
            return ranks
        members = min(tied, key=min)
        chosen = min(members)
        # promote one member ahead of its class, then re-refine
        keys = [(ranks[i], 0 if i == chosen else 1) for i in range(len(ranks))]
        ranks = _refine(mol, _dense(ranks, keys))


def _default_h(mol: Molecule, idx: int) -> int:
    """Hydrogen count the parser would assign to the bare symbol."""
    atom = mol.atoms[idx]
    symbol = atom.symbol
    if symbol not in DEFAULT_VALENCES:
        return 0
    if atom.aromatic:
        used = sum(
            1.0 if bond.order in (SINGLE, AROMATIC) else bond.order_value
            for _, bond in mol.neighbors(idx)
        )
        if symbol == "C":
            return max(4 - 1 - int(used), 0)
        if symbol == "B":
            return max(3 - 1 - int(used), 0)
        return 0
    used = math.ceil(sum(bond.order_value for _, bond in mol.neighbors(idx)))
    for valence in DEFAULT_VALENCES[symbol]:
        if used <= valence:
            return valence - used
    return 0


def _atom_token(mol: Molecule, idx: int) -> str:
    atom = mol.atoms[idx]
    symbol = atom.symbol
    total_h = mol.total_h(idx)
    lower_ok = symbol in {"B", "C", "N", "O", "P", "S", "Se", "As", "Te"}
    body = symbol.lower() if (atom.aromatic and lower_ok) else symbol

    if (
        symbol in ORGANIC_SUBSET
        and atom.formal_charge == 0
        and atom.isotope is None
        and total_h == _default_h(mol, idx)
    ):
        return body

    parts = ["["]
    if atom.isotope is not None:
        parts.append(str(atom.isotope))
    parts.append(body)
    if total_h == 1:
        parts.append("H")
    elif total_h > 1:
        parts.append(f"H{total_h}")
    charge = atom.formal_charge
    if charge == 1:
        parts.append("+")
    elif charge == -1:
        parts.append("-")
    elif charge > 1:
        parts.append(f"+{charge}")
    elif charge < -1:
        parts.append(str(charge))
    parts.append("]")
    return "".join(parts)


def write_canonical_smiles(mol: Molecule) -> str:
    """Serialize a molecule; equal graphs yield equal strings."""
    ranks = canonical_ranks(mol)

    def nb_sorted(idx: int):
        return sorted(mol.neighbors(idx), key=lambda t: ranks[t[0]])

    def bond_char(order: str, a: int, b: int) -> str:
        if order == SINGLE and mol.atoms[a].aromatic and mol.atoms[b].aromatic:
            return "-"  # e.g. biphenyl: keep the inter-ring single bond visible
        return _BOND_CHAR[order]

    # spanning-tree DFS per component; non-tree bonds become ring closures
    tree_children: dict[int, list[int]] = {i: [] for i in range(len(mol.atoms))}
    parent: dict[int, int] = {}
    closure_set: set[tuple[int, int]] = set()
    visited: set[int] = set()
    roots: list[int] = []
    for comp in sorted(mol.components(), key=lambda c: min(ranks[i] for i in c)):
        root = min(comp, key=lambda i: ranks[i])
        roots.append(root)
        visited.add(root)
        stack = [root]
        while stack:
            cur = stack.pop()
            for nb, _ in reversed(nb_sorted(cur)):
                if nb not in visited:
                    visited.add(nb)
                    parent[nb] = cur
                    tree_children[cur].append(nb)
                    stack.append(nb)
                elif parent.get(cur) != nb and parent.get(nb) != cur:
                    closure_set.add((min(cur, nb), max(cur, nb)))
    for idx in tree_children:
        tree_children[idx].sort(key=lambda i: ranks[i])

    ring_labels: dict[tuple[int, int], int] = {}
    free_labels: list[int] = []
    next_label = [1]

    def take_label() -> int:
        if free_labels:
            return heapq.heappop(free_labels)
        label = next_label[0]
        next_label[0] += 1
        return label

    def closure_token(label: int) -> str:
        return str(label) if label < 10 else f"%{label:02d}"

    pieces: list[str] = []

    def emit(idx: int, parent: int | None) -> None:
        pieces.append(_atom_token(mol, idx))
        for nb, bond in nb_sorted(idx):
            key = (min(idx, nb), max(idx, nb))
            if key in closure_set:
                if key in ring_labels:
                    label = ring_labels.pop(key)
                    heapq.heappush(free_labels, label)
                    pieces.append(closure_token(label))
                else:
                    label = take_label()
                    ring_labels[key] = label
                    pieces.append(bond_char(bond.order, idx, nb) + closure_token(label))
        children = tree_children[idx]
        for pos, nb in enumerate(children):
            bond = mol.bond_between(idx, nb)
            branch = pos < len(children) - 1
            if branch:
                pieces.append("(")
            pieces.append(bond_char(bond.order, idx, nb))
            emit(nb, idx)
            if branch:
                pieces.append(")")

    out_parts = []
    for root in roots:
        pieces = []
        emit(root, None)
        out_parts.append("".join(pieces))
    return ".".join(out_parts)
