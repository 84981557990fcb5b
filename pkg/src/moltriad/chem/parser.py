"""SMILES parser: token stream -> attributed molecular graph.

Parsing covers branches, ring closures (including %nn), dots, charges,
isotopes, bracket hydrogen counts, and stereo marks (accepted and stored,
never interpreted).  After graph construction the parser perceives rings
(smallest set of smallest rings), assigns aromaticity by a Hueckel
4n+2 electron count over candidate rings, and fills implicit hydrogens to
the default valence of each organic-subset atom.
"""
from __future__ import annotations

import re

import networkx as nx

from .errors import (
    AromaticPerceptionError,
    IllegalCharacter,
    SmilesError,
    UnclosedRing,
    UnmatchedParenthesis,
    ValenceError,
)
from .mol import (
    AROMATIC,
    DEFAULT_VALENCES,
    DOUBLE,
    ELEMENTS,
    ORGANIC_SUBSET,
    SINGLE,
    TRIPLE,
    Atom,
    Bond,
    Molecule,
)
from .tokenizer import ATOM, BOND, CLOSE, DOT, OPEN, RING, Token, tokenize_smiles

_BOND_FROM_CHAR = {
    "-": SINGLE,
    "=": DOUBLE,
    "#": TRIPLE,
    ":": AROMATIC,
    "/": SINGLE,   # directional marks degrade to plain single bonds
    "\\": SINGLE,
}

_BRACKET_RE = re.compile(
    r"""\[
        (?P<isotope>\d+)?
        (?P<symbol>[A-Z][a-z]?|[a-z]{1,2}|\*)
        (?P<stereo>@{1,2})?
        (?P<hcount>H\d*)?
        (?P<charge>\+\d+|-\d+|\++|-+)?
        (?::\d+)?
    \]$""",
    re.VERBOSE,
)


def _parse_bracket(lexeme: str, position: int) -> Atom:
    m = _BRACKET_RE.match(lexeme)
    if not m:
        raise IllegalCharacter(lexeme, position)
    raw_symbol = m.group("symbol")
    if raw_symbol == "*":
        raise IllegalCharacter("*", position)
    aromatic = raw_symbol[0].islower()
    symbol = raw_symbol.capitalize()
    if symbol not in ELEMENTS:
        raise IllegalCharacter(raw_symbol, position)
    hcount = 0
    if m.group("hcount"):
        digits = m.group("hcount")[1:]
        hcount = int(digits) if digits else 1
    charge = 0
    if m.group("charge"):
        token = m.group("charge")
        if token.lstrip("+-").isdigit() and len(token.lstrip("+-")) > 0:
            charge = int(token)
        else:
            charge = len(token) if token[0] == "+" else -len(token)
    isotope = int(m.group("isotope")) if m.group("isotope") else None
    return Atom(
        element=ELEMENTS[symbol],
        formal_charge=charge,
        isotope=isotope,
        explicit_h=hcount,
        aromatic=aromatic,
        bracket=True,
        stereo=m.group("stereo"),
    )


def _parse_plain_atom(lexeme: str) -> Atom:
    aromatic = lexeme[0].islower()
    return Atom(element=ELEMENTS[lexeme.capitalize()], aromatic=aromatic)


def _build_graph(tokens: list[Token]) -> Molecule:
    mol = Molecule()
    prev: int | None = None
    pending_bond: str | None = None
    branch_stack: list[tuple[int | None, Token]] = []
    open_rings: dict[str, tuple[int, str | None]] = {}

    def add_bond(a: int, b: int, order: str | None) -> None:
        if order is None:
            aa, ab = mol.atoms[a], mol.atoms[b]
            order = AROMATIC if (aa.aromatic and ab.aromatic) else SINGLE
        if a == b or any({bd.a, bd.b} == {a, b} for bd in mol.bonds):
            raise SmilesError(f"duplicate or self bond between atoms {a} and {b}")
        mol.bonds.append(Bond(a, b, order))

    expect_atom = False  # set after a dot: next token must start a component
    for token in tokens:
        if token.kind == ATOM:
            expect_atom = False
            if token.lexeme.startswith("["):
                atom = _parse_bracket(token.lexeme, token.position)
            else:
                atom = _parse_plain_atom(token.lexeme)
            idx = len(mol.atoms)
            mol.atoms.append(atom)
            if prev is not None:
                add_bond(prev, idx, pending_bond)
            prev = idx
            pending_bond = None
        elif token.kind == BOND:
            if prev is None:
                raise SmilesError(
                    f"bond symbol with no preceding atom at {token.position}"
                )
            if pending_bond is not None:
                raise SmilesError(f"doubled bond symbol at {token.position}")
            pending_bond = _BOND_FROM_CHAR[token.lexeme]
        elif token.kind == OPEN:
            branch_stack.append((prev, token))
        elif token.kind == CLOSE:
            if not branch_stack:
                raise UnmatchedParenthesis(token.position)
            prev, _ = branch_stack.pop()
        elif token.kind == RING:
            if prev is None:
                raise SmilesError(f"ring closure before any atom at {token.position}")
            label = token.lexeme.lstrip("%")
            if label in open_rings:
                partner, opened_order = open_rings.pop(label)
                order = pending_bond if pending_bond is not None else opened_order
                add_bond(prev, partner, order)
                pending_bond = None
            else:
                open_rings[label] = (prev, pending_bond)
                pending_bond = None
        elif token.kind == DOT:
            if prev is None or pending_bond is not None or expect_atom:
                raise SmilesError(f"misplaced dot at {token.position}")
            prev = None
            expect_atom = True

    if branch_stack:
        raise UnmatchedParenthesis(branch_stack[-1][1].position)
    if open_rings:
        raise UnclosedRing(open_rings.keys())
    if pending_bond is not None:
        raise SmilesError("dangling bond symbol at end of input")
    if expect_atom:
        raise SmilesError("trailing dot at end of input")
    if not mol.atoms:
        raise SmilesError("no atoms in input")
    return mol


# -- ring perception -------------------------------------------------------


def _order_cycle(nodes: set[int], mol: Molecule) -> list[int]:
    """Arrange a cycle-basis node set into an actual bond-graph cycle."""
    start = min(nodes)
    path = [start]
    seen = {start}

    def extend(current: int) -> list[int] | None:
        if len(path) == len(nodes):
            if mol.bond_between(current, start):
                return list(path)
            return None
        for nb, _ in mol.neighbors(current):
            if nb in nodes and nb not in seen:
                path.append(nb)
                seen.add(nb)
                found = extend(nb)
                if found:
                    return found
                path.pop()
                seen.remove(nb)
        return None

    ordered = extend(start)
    return ordered if ordered else sorted(nodes)


def perceive_rings(mol: Molecule) -> None:
    graph = nx.Graph()
    graph.add_nodes_from(range(len(mol.atoms)))
    graph.add_edges_from((b.a, b.b) for b in mol.bonds)
    basis = nx.minimum_cycle_basis(graph)
    rings = [_order_cycle(set(cycle), mol) for cycle in basis]
    mol.rings = sorted(rings, key=lambda r: (len(r), r))


# -- implicit hydrogens ----------------------------------------------------


def _explicit_valence(mol: Molecule, idx: int) -> float:
    return sum(bond.order_value for _, bond in mol.neighbors(idx))


def assign_implicit_hydrogens(mol: Molecule) -> None:
    import math

    mol.implicit_h = [0] * len(mol.atoms)
    for idx, atom in enumerate(mol.atoms):
        if atom.bracket:
            # hydrogens are explicit, but the total must still fit a valence
            symbol = atom.symbol
            if symbol in DEFAULT_VALENCES:
                # aromatic bonds count one slot each here; the pi system is
                # shared and must not push e.g. pyrrole [nH] over valence
                used = sum(
                    1 if bond.order in (SINGLE, AROMATIC) else int(bond.order_value)
                    for _, bond in mol.neighbors(idx)
                ) + atom.explicit_h
                ceiling = max(DEFAULT_VALENCES[symbol]) + abs(atom.formal_charge)
                if used > ceiling:
                    raise ValenceError(idx, used)
            continue
        symbol = atom.symbol
        if symbol not in ORGANIC_SUBSET:
            continue
        if atom.aromatic:
            # one valence slot is consumed by the delocalized pi system
            used = sum(
                1.0 if bond.order in (SINGLE, AROMATIC) else bond.order_value
                for _, bond in mol.neighbors(idx)
            )
            if used > 4:
                raise ValenceError(idx, used)
            if symbol == "C":
                h = 4 - 1 - int(used)
            elif symbol == "B":
                h = 3 - 1 - int(used)
            else:
                h = 0  # aromatic N/O/S/P need brackets to carry hydrogens
            mol.implicit_h[idx] = max(h, 0)
        else:
            used = math.ceil(_explicit_valence(mol, idx))
            permitted = tuple(
                v + abs(atom.formal_charge) for v in DEFAULT_VALENCES[symbol]
            )
            for valence in permitted:
                if used <= valence:
                    mol.implicit_h[idx] = valence - used
                    break
            else:
                raise ValenceError(idx, used)


# -- aromaticity -----------------------------------------------------------


def _pi_electrons(mol: Molecule, idx: int, ring: list[int]) -> int | None:
    """Hueckel pi-electron contribution of a ring atom, or None if sp3."""
    atom = mol.atoms[idx]
    ring_set = set(ring)
    exo_double = endo_double = other_ring_double = False
    for nb, bond in mol.neighbors(idx):
        if bond.order == TRIPLE:
            return None
        if bond.order == DOUBLE:
            if nb in ring_set:
                endo_double = True
            elif mol.bond_in_ring(bond):
                other_ring_double = True
            else:
                exo_double = True

    if exo_double:
        # exocyclic double bond: carbon donates its pi electron outward
        return 0 if atom.element == 6 else 1
    if endo_double or other_ring_double:
        return 1

    degree = mol.degree(idx)
    h = mol.total_h(idx)
    elem = atom.element
    charge = atom.formal_charge
    if elem == 6:
        if atom.aromatic:
            return 1
        if charge == -1:
            return 2
        if charge == 1:
            return 0
        return None  # saturated neutral carbon cannot be aromatic
    if elem in (7, 15):  # N, P
        if charge == 1:
            return 1 if degree + h == 3 else None
        if degree == 3 or h >= 1:
            return 2  # pyrrole-type lone pair
        return 1 if atom.aromatic else 2
    if elem in (8, 16, 34, 52):  # O, S, Se, Te
        return 2
    if elem == 5:  # boron: empty p orbital
        return 0
    return None


def perceive_aromaticity(mol: Molecule) -> None:
    changed = True
    aromatic_rings: set[int] = set()
    while changed:
        changed = False
        for ring_index, ring in enumerate(mol.rings):
            if ring_index in aromatic_rings:
                continue
            contributions = [_pi_electrons(mol, idx, ring) for idx in ring]
            if any(c is None for c in contributions):
                continue
            total = sum(contributions)  # type: ignore[arg-type]
            if total >= 2 and (total - 2) % 4 == 0:
                aromatic_rings.add(ring_index)
                for idx in ring:
                    if not mol.atoms[idx].aromatic:
                        mol.with_atom(idx, aromatic=True)
                changed = True

    # flip ring bonds between aromatic-ring members to aromatic order
    for ring_index in aromatic_rings:
        ring = mol.rings[ring_index]
        n = len(ring)
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            for bi, bond in enumerate(mol.bonds):
                if {bond.a, bond.b} == {a, b} and bond.order != AROMATIC:
                    mol.bonds[bi] = Bond(bond.a, bond.b, AROMATIC)
    mol._neighbors = None

    aromatic_atoms = {idx for ri in aromatic_rings for idx in mol.rings[ri]}
    for idx, atom in enumerate(mol.atoms):
        if atom.aromatic and idx not in aromatic_atoms:
            raise AromaticPerceptionError(idx)


def parse_smiles(text: str) -> Molecule:
    """Parse a SMILES string into a fully perceived :class:`Molecule`."""
    tokens = tokenize_smiles(text)
    mol = _build_graph(tokens)
    perceive_rings(mol)
    assign_implicit_hydrogens(mol)
    perceive_aromaticity(mol)
    return mol


def is_valid_smiles(text: str) -> bool:
    try:
        parse_smiles(text)
    except (ValueError, RecursionError):
        return False
    return True
