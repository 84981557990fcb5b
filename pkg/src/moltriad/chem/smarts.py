"""Substructure matching for a defined SMARTS subset.

Supported: element primitives (aliphatic/aromatic symbols, ``#n``), ``*``,
``a``/``A``, charge, isotope, ``H``/``D``/``X`` counts, ring membership ``R``/``R0``,
ring size ``r<n>``, negation ``!``, conjunction (``&`` or juxtaposition),
disjunction ``,``, low-precedence conjunction ``;``, bond primitives
``- = # : ~`` plus the default single-or-aromatic bond, branches, and ring
closures.  Anything else raises :class:`UnsupportedSmartsFeature`.

Match counting is modulo pattern automorphisms: two embeddings that cover
the same set of molecule atoms count once.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import UnsupportedSmartsFeature
from .mol import AROMATIC, DOUBLE, ELEMENTS, SINGLE, TRIPLE, Molecule

# -- pattern structures ----------------------------------------------------

# primitive: (kind, value); atom expression: AND over ';'-terms, each term
# an OR-list of AND-lists of (negate, primitive); ';' binds weaker than ','
Primitive = tuple[str, object]
AndClause = list[tuple[bool, Primitive]]
OrTerm = list[AndClause]


@dataclass
class PatternAtom:
    terms: list[OrTerm] = field(default_factory=list)


@dataclass
class PatternBond:
    a: int
    b: int
    kind: str  # 'default' | 'single' | 'double' | 'triple' | 'aromatic' | 'any'


_TWO_CHAR = ("Cl", "Br", "Se", "Si", "Te", "As")
_ALIPHATIC_ONE = set("BCNOPSFI")
_AROMATIC_ONE = set("bcnops")
_BOND_KIND = {"-": "single", "=": "double", "#": "triple", ":": "aromatic", "~": "any"}


def _elem_atom(symbol: str) -> PatternAtom:
    aromatic = symbol[0].islower()
    number = ELEMENTS[symbol.capitalize()]
    clause = [(False, ("elem", number)), (False, ("arom", aromatic))]
    return PatternAtom(terms=[[clause]])


class _BracketParser:
    def __init__(self, body: str):
        self.body = body
        self.pos = 0

    def peek(self) -> str:
        return self.body[self.pos] if self.pos < len(self.body) else ""

    def take_int(self, default: int | None = None) -> int | None:
        digits = ""
        while self.peek().isdigit():
            digits += self.body[self.pos]
            self.pos += 1
        return int(digits) if digits else default

    def parse(self) -> PatternAtom:
        terms: list[OrTerm] = []
        clauses: OrTerm = []
        current: AndClause = []
        while self.pos < len(self.body):
            ch = self.peek()
            if ch == ";":
                self.pos += 1
                clauses.append(current)
                terms.append(clauses)
                clauses, current = [], []
                continue
            if ch == ",":
                self.pos += 1
                clauses.append(current)
                current = []
                continue
            if ch == "&":
                self.pos += 1
                continue
            negate = False
            if ch == "!":
                negate = True
                self.pos += 1
            current.append((negate, self.primitive()))
        clauses.append(current)
        terms.append(clauses)
        return PatternAtom(terms=terms)

    def primitive(self) -> Primitive:
        body, pos = self.body, self.pos
        ch = body[pos]
        if ch == "#":
            self.pos += 1
            num = self.take_int()
            if num is None:
                raise UnsupportedSmartsFeature(f"'#' without atomic number in [{body}]")
            return ("elemnum", num)
        if ch == "*":
            self.pos += 1
            return ("any", None)
        if ch == "a":
            self.pos += 1
            return ("arom", True)
        if ch == "A":
            self.pos += 1
            return ("arom", False)
        if ch == "H":
            self.pos += 1
            return ("hcount", self.take_int(1))
        if ch == "D":
            self.pos += 1
            return ("degree", self.take_int(1))
        if ch == "X":
            self.pos += 1
            return ("connections", self.take_int(1))
        if ch == "R":
            self.pos += 1
            count = self.take_int(None)
            if count == 0:
                return ("ring", False)
            return ("ring", True)
        if ch == "r":
            self.pos += 1
            size = self.take_int(None)
            if size is None:
                return ("ring", True)
            return ("ringsize", size)
        if ch.isdigit():
            return ("isotope", self.take_int())
        if ch in "+-":
            self.pos += 1
            mag = self.take_int(None)
            if mag is None:
                mag = 1
                while self.peek() == ch:
                    mag += 1
                    self.pos += 1
            return ("charge", mag if ch == "+" else -mag)
        m = re.match(r"[A-Z][a-z]?|[a-z]{1,2}", body[pos:])
        if m:
            token = m.group(0)
            for cand in (token, token[:1]):
                if cand.capitalize() in ELEMENTS and (
                    cand[0].isupper() or cand in _AROMATIC_ONE or cand in ("se", "te", "as")
                ):
                    self.pos += len(cand)
                    aromatic = cand[0].islower()
                    return tuple(["elemarom", (ELEMENTS[cand.capitalize()], aromatic)])  # type: ignore[return-value]
        raise UnsupportedSmartsFeature(f"primitive starting at {body[pos:]!r}")


def parse_smarts(pattern: str) -> tuple[list[PatternAtom], list[PatternBond]]:
    atoms: list[PatternAtom] = []
    bonds: list[PatternBond] = []
    prev: int | None = None
    pending: str | None = None
    stack: list[int | None] = []
    open_rings: dict[str, tuple[int, str | None]] = {}

    def add_bond(a: int, b: int, kind: str | None) -> None:
        bonds.append(PatternBond(a, b, kind if kind else "default"))

    i, n = 0, len(pattern)
    while i < n:
        ch = pattern[i]
        if ch == "[":
            end = pattern.find("]", i)
            if end < 0:
                raise UnsupportedSmartsFeature(f"unterminated bracket in {pattern!r}")
            body = pattern[i + 1 : end]
            if "$" in body:
                raise UnsupportedSmartsFeature("recursive SMARTS '$(...)'")
            atom = _BracketParser(body).parse()
            idx = len(atoms)
            atoms.append(atom)
            if prev is not None:
                add_bond(prev, idx, pending)
            prev, pending = idx, None
            i = end + 1
        elif pattern[i : i + 2] in _TWO_CHAR and pattern[i : i + 2][0].isupper():
            idx = len(atoms)
            atoms.append(_elem_atom(pattern[i : i + 2]))
            if prev is not None:
                add_bond(prev, idx, pending)
            prev, pending = idx, None
            i += 2
        elif ch in _ALIPHATIC_ONE or ch in _AROMATIC_ONE or ch in ("a", "A", "*"):
            idx = len(atoms)
            if ch == "*":
                atom = PatternAtom(terms=[[[(False, ("any", None))]]])
            elif ch == "a":
                atom = PatternAtom(terms=[[[(False, ("arom", True))]]])
            elif ch == "A":
                atom = PatternAtom(terms=[[[(False, ("arom", False))]]])
            else:
                atom = _elem_atom(ch)
            atoms.append(atom)
            if prev is not None:
                add_bond(prev, idx, pending)
            prev, pending = idx, None
            i += 1
        elif ch in _BOND_KIND:
            pending = _BOND_KIND[ch]
            i += 1
        elif ch == "(":
            stack.append(prev)
            i += 1
        elif ch == ")":
            if not stack:
                raise UnsupportedSmartsFeature("unbalanced ')' in pattern")
            prev = stack.pop()
            i += 1
        elif ch.isdigit() or ch == "%":
            if ch == "%":
                label = pattern[i + 1 : i + 3]
                i += 3
            else:
                label = ch
                i += 1
            if prev is None:
                raise UnsupportedSmartsFeature("ring closure before any atom")
            if label in open_rings:
                partner, opened = open_rings.pop(label)
                add_bond(prev, partner, pending if pending else opened)
            else:
                open_rings[label] = (prev, pending)
            pending = None
        else:
            raise UnsupportedSmartsFeature(f"character {ch!r}")
    if stack:
        raise UnsupportedSmartsFeature("unbalanced '(' in pattern")
    if open_rings:
        raise UnsupportedSmartsFeature("unmatched ring closure in pattern")
    if not atoms:
        raise UnsupportedSmartsFeature("empty pattern")
    return atoms, bonds


# -- evaluation ------------------------------------------------------------


def _eval_primitive(prim: Primitive, mol: Molecule, idx: int) -> bool:
    kind, value = prim
    atom = mol.atoms[idx]
    if kind == "any":
        return True
    if kind == "elem":
        return atom.element == value
    if kind == "elemnum":
        return atom.element == value
    if kind == "elemarom":
        number, aromatic = value  # type: ignore[misc]
        return atom.element == number and atom.aromatic == aromatic
    if kind == "arom":
        return atom.aromatic == value
    if kind == "hcount":
        return mol.total_h(idx) == value
    if kind == "degree":
        return mol.degree(idx) == value
    if kind == "connections":
        return mol.degree(idx) + mol.total_h(idx) == value
    if kind == "isotope":
        return (atom.isotope or 0) == value
    if kind == "charge":
        return atom.formal_charge == value
    if kind == "ring":
        return mol.in_ring(idx) == value
    if kind == "ringsize":
        return any(len(ring) == value and idx in ring for ring in mol.rings)
    raise UnsupportedSmartsFeature(kind)


def _atom_matches(patom: PatternAtom, mol: Molecule, idx: int) -> bool:
    return all(
        any(
            all(_eval_primitive(prim, mol, idx) != negate
                for negate, prim in clause)
            for clause in term
        )
        for term in patom.terms
    )


def _bond_matches(kind: str, order: str) -> bool:
    if kind == "any":
        return True
    if kind == "default":
        return order in (SINGLE, AROMATIC)
    return {"single": SINGLE, "double": DOUBLE, "triple": TRIPLE, "aromatic": AROMATIC}[
        kind
    ] == order


def find_matches(mol: Molecule, pattern: str) -> list[tuple[int, ...]]:
    """All embeddings of `pattern`, one representative per matched atom set."""
    patoms, pbonds = parse_smarts(pattern)
    adjacency: dict[int, list[tuple[int, str]]] = {i: [] for i in range(len(patoms))}
    for pb in pbonds:
        adjacency[pb.a].append((pb.b, pb.kind))
        adjacency[pb.b].append((pb.a, pb.kind))

    # visit pattern atoms in a connectivity-respecting order
    order: list[int] = []
    seen: set[int] = set()
    for root in range(len(patoms)):
        if root in seen:
            continue
        stack = [root]
        seen.add(root)
        while stack:
            cur = stack.pop()
            order.append(cur)
            for nb, _ in adjacency[cur]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)

    candidates = [
        [i for i in range(len(mol.atoms)) if _atom_matches(patoms[p], mol, i)]
        for p in range(len(patoms))
    ]

    images: set[frozenset[int]] = set()
    results: list[tuple[int, ...]] = []
    assignment: dict[int, int] = {}

    def backtrack(depth: int) -> None:
        if depth == len(order):
            image = frozenset(assignment.values())
            if image not in images:
                images.add(image)
                results.append(tuple(assignment[p] for p in range(len(patoms))))
            return
        patom = order[depth]
        for mol_idx in candidates[patom]:
            if mol_idx in assignment.values():
                continue
            ok = True
            for nb, kind in adjacency[patom]:
                if nb in assignment:
                    bond = mol.bond_between(mol_idx, assignment[nb])
                    if bond is None or not _bond_matches(kind, bond.order):
                        ok = False
                        break
            if ok:
                assignment[patom] = mol_idx
                backtrack(depth + 1)
                del assignment[patom]

    backtrack(0)
    return results


def match_smarts_subset(mol: Molecule, pattern: str) -> int:
    """Number of distinct substructure embeddings (automorphisms collapsed)."""
    return len(find_matches(mol, pattern))


def has_match(mol: Molecule, pattern: str) -> bool:
    return match_smarts_subset(mol, pattern) > 0
