"""Parser, canonicalization, and SMARTS matcher tests."""
import random

import pytest

from moltriad.chem import (
    AROMATIC,
    DOUBLE,
    SINGLE,
    SmilesError,
    UnsupportedSmartsFeature,
    is_valid_smiles,
    parse_smiles,
    tokenize_smiles,
    write_canonical_smiles,
)
from moltriad.chem.smarts import find_matches, has_match, match_smarts_subset

from .conftest import isomorphic, permute_molecule


class TestParser:
    def test_ethanol(self):
        mol = parse_smiles("CCO")
        assert [a.element for a in mol.atoms] == [6, 6, 8]
        assert mol.total_h(0) == 3
        assert mol.total_h(2) == 1

    def test_benzene_is_aromatic(self):
        mol = parse_smiles("c1ccccc1")
        assert all(a.aromatic for a in mol.atoms)
        assert all(b.order == AROMATIC for b in mol.bonds)
        assert len(mol.rings) == 1

    def test_kekule_benzene_perceived_aromatic(self):
        mol = parse_smiles("C1=CC=CC=C1")
        assert all(a.aromatic for a in mol.atoms)

    def test_cyclohexane_not_aromatic(self):
        mol = parse_smiles("C1CCCCC1")
        assert not any(a.aromatic for a in mol.atoms)

    def test_charges_and_isotopes(self):
        mol = parse_smiles("[13CH4]")
        assert mol.atoms[0].isotope == 13
        mol = parse_smiles("[O-]C(=O)C")
        assert mol.atoms[0].formal_charge == -1

    def test_branches_and_rings(self):
        mol = parse_smiles("CC(C)(C)O")
        assert mol.degree(1) == 4
        mol = parse_smiles("C1CC2CCC1CC2")
        assert len(mol.atoms) == 8

    def test_dot_disconnects(self):
        mol = parse_smiles("CC.O")
        assert len(mol.components()) == 2

    def test_invalid_corpus_rejected(self, invalid_corpus):
        accepted = [s for s in invalid_corpus if is_valid_smiles(s)]
        assert accepted == []

    def test_corpus_parses(self, corpus):
        for smiles in corpus:
            parse_smiles(smiles)

    @pytest.mark.parametrize("bad", ["=C", "CC=", "C##C", "C..C", ".C", "C."])
    def test_malformed_bond_and_dot(self, bad):
        with pytest.raises(SmilesError):
            parse_smiles(bad)

    @pytest.mark.parametrize("bad", ["[CH5]", "[OH3]", "C(C)(C)(C)(C)C"])
    def test_valence_rejects(self, bad):
        assert not is_valid_smiles(bad)


class TestCanonical:
    def test_round_trip_isomorphism(self, corpus):
        for smiles in corpus:
            mol = parse_smiles(smiles)
            reparsed = parse_smiles(write_canonical_smiles(mol))
            assert isomorphic(mol, reparsed), smiles

    def test_idempotent(self, corpus):
        for smiles in corpus:
            canon = write_canonical_smiles(parse_smiles(smiles))
            assert write_canonical_smiles(parse_smiles(canon)) == canon

    def test_permutation_invariance(self, corpus):
        rng = random.Random(11)
        for smiles in corpus:
            mol = parse_smiles(smiles)
            canon = write_canonical_smiles(mol)
            for _ in range(5):
                shuffled = permute_molecule(mol, rng)
                assert write_canonical_smiles(shuffled) == canon, smiles

    def test_known_equivalent_inputs(self):
        pairs = [
            ("OCC", "CCO"),
            ("C1=CC=CC=C1", "c1ccccc1"),
            ("C(C)(C)C", "CC(C)C"),
        ]
        for a, b in pairs:
            assert write_canonical_smiles(parse_smiles(a)) == \
                write_canonical_smiles(parse_smiles(b))


class TestSmarts:
    def test_hydroxyl(self):
        assert match_smarts_subset(parse_smiles("CCO"), "[OX2H]") == 1
        assert match_smarts_subset(parse_smiles("CC(=O)C"), "[OX2H]") == 0

    def test_aromatic_carbon_count(self):
        assert match_smarts_subset(parse_smiles("c1ccccc1"), "c") == 6

    def test_or_and_semicolon_precedence(self):
        # [#7,#8;r3]: (N or O) AND in a 3-ring
        assert has_match(parse_smiles("C1CO1"), "[#7,#8;r3]")
        assert not has_match(parse_smiles("CCO"), "[#7,#8;r3]")
        assert not has_match(parse_smiles("C1CC1"), "[#7,#8;r3]")

    def test_negation(self):
        assert match_smarts_subset(parse_smiles("CCO"), "[!#6]") == 1

    def test_bond_patterns(self):
        assert has_match(parse_smiles("C=C"), "C=C")
        assert not has_match(parse_smiles("CC"), "C=C")
        assert has_match(parse_smiles("CC#N"), "C#N")

    def test_match_counting_modulo_automorphism(self):
        # symmetric pattern on a symmetric molecule counts each atom set once
        assert match_smarts_subset(parse_smiles("CC"), "CC") == 1

    def test_isotope_primitive(self):
        assert has_match(parse_smiles("[13CH4]"), "[!0*]")
        assert not has_match(parse_smiles("C"), "[!0*]")

    def test_recursive_smarts_unsupported(self):
        with pytest.raises(UnsupportedSmartsFeature):
            find_matches(parse_smiles("CCO"), "[$(CO)]")


class TestTokenizer:
    def test_two_letter_elements(self):
        lexemes = [t.lexeme for t in tokenize_smiles("CClBr")]
        assert lexemes == ["C", "Cl", "Br"]

    def test_ring_percent(self):
        kinds = {t.lexeme for t in tokenize_smiles("C%12CCC%12")}
        assert "%12" in kinds
