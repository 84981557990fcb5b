"""Descriptor, QED, and fingerprint tests."""
import math
import random

import pytest

from moltriad.chem import parse_smiles
from moltriad.props import (
    KindMismatch,
    UnknownDescriptorId,
    balaban_j,
    crippen_logp,
    descriptor_vector,
    default_registry_ids,
    ertl_tpsa,
    exact_mol_wt,
    fingerprint,
    num_aromatic_rings,
    num_h_acceptors,
    num_h_donors,
    num_rotatable_bonds,
    qed,
    tanimoto,
)

from .conftest import permute_molecule


class TestWeight:
    def test_water_free_molecules(self):
        assert exact_mol_wt(parse_smiles("C")) == pytest.approx(16.0313, abs=1e-3)
        assert exact_mol_wt(parse_smiles("CCO")) == pytest.approx(46.0419, abs=1e-3)

    def test_isotope_override(self):
        methane = exact_mol_wt(parse_smiles("C"))
        labeled = exact_mol_wt(parse_smiles("[13CH4]"))
        assert labeled > methane

    def test_charged_species(self):
        assert exact_mol_wt(parse_smiles("[O-]C(=O)C")) == pytest.approx(
            59.0133, abs=1e-2
        )


class TestTpsa:
    def test_benzene_zero(self):
        assert ertl_tpsa(parse_smiles("c1ccccc1")) == 0.0

    def test_known_contributions(self):
        # alcohol OH 20.23; carboxylic acid 17.07 + 20.23; pyridine N 12.89
        assert ertl_tpsa(parse_smiles("CCO")) == pytest.approx(20.23, abs=0.01)
        assert ertl_tpsa(parse_smiles("CC(=O)O")) == pytest.approx(37.30, abs=0.01)
        assert ertl_tpsa(parse_smiles("c1ccncc1")) == pytest.approx(12.89, abs=0.01)


class TestBalaban:
    def test_single_atom_zero(self):
        assert balaban_j(parse_smiles("C")) == 0.0

    def test_linear_alkane_reference(self):
        # RDKit BalabanJ for n-pentane
        assert balaban_j(parse_smiles("CCCCC")) == pytest.approx(2.1906, abs=1e-3)

    def test_benzene_reference(self):
        assert balaban_j(parse_smiles("c1ccccc1")) == pytest.approx(3.0, abs=1e-6)


class TestCrippen:
    def test_acetic_acid(self):
        assert crippen_logp(parse_smiles("CC(=O)O")) == pytest.approx(0.0909, abs=1e-3)

    def test_alkane_monotone_in_length(self):
        values = [crippen_logp(parse_smiles("C" * n)) for n in range(1, 6)]
        assert values == sorted(values)


class TestQed:
    def test_bounds(self, corpus):
        for smiles in corpus:
            value = qed(parse_smiles(smiles))
            assert 0.0 < value < 1.0

    def test_counts(self):
        mol = parse_smiles("OCC(O)CO")  # glycerol
        assert num_h_donors(mol) == 3
        assert num_h_acceptors(mol) == 3
        assert num_rotatable_bonds(mol) == 2
        assert num_aromatic_rings(parse_smiles("c1ccc2ccccc2c1")) == 2

    def test_pyridine_nitrogen_is_acceptor(self):
        assert num_h_acceptors(parse_smiles("c1ccncc1")) == 1

    def test_amide_nitrogen_not_acceptor(self):
        # acetamide: N adjacent to carbonyl, only the O accepts
        assert num_h_acceptors(parse_smiles("CC(=O)N")) == 1


class TestRegistry:
    def test_default_order(self):
        vector = descriptor_vector(parse_smiles("CCO"))
        assert list(vector.names) == list(default_registry_ids())

    def test_subset_registry(self):
        vector = descriptor_vector(parse_smiles("CCO"), ["TPSA", "QED"])
        assert vector.names == ("TPSA", "QED")

    def test_unknown_id(self):
        with pytest.raises(UnknownDescriptorId):
            descriptor_vector(parse_smiles("CCO"), ["NotADescriptor"])

    def test_values_finite(self, corpus):
        for smiles in corpus:
            for value in descriptor_vector(parse_smiles(smiles)).values:
                assert math.isfinite(value)


class TestFingerprints:
    @pytest.mark.parametrize("kind", ["morgan", "path", "maccs_lite"])
    def test_identity_tanimoto(self, kind):
        fp = fingerprint(parse_smiles("CCO"), kind)
        assert tanimoto(fp, fp) == 1.0

    @pytest.mark.parametrize("kind", ["morgan", "path", "maccs_lite"])
    def test_atom_order_invariance(self, corpus, kind):
        rng = random.Random(5)
        for smiles in corpus[:25]:
            mol = parse_smiles(smiles)
            shuffled = permute_molecule(mol, rng)
            assert fingerprint(mol, kind) == fingerprint(shuffled, kind), smiles

    def test_kind_mismatch(self):
        a = fingerprint(parse_smiles("CCO"), "morgan")
        b = fingerprint(parse_smiles("CCO"), "path")
        with pytest.raises(KindMismatch):
            tanimoto(a, b)

    def test_different_molecules_below_one(self):
        a = fingerprint(parse_smiles("CCO"), "morgan")
        b = fingerprint(parse_smiles("c1ccccc1"), "morgan")
        assert tanimoto(a, b) < 1.0
