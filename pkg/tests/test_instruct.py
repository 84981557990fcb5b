"""Triplet IO, template filling, synthesis, and splitting tests."""
import json

import pytest

from moltriad.chem import parse_smiles
from moltriad.instruct import (
    CONSTRAINT_PROPERTIES,
    HeaderMismatch,
    MalformedRow,
    MissingConstraintProperty,
    TASKS,
    TooFewRecords,
    Triplet,
    UnknownProperty,
    fill_template,
    load_triplets,
    read_jsonl,
    save_triplets,
    split_dataset,
    synthesize_dataset,
    write_jsonl,
)
from moltriad.props import descriptor_vector


def make_triplet(smiles="CCO", caption="an alcohol"):
    vector = descriptor_vector(parse_smiles(smiles), list(CONSTRAINT_PROPERTIES))
    return Triplet(smiles=smiles, caption=caption, properties=vector)


class TestTripletIo:
    def test_round_trip(self, tmp_path):
        triplets = [make_triplet(), make_triplet("CCN", "an amine")]
        path = tmp_path / "t.csv"
        save_triplets(triplets, path)
        loaded = load_triplets(path)
        assert loaded == triplets

    def test_header_mismatch(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("foo,bar\n1,2\n")
        with pytest.raises(HeaderMismatch):
            load_triplets(path)

    def test_malformed_row_carries_line_number(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("smiles,text,TPSA\nCCO,ok,not-a-number\n")
        with pytest.raises(MalformedRow) as excinfo:
            load_triplets(path)
        assert "2" in str(excinfo.value)

    def test_invalid_smiles_skipped(self, tmp_path, caplog):
        path = tmp_path / "t.csv"
        path.write_text("smiles,text,TPSA\nCCO,ok,20.23\nbad(,nope,1.0\n")
        loaded = load_triplets(path)
        assert len(loaded) == 1


class TestTemplates:
    def test_mc_wording(self):
        record = fill_template("mc", make_triplet())
        assert record.instruction == "How to describe this molecule CCO?"
        assert record.response == "an alcohol"

    def test_tbmg_wording(self):
        record = fill_template("tbmg", make_triplet(caption="an alcohol."))
        assert record.instruction == (
            "Can you give a molecule SMILES and the molecule is an alcohol?"
        )
        assert record.response == "CCO"

    def test_mpp_wording_and_value(self):
        record = fill_template("mpp", make_triplet(), mpp_property="TPSA")
        assert record.instruction == (
            "Can you predict the specific TPSA values of the molecule? CCO"
        )
        assert record.response == "20.23"

    def test_mcmg_five_values(self):
        record = fill_template("mcmg", make_triplet())
        for name in CONSTRAINT_PROPERTIES:
            assert f"the value of {name} is " in record.instruction
        assert record.response == "CCO"

    def test_unknown_property(self):
        with pytest.raises(UnknownProperty):
            fill_template("mpp", make_triplet(), mpp_property="Nope")

    def test_missing_constraint_property(self):
        vector = descriptor_vector(parse_smiles("CCO"), ["TPSA"])
        bare = Triplet("CCO", "x", vector)
        with pytest.raises(MissingConstraintProperty):
            fill_template("mcmg", bare)


class TestSynthesis:
    def _triplets(self, n=12):
        smis = ["CCO", "CCN", "CC(=O)O", "c1ccccc1", "CCOC", "CCS",
                "C1CCCCC1", "c1ccncc1", "CC#N", "CCCl", "CC(C)O", "CSC"][:n]
        return [make_triplet(s, f"molecule {i}") for i, s in enumerate(smis)]

    def test_count_arithmetic(self):
        records = synthesize_dataset(self._triplets(), count=5, seed=1)
        assert len(records) == 5 * len(TASKS)

    def test_deterministic_per_seed(self):
        a = synthesize_dataset(self._triplets(), count=8, seed=3)
        b = synthesize_dataset(self._triplets(), count=8, seed=3)
        c = synthesize_dataset(self._triplets(), count=8, seed=4)
        assert a == b
        assert a != c

    def test_jsonl_round_trip(self, tmp_path):
        records = synthesize_dataset(self._triplets(), count=4, seed=0)
        path = tmp_path / "d.jsonl"
        write_jsonl(records, path)
        assert read_jsonl(path) == records
        first = json.loads(path.read_text().splitlines()[0])
        assert set(first) == {"task", "instruction", "response", "source_smiles"}

    def test_split_ratios(self):
        parts = split_dataset(list(range(100)), seed=2)
        assert len(parts.train) == 80
        assert len(parts.validation) == 10
        assert len(parts.test) == 10
        combined = set(parts.train) | set(parts.validation) | set(parts.test)
        assert combined == set(range(100))

    def test_split_too_few(self):
        with pytest.raises(TooFewRecords):
            split_dataset(list(range(9)))
