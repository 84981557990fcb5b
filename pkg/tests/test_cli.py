"""CLI subcommand tests run in-process through main()."""
import csv
import json

import pytest

from moltriad.cli import main
from moltriad.instruct import CONSTRAINT_PROPERTIES


@pytest.fixture()
def workdir(tmp_path):
    (tmp_path / "mols.smi").write_text(
        "CCO\nc1ccccc1\nCC(=O)O\nbad(\nCCN\nCCOC\nCCS\nC1CCCCC1\nCC#N\n"
        "c1ccncc1\nCC(C)O\nCSC\n"
    )
    (tmp_path / "caps.txt").write_text(
        "an alcohol\na benzene ring\nan acid\njunk\nan amine\nan ether\n"
        "a thiol\na carbocycle\na nitrile\npyridine\nisopropanol\na sulfide\n"
    )
    return tmp_path


def test_version_lists_tables(capsys):
    assert main(["--version"]) == 0
    out = capsys.readouterr().out
    for table in ("masses.txt", "tpsa.txt", "crippen.txt", "qed_params.txt"):
        assert table in out


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        main(["frobnicate"])


def test_parse_writes_canonical(workdir):
    out = workdir / "canon.smi"
    assert main(["parse", "--in", str(workdir / "mols.smi"),
                 "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 11  # one invalid input skipped


def test_props_csv_shape(workdir):
    out = workdir / "props.csv"
    assert main(["props", "--in", str(workdir / "mols.smi"),
                 "--out", str(out)]) == 0
    rows = list(csv.reader(out.open()))
    assert rows[0][0] == "smiles"
    assert len(rows) == 12  # header + 11 valid molecules
    # 4-decimal formatting
    assert all("." in cell and len(cell.split(".")[1]) == 4
               for cell in rows[1][1:])


def test_pipeline_synth_split(workdir):
    trip = workdir / "trip.csv"
    data = workdir / "data.jsonl"
    assert main(["gen-triplets", "--in", str(workdir / "mols.smi"),
                 "--captions", str(workdir / "caps.txt"),
                 "--out", str(trip)]) == 0
    assert main(["synth", "--triplets", str(trip), "--count", "5",
                 "--seed", "7", "--out", str(data)]) == 0
    records = [json.loads(l) for l in data.read_text().splitlines()]
    assert len(records) == 20  # 4 tasks x count 5
    assert main(["split", "--records", str(data), "--seed", "7",
                 "--out-prefix", str(workdir / "data")]) == 0
    n_train = len((workdir / "data.train.jsonl").read_text().splitlines())
    assert n_train == 16


def test_synth_deterministic(workdir):
    trip = workdir / "trip.csv"
    main(["gen-triplets", "--in", str(workdir / "mols.smi"),
          "--captions", str(workdir / "caps.txt"), "--out", str(trip)])
    a, b = workdir / "a.jsonl", workdir / "b.jsonl"
    for out in (a, b):
        main(["synth", "--triplets", str(trip), "--count", "6",
              "--seed", "3", "--out", str(out)])
    assert a.read_bytes() == b.read_bytes()


def test_eval_caption(workdir, capsys):
    pred = workdir / "pred.txt"
    ref = workdir / "ref.txt"
    pred.write_text("an alcohol\n")
    ref.write_text("an alcohol\n")
    assert main(["eval", "--task", "caption", "--pred", str(pred),
                 "--ref", str(ref), "--report", "md"]) == 0
    out = capsys.readouterr().out
    assert "BLEU-4" in out and "1.000" in out


def test_eval_multiconstraint(workdir, capsys):
    cons = workdir / "cons.csv"
    gen = workdir / "gen.smi"
    main(["props", "--in", str(workdir / "mols.smi"),
          "--out", str(workdir / "props.csv")])
    rows = list(csv.DictReader((workdir / "props.csv").open()))[:4]
    with cons.open("w", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(list(CONSTRAINT_PROPERTIES))
        for row in rows:
            writer.writerow([row[n] for n in CONSTRAINT_PROPERTIES])
    gen.write_text("".join(r["smiles"] + "\n" for r in rows))
    assert main(["eval", "--task", "multiconstraint", "--pred", str(gen),
                 "--constraints", str(cons), "--report", "csv"]) == 0
    assert "Invalidity" in capsys.readouterr().out


def test_config_file_flags_win(workdir):
    config = workdir / "run.cfg"
    config.write_text("count = 2\nseed = 5\n")
    trip = workdir / "trip.csv"
    main(["gen-triplets", "--in", str(workdir / "mols.smi"),
          "--captions", str(workdir / "caps.txt"), "--out", str(trip)])
    out = workdir / "cfg.jsonl"
    assert main(["synth", "--triplets", str(trip), "--config", str(config),
                 "--count", "3", "--out", str(out)]) == 0
    # flag --count 3 beats the file's 2; seed 5 comes from the file
    assert len(out.read_text().splitlines()) == 12


def test_missing_file_nonzero_exit():
    assert main(["props", "--in", "/nonexistent.smi", "--out", "/tmp/x.csv"]) == 1
