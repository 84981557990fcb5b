"""Command-line entry point wiring the pipeline modules together."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from . import align, evalh, instruct, props
from .chem import SmilesError, parse_smiles, write_canonical_smiles

log = logging.getLogger("moltriad")


class ConfigError(ValueError):
    pass


def _read_config(path: str) -> dict[str, str]:
    """Key-value config file: `key = value` lines, # comments."""
    values: dict[str, str] = {}
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"config: {exc}") from exc
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"config: malformed line {raw!r}")
        key, _, value = line.partition("=")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _merge_config(args: argparse.Namespace, parser: argparse.ArgumentParser):
    """File values fill in flags the user did not pass; flags win."""
    if not getattr(args, "config", None):
        return
    file_values = _read_config(args.config)
    for key, value in file_values.items():
        if not hasattr(args, key):
            raise ConfigError(f"config: unknown field {key!r}")
        if getattr(args, key) is None:
            setattr(args, key, value)


def _echo_config(args: argparse.Namespace) -> None:
    resolved = {
        k: v for k, v in sorted(vars(args).items())
        if k not in {"func"} and v is not None
    }
    for key, value in resolved.items():
        log.info("config %s = %s", key, value)


def _read_lines(path: str) -> list[str]:
    return Path(path).read_text(encoding="utf-8").splitlines()


# -- subcommands -----------------------------------------------------------


def _cmd_parse(args) -> int:
    out = []
    skipped = 0
    for smiles in _read_lines(args.infile):
        if not smiles.strip():
            continue
        try:
            out.append(write_canonical_smiles(parse_smiles(smiles.strip())))
        except SmilesError as exc:
            log.warning("skipping %r: %s", smiles, exc)
            skipped += 1
    text = "\n".join(out) + ("\n" if out else "")
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    log.info("parsed %d molecules, skipped %d", len(out), skipped)
    return 0


def _cmd_props(args) -> int:
    registry = None
    if args.manifest:
        registry = [
            line.strip() for line in _read_lines(args.manifest)
            if line.strip() and not line.startswith("#")
        ]
    names = registry or list(props.default_registry_ids())
    rows = []
    for smiles in _read_lines(args.infile):
        if not smiles.strip():
            continue
        try:
            mol = parse_smiles(smiles.strip())
        except SmilesError as exc:
            log.warning("skipping %r: %s", smiles, exc)
            continue
        vector = props.descriptor_vector(mol, registry)
        rows.append([smiles.strip()] + [f"{v:.4f}" for v in vector.values])
    with open(args.out, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["smiles", *names])
        writer.writerows(rows)
    log.info("wrote %d property rows to %s", len(rows), args.out)
    return 0


def _cmd_gen_triplets(args) -> int:
    smiles_list = [s.strip() for s in _read_lines(args.infile) if s.strip()]
    triplets, skipped = align.synthesize_triplets(
        smiles_list, caption_source="file", caption_file=args.captions
    )
    instruct.save_triplets(triplets, args.out)
    log.info("wrote %d triplets (%d skipped) to %s", len(triplets), skipped,
             args.out)
    return 0


def _cmd_train_align(args) -> int:
    triplets = instruct.load_triplets(args.triplets)
    cfg = align.TrainConfig(
        epochs=int(args.epochs),
        batch_size=int(args.batch_size),
        lr=float(args.lr),
        tau=float(args.tau),
        alpha=float(args.alpha),
        beta=float(args.beta),
        seed=int(args.seed),
    )
    result = align.train(triplets, cfg)
    for epoch, breakdown in enumerate(result.history, start=1):
        log.info("epoch %d total loss %.4f", epoch, breakdown.total)
    if args.out:
        align.save_checkpoint(result, result.model.binner, args.out)
        log.info("checkpoint written to %s", args.out)
    return 0


def _cmd_synth(args) -> int:
    triplets = instruct.load_triplets(args.triplets)
    tasks = tuple(t.strip() for t in args.tasks.split(","))
    records = instruct.synthesize_dataset(
        triplets, tasks=tasks, count=int(args.count), seed=int(args.seed)
    )
    instruct.write_jsonl(records, args.out)
    log.info("wrote %d records to %s", len(records), args.out)
    return 0


def _cmd_split(args) -> int:
    records = instruct.read_jsonl(args.records)
    parts = instruct.split_dataset(list(range(len(records))), seed=int(args.seed))
    prefix = Path(args.out_prefix)
    for name, ids in (
        ("train", parts.train), ("valid", parts.validation), ("test", parts.test)
    ):
        instruct.write_jsonl(
            [records[i] for i in ids], f"{prefix}.{name}.jsonl"
        )
        log.info("%s split: %d records", name, len(ids))
    return 0


def _load_constraints(path: str) -> list[evalh.ConstraintSpec]:
    names = instruct.CONSTRAINT_PROPERTIES
    specs = []
    with open(path, newline="", encoding="utf-8") as handle:
        reader = csv.DictReader(handle)
        missing = [n for n in names if n not in (reader.fieldnames or [])]
        if missing:
            raise ConfigError(f"constraints file missing columns: {missing}")
        for row in reader:
            specs.append(
                evalh.ConstraintSpec({n: float(row[n]) for n in names})
            )
    return specs


def _cmd_eval(args) -> int:
    if args.task == "caption":
        report = evalh.eval_caption(_read_lines(args.pred), _read_lines(args.ref))
    elif args.task == "molgen":
        report = evalh.molgen_metrics(
            [s.strip() for s in _read_lines(args.pred)],
            [s.strip() for s in _read_lines(args.ref)],
        )
    elif args.task == "proppred":
        predicted = [float(v) for v in _read_lines(args.pred) if v.strip()]
        truth = []
        with open(args.ref, newline="", encoding="utf-8") as handle:
            for row in csv.DictReader(handle):
                truth.append(float(row["value"]))
        rmse, r2 = evalh.regression_metrics(predicted, truth)
        report = evalh.MetricReport(
            task="proppred", metrics={"RMSE": rmse, "R2": r2},
            evaluated=len(truth),
        )
    elif args.task == "multiconstraint":
        if not args.constraints:
            raise ConfigError("--constraints is required for multiconstraint")
        report = evalh.eval_multiconstraint(
            _load_constraints(args.constraints),
            [s.strip() for s in _read_lines(args.pred)],
        )
    else:
        raise ConfigError(f"unknown eval task {args.task!r}")
    fmt = "markdown" if args.report == "md" else "csv"
    rendered = evalh.render_report([report], fmt)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    if args.json:
        blob = {
            "task": report.task,
            "metrics": report.metrics,
            "evaluated": report.evaluated,
            "skipped": report.skipped,
            "notes": list(report.notes),
        }
        Path(args.json).write_text(
            json.dumps(blob, indent=2) + "\n", encoding="utf-8"
        )
    return 0


def _cmd_report(args) -> int:
    reports = []
    for path in args.inputs:
        blob = json.loads(Path(path).read_text(encoding="utf-8"))
        reports.append(
            evalh.MetricReport(
                task=blob["task"], metrics=blob["metrics"],
                evaluated=blob["evaluated"], skipped=blob.get("skipped", 0),
                notes=tuple(blob.get("notes", [])),
            )
        )
    fmt = "markdown" if args.format == "md" else "csv"
    rendered = evalh.render_report(reports, fmt)
    if args.out:
        Path(args.out).write_text(rendered, encoding="utf-8")
    else:
        sys.stdout.write(rendered)
    return 0


# -- argument parsing ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moltriad",
        description="Molecule parsing, descriptors, alignment training, "
        "instruction-data synthesis, and evaluation.",
    )
    parser.add_argument(
        "--version", action="store_true", help="print data-table versions"
    )
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--config", help="key-value config file; flags win")
        p.add_argument("--seed", default=None)

    p = sub.add_parser("parse", help="canonicalize a SMILES file")
    common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_parse)

    p = sub.add_parser("props", help="compute descriptor CSV")
    common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--manifest", help="registry manifest (one id per line)")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_props)

    p = sub.add_parser("gen-triplets", help="build triplets from SMILES + captions")
    common(p)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--captions", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_gen_triplets)

    p = sub.add_parser("train-align", help="train the toy alignment model")
    common(p)
    p.add_argument("--triplets", required=True)
    p.add_argument("--epochs", default=None)
    p.add_argument("--batch-size", default=None)
    p.add_argument("--lr", default=None)
    p.add_argument("--tau", default=None)
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default=None)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_train_align)

    p = sub.add_parser("synth", help="synthesize instruction records")
    common(p)
    p.add_argument("--triplets", required=True)
    p.add_argument("--tasks", default=None)
    p.add_argument("--count", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_synth)

    p = sub.add_parser("split", help="8:1:1 split of a JSONL dataset")
    common(p)
    p.add_argument("--records", required=True)
    p.add_argument("--out-prefix", required=True)
    p.set_defaults(func=_cmd_split)

    p = sub.add_parser("eval", help="score prediction files")
    common(p)
    p.add_argument(
        "--task", required=True,
        choices=["caption", "molgen", "proppred", "multiconstraint"],
    )
    p.add_argument("--pred", required=True)
    p.add_argument("--ref")
    p.add_argument("--constraints")
    p.add_argument("--report", default="md", choices=["md", "csv"])
    p.add_argument("--out")
    p.add_argument("--json", help="also save the report as JSON")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("report", help="render saved JSON reports as one table")
    common(p)
    p.add_argument("--in", dest="inputs", nargs="+", required=True)
    p.add_argument("--format", default="md", choices=["md", "csv"])
    p.add_argument("--out")
    p.set_defaults(func=_cmd_report)

    return parser


_DEFAULTS = {
    "seed": "0",
    "epochs": "30",
    "batch_size": "16",
    "lr": "1e-3",
    "tau": "0.07",
    "alpha": "1.0",
    "beta": "5.0",
    "tasks": ",".join(instruct.TASKS),
    "count": "0",
}


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.version:
        for name, digest in sorted(props.data_versions().items()):
            print(f"{name}\t{digest}")
        return 0
    if not args.command:
        parser.print_help()
        return 2
    try:
        _merge_config(args, parser)
        for key, fallback in _DEFAULTS.items():
            if hasattr(args, key) and getattr(args, key) is None:
                setattr(args, key, fallback)
        _echo_config(args)
        return args.func(args)
    except (ConfigError, align.AlignError, evalh.EvalError, SmilesError,
            instruct.InstructError, props.PropsError, OSError,
            ValueError) as exc:
        log.error("%s: %s", type(exc).__name__, exc)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
