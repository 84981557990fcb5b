"""The (caption text, SMILES, property vector) triplet store.

Triplets live in CSV files with header ``smiles,text,<descriptor ids...>``.
Invalid-SMILES rows are skipped and counted, not fatal; structurally broken
rows are.
"""
from __future__ import annotations

import csv
import logging
from dataclasses import dataclass
from pathlib import Path

from ..chem import is_valid_smiles
from ..props import PropertyVector
from .errors import HeaderMismatch, MalformedRow

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Triplet:
    smiles: str
    caption: str
    properties: PropertyVector


def load_triplets(path: str | Path) -> list[Triplet]:
    """Read a triplet CSV; returns the valid triplets.  Rows whose SMILES
    does not parse are logged and skipped."""
    path = Path(path)
    with path.open(newline="") as handle:
        reader = csv.reader(handle)
        try:
            header = next(reader)
        except StopIteration:
            raise HeaderMismatch(f"{path}: empty file")
        if len(header) < 3 or header[0] != "smiles" or header[1] != "text":
            raise HeaderMismatch(
                f"{path}: expected header 'smiles,text,<ids...>', got {header}"
            )
        ids = tuple(header[2:])
        out: list[Triplet] = []
        skipped = 0
        for number, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise MalformedRow(
                    number, f"expected {len(header)} columns, got {len(row)}"
                )
            smiles, caption = row[0], row[1]
            try:
                values = tuple(float(v) for v in row[2:])
            except ValueError as exc:
                raise MalformedRow(number, str(exc))
            if not is_valid_smiles(smiles):
                skipped += 1
                log.warning("skipping invalid SMILES at line %d: %s", number, smiles)
                continue
            out.append(
                Triplet(smiles, caption, PropertyVector(names=ids, values=values))
            )
    if skipped:
        log.info("%s: skipped %d invalid-SMILES rows", path, skipped)
    return out


def save_triplets(triplets: list[Triplet], path: str | Path) -> None:
    path = Path(path)
    if not triplets:
        path.write_text("smiles,text\n")
        return
    ids = triplets[0].properties.names
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(["smiles", "text", *ids])
        for t in triplets:
            if t.properties.names != ids:
                raise HeaderMismatch("triplets carry differing descriptor sets")
            writer.writerow([t.smiles, t.caption, *[repr(v) for v in t.properties.values]])
