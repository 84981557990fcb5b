"""Deterministic instruction-dataset synthesis and splitting."""
from __future__ import annotations

import json
import random
from dataclasses import dataclass
from pathlib import Path

from .errors import InsufficientTriplets, TooFewRecords
from .templates import (
    DEFAULT_MPP_PROPERTIES,
    MPP,
    TASKS,
    InstructionRecord,
    fill_template,
)
from .triplets import Triplet


def synthesize_dataset(
    triplets: list[Triplet],
    tasks: tuple[str, ...] = TASKS,
    count: int = 0,
    seed: int = 0,
) -> list[InstructionRecord]:
    """Expand triplets into `count` records per task, interleaved round-robin.

    Triplets are sampled without replacement per task until exhausted, then
    with replacement.  Pure function of (triplets, tasks, count, seed).
    """
    if count <= 0:
        count = len(triplets)
    if not triplets:
        raise InsufficientTriplets("no triplets to synthesize from")
    rng = random.Random(seed)
    per_task: dict[str, list[Triplet]] = {}
    for task in tasks:
        pool = list(triplets)
        rng.shuffle(pool)
        chosen = []
        while len(chosen) < count:
            take = pool[: count - len(chosen)]
            chosen.extend(take)
            if len(chosen) < count:
                pool = list(triplets)
                rng.shuffle(pool)
        per_task[task] = chosen

    records: list[InstructionRecord] = []
    for i in range(count):
        for task in tasks:
            triplet = per_task[task][i]
            if task == MPP:
                prop = DEFAULT_MPP_PROPERTIES[i % len(DEFAULT_MPP_PROPERTIES)]
                records.append(fill_template(task, triplet, mpp_property=prop))
            else:
                records.append(fill_template(task, triplet))
    return records


def write_jsonl(records: list[InstructionRecord], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(json.dumps(record.as_dict(), ensure_ascii=False) + "\n")


def read_jsonl(path: str | Path) -> list[InstructionRecord]:
    records = []
    with Path(path).open(encoding="utf-8") as handle:
        for line in handle:
            if not line.strip():
                continue
            obj = json.loads(line)
            records.append(
                InstructionRecord(
                    obj["task"], obj["instruction"], obj["response"],
                    obj["source_smiles"],
                )
            )
    return records


@dataclass(frozen=True)
class DatasetSplit:
    train: tuple[int, ...]
    validation: tuple[int, ...]
    test: tuple[int, ...]
    seed: int


def split_dataset(ids: list[int], seed: int = 0) -> DatasetSplit:
    """Shuffle by seed, cut at the 80% and 90% boundaries."""
    if len(ids) < 10:
        raise TooFewRecords(f"need at least 10 records, got {len(ids)}")
    shuffled = list(ids)
    random.Random(seed).shuffle(shuffled)
    n = len(shuffled)
    lo, hi = round(n * 0.8), round(n * 0.9)
    return DatasetSplit(
        train=tuple(shuffled[:lo]),
        validation=tuple(shuffled[lo:hi]),
        test=tuple(shuffled[hi:]),
        seed=seed,
    )
