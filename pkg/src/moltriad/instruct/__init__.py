"""Triplet storage and instruction-dataset synthesis."""
from .errors import (
    HeaderMismatch,
    InstructError,
    InsufficientTriplets,
    MalformedRow,
    MissingConstraintProperty,
    TooFewRecords,
    UnknownProperty,
)
from .synth import (
    DatasetSplit,
    read_jsonl,
    split_dataset,
    synthesize_dataset,
    write_jsonl,
)
from .templates import (
    CONSTRAINT_PROPERTIES,
    DEFAULT_MPP_PROPERTIES,
    MC,
    MCMG,
    MPP,
    TASKS,
    TBMG,
    InstructionRecord,
    fill_template,
)
from .triplets import Triplet, load_triplets, save_triplets

__all__ = [
    "Triplet",
    "load_triplets",
    "save_triplets",
    "InstructionRecord",
    "fill_template",
    "synthesize_dataset",
    "split_dataset",
    "write_jsonl",
    "read_jsonl",
    "DatasetSplit",
    "TASKS",
    "MC",
    "TBMG",
    "MPP",
    "MCMG",
    "CONSTRAINT_PROPERTIES",
    "DEFAULT_MPP_PROPERTIES",
    "InstructError",
    "MalformedRow",
    "HeaderMismatch",
    "UnknownProperty",
    "MissingConstraintProperty",
    "InsufficientTriplets",
    "TooFewRecords",
]
