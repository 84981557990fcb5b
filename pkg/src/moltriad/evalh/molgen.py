"""Molecule-generation metrics: validity, FTS, string distances."""
from __future__ import annotations

from ..chem import SmilesError, parse_smiles
from ..props import fingerprint, tanimoto
from .errors import LengthMismatch
from .report import MetricReport
from .text import bleu, levenshtein

# report label -> fingerprint kind; "RDKit FTS" is the path fingerprint,
# the label is kept for table compatibility
FTS_COLUMNS = (
    ("MACCS FTS", "maccs_lite"),
    ("RDKit FTS", "path"),
    ("Morgan FTS", "morgan"),
)


def _char_tokens(text: str) -> list[str]:
    return list(text)


def molgen_metrics(predicted: list[str], references: list[str]) -> MetricReport:
    """Score generated SMILES against references.

    Validity is the parseable fraction of predictions; FTS means run over
    pairs where both sides parse; BLEU is character-level; Levenshtein is on
    the raw strings.
    """
    if len(predicted) != len(references):
        raise LengthMismatch(
            f"{len(predicted)} predictions vs {len(references)} references"
        )
    mols = []
    valid = 0
    for pred, ref in zip(predicted, references):
        pair = []
        for smiles in (pred, ref):
            try:
                pair.append(parse_smiles(smiles))
            except SmilesError:
                pair.append(None)
        if pair[0] is not None:
            valid += 1
        mols.append(pair)

    metrics: dict[str, float | None] = {
        "Validity": valid / len(predicted) if predicted else None
    }
    both = [(p, r) for p, r in mols if p is not None and r is not None]
    for label, kind in FTS_COLUMNS:
        if not both:
            metrics[label] = None
            continue
        scores = [
            tanimoto(fingerprint(p, kind), fingerprint(r, kind))
            for p, r in both
        ]
        metrics[label] = sum(scores) / len(scores)
    metrics["BLEU"] = bleu(predicted, references, tokenizer=_char_tokens)
    distances = [levenshtein(p, r) for p, r in zip(predicted, references)]
    metrics["Levenshtein"] = (
        sum(distances) / len(distances) if distances else None
    )
    return MetricReport(
        task="molgen",
        metrics=metrics,
        evaluated=len(both),
        skipped=len(predicted) - len(both),
        notes=(
            "RDKit FTS column computed with the path fingerprint",
            "BLEU computed on character tokens",
        ),
    )


def eval_caption(predicted: list[str], references: list[str]) -> MetricReport:
    """Caption-quality report with the standard text-metric columns."""
    from .text import meteor_simple, rouge

    metrics: dict[str, float | None] = {
        "BLEU-2": bleu(predicted, references, n=2),
        "BLEU-4": bleu(predicted, references, n=4),
        "METEOR": meteor_simple(predicted, references),
        "ROUGE-1": rouge(predicted, references, "1"),
        "ROUGE-2": rouge(predicted, references, "2"),
        "ROUGE-L": rouge(predicted, references, "L"),
    }
    return MetricReport(
        task="caption", metrics=metrics, evaluated=len(predicted), skipped=0,
        notes=("METEOR is the exact-match variant (meteor_simple)",),
    )
