"""Regression metrics and the multi-constraint generation protocol."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from ..chem import SmilesError, parse_smiles
from ..instruct import CONSTRAINT_PROPERTIES
from ..props import descriptor_vector
from .errors import EmptyInput, LengthMismatch
from .report import MetricReport


def regression_metrics(
    predicted: Sequence[float], truth: Sequence[float]
) -> tuple[float, float | None]:
    """(RMSE, R²); R² is None when all true values coincide."""
    if len(predicted) != len(truth):
        raise LengthMismatch(f"{len(predicted)} predictions vs {len(truth)} truths")
    if not truth:
        raise EmptyInput("regression metrics need at least one value")
    n = len(truth)
    ss_res = sum((p - t) ** 2 for p, t in zip(predicted, truth))
    rmse = math.sqrt(ss_res / n)
    mean = sum(truth) / n
    ss_tot = sum((t - mean) ** 2 for t in truth)
    if ss_tot == 0:
        return rmse, None
    return rmse, 1 - ss_res / ss_tot


@dataclass(frozen=True)
class ConstraintSpec:
    """Target values for the five constraint descriptors."""
    targets: dict[str, float]

    def __post_init__(self):
        if tuple(self.targets) != CONSTRAINT_PROPERTIES:
            raise ValueError(
                f"constraints must be exactly {CONSTRAINT_PROPERTIES}"
            )
        for name, value in self.targets.items():
            if not math.isfinite(value):
                raise ValueError(f"non-finite constraint value for {name}")


def eval_multiconstraint(
    constraints: list[ConstraintSpec], generated: list[str]
) -> MetricReport:
    """Score generated SMILES against per-row property constraints.

    Invalid SMILES are excluded from the regression and surfaced as an
    invalidity rate.  Per-property RMSE/R² use raw values; the aggregate RMSE
    pools residuals z-normalized by the constraint-set statistics, and the
    aggregate R² macro-averages the per-property R² values.
    """
    if len(constraints) != len(generated):
        raise LengthMismatch(
            f"{len(constraints)} constraints vs {len(generated)} molecules"
        )
    names = CONSTRAINT_PROPERTIES
    actual: dict[str, list[float]] = {n: [] for n in names}
    target: dict[str, list[float]] = {n: [] for n in names}
    skipped = 0
    for spec, smiles in zip(constraints, generated):
        try:
            mol = parse_smiles(smiles)
        except SmilesError:
            skipped += 1
            continue
        vector = descriptor_vector(mol, list(names)).as_dict()
        for name in names:
            actual[name].append(vector[name])
            target[name].append(spec.targets[name])
    evaluated = len(generated) - skipped
    metrics: dict[str, float | None] = {
        "Invalidity": skipped / len(generated) if generated else None
    }
    notes = []
    if evaluated == 0:
        for name in names:
            metrics[f"{name} RMSE"] = None
            metrics[f"{name} R2"] = None
        metrics["Aggregate RMSE (z)"] = None
        metrics["Aggregate R2"] = None
        notes.append("no valid molecules; regression skipped")
        return MetricReport(
            task="multiconstraint", metrics=metrics, evaluated=0,
            skipped=skipped, notes=tuple(notes),
        )

    z_sq = []
    r2_values = []
    for name in names:
        rmse, r2 = regression_metrics(actual[name], target[name])
        metrics[f"{name} RMSE"] = rmse
        metrics[f"{name} R2"] = r2
        if r2 is None:
            notes.append(f"{name} R2 undefined: all targets equal")
        else:
            r2_values.append(r2)
        # z-normalization uses the spread of the requested constraints
        all_targets = [spec.targets[name] for spec in constraints]
        mean = sum(all_targets) / len(all_targets)
        var = sum((t - mean) ** 2 for t in all_targets) / len(all_targets)
        std = math.sqrt(var) if var > 0 else 1.0
        z_sq.extend(
            ((a - t) / std) ** 2 for a, t in zip(actual[name], target[name])
        )
    metrics["Aggregate RMSE (z)"] = math.sqrt(sum(z_sq) / len(z_sq))
    metrics["Aggregate R2"] = (
        sum(r2_values) / len(r2_values) if r2_values else None
    )
    return MetricReport(
        task="multiconstraint", metrics=metrics, evaluated=evaluated,
        skipped=skipped, notes=tuple(notes),
    )
