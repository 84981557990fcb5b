"""Evaluation harness: text metrics, molecule metrics, reports."""
from .errors import EmptyInput, EvalError, LengthMismatch
from .molgen import eval_caption, molgen_metrics
from .regression import ConstraintSpec, eval_multiconstraint, regression_metrics
from .report import MetricReport, render_report
from .text import bleu, levenshtein, meteor_simple, rouge

__all__ = [
    "bleu",
    "rouge",
    "meteor_simple",
    "levenshtein",
    "molgen_metrics",
    "eval_caption",
    "regression_metrics",
    "ConstraintSpec",
    "eval_multiconstraint",
    "MetricReport",
    "render_report",
    "EvalError",
    "LengthMismatch",
    "EmptyInput",
]
