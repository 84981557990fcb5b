"""Text-similarity metrics: BLEU, ROUGE, simplified METEOR, Levenshtein."""
from __future__ import annotations

import math
from collections import Counter
from typing import Sequence

from ..align.vocab import text_tokens
from .errors import LengthMismatch


def _check_aligned(predictions: Sequence, references: Sequence) -> None:
    if len(predictions) != len(references):
        raise LengthMismatch(
            f"{len(predictions)} predictions vs {len(references)} references"
        )


def _ngrams(tokens: Sequence[str], n: int) -> Counter:
    return Counter(tuple(tokens[i : i + n]) for i in range(len(tokens) - n + 1))


def bleu(
    predictions: Sequence[str],
    references: Sequence[str],
    n: int = 4,
    tokenizer=text_tokens,
) -> float:
    """Corpus-level BLEU-n with brevity penalty.

    Modified (clipped) n-gram precisions for orders 1..n are pooled over the
    corpus; zero counts at orders above 1 get add-one smoothing.
    """
    _check_aligned(predictions, references)
    matched = [0] * n
    total = [0] * n
    pred_len = 0
    ref_len = 0
    for pred, ref in zip(predictions, references):
        p_tok = tokenizer(pred)
        r_tok = tokenizer(ref)
        pred_len += len(p_tok)
        ref_len += len(r_tok)
        for order in range(1, n + 1):
            p_grams = _ngrams(p_tok, order)
            r_grams = _ngrams(r_tok, order)
            matched[order - 1] += sum(
                min(count, r_grams[gram]) for gram, count in p_grams.items()
            )
            total[order - 1] += sum(p_grams.values())
    if pred_len == 0:
        return 0.0
    log_sum = 0.0
    for order in range(n):
        num, den = matched[order], total[order]
        if order > 0 and num == 0:
            num, den = num + 1, den + 1
        if num == 0 or den == 0:
            return 0.0
        log_sum += math.log(num / den)
    brevity = 1.0 if pred_len >= ref_len else math.exp(1 - ref_len / pred_len)
    return brevity * math.exp(log_sum / n)


def _lcs_length(a: Sequence[str], b: Sequence[str]) -> int:
    prev = [0] * (len(b) + 1)
    for x in a:
        cur = [0]
        for j, y in enumerate(b, start=1):
            cur.append(prev[j - 1] + 1 if x == y else max(prev[j], cur[j - 1]))
        prev = cur
    return prev[-1]


def _f1(overlap: int, pred_total: int, ref_total: int) -> float:
    if overlap == 0 or pred_total == 0 or ref_total == 0:
        return 0.0
    precision = overlap / pred_total
    recall = overlap / ref_total
    return 2 * precision * recall / (precision + recall)


def rouge(
    predictions: Sequence[str],
    references: Sequence[str],
    variant: str = "L",
    tokenizer=text_tokens,
) -> float:
    """Mean per-pair ROUGE F1; variant "1"/"2" = n-gram overlap, "L" = LCS."""
    _check_aligned(predictions, references)
    if variant not in {"1", "2", "L"}:
        raise ValueError(f"unknown ROUGE variant: {variant!r}")
    if not predictions:
        return 0.0
    scores = []
    for pred, ref in zip(predictions, references):
        p_tok = tokenizer(pred)
        r_tok = tokenizer(ref)
        if variant == "L":
            overlap = _lcs_length(p_tok, r_tok)
            scores.append(_f1(overlap, len(p_tok), len(r_tok)))
        else:
            order = int(variant)
            p_grams = _ngrams(p_tok, order)
            r_grams = _ngrams(r_tok, order)
            overlap = sum(
                min(count, r_grams[gram]) for gram, count in p_grams.items()
            )
            scores.append(
                _f1(overlap, sum(p_grams.values()), sum(r_grams.values()))
            )
    return sum(scores) / len(scores)


def _meteor_pair(p_tok: list[str], r_tok: list[str]) -> float:
    # greedy left-to-right alignment to the earliest unused reference slot
    used = [False] * len(r_tok)
    alignment = []
    for pos, token in enumerate(p_tok):
        for j, ref_token in enumerate(r_tok):
            if not used[j] and ref_token == token:
                used[j] = True
                alignment.append((pos, j))
                break
    m = len(alignment)
    if m == 0 or not p_tok or not r_tok:
        return 0.0
    chunks = 1
    for (p0, r0), (p1, r1) in zip(alignment, alignment[1:]):
        if p1 != p0 + 1 or r1 != r0 + 1:
            chunks += 1
    precision = m / len(p_tok)
    recall = m / len(r_tok)
    f_mean = 10 * precision * recall / (recall + 9 * precision)
    penalty = 0.5 * (chunks / m) ** 3
    return f_mean * (1 - penalty)


def meteor_simple(
    predictions: Sequence[str],
    references: Sequence[str],
    tokenizer=text_tokens,
) -> float:
    """Exact-match METEOR (no stemming or synonymy), mean over pairs."""
    _check_aligned(predictions, references)
    if not predictions:
        return 0.0
    scores = [
        _meteor_pair(tokenizer(p), tokenizer(r))
        for p, r in zip(predictions, references)
    ]
    return sum(scores) / len(scores)


def levenshtein(a: str, b: str) -> int:
    """Minimal insert/delete/substitute edit distance."""
    prev = list(range(len(b) + 1))
    for i, x in enumerate(a, start=1):
        cur = [i]
        for j, y in enumerate(b, start=1):
            cur.append(
                min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (x != y))
            )
        prev = cur
    return prev[-1]
