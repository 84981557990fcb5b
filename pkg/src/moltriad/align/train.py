"""Toy alignment training loop, retrieval probes, and checkpointing."""
from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from pathlib import Path

import torch
import torch.nn.functional as F

from ..chem import SmilesError, is_valid_smiles, parse_smiles, tokenize_smiles
from ..instruct import Triplet
from ..props import descriptor_vector
from .errors import (
    DivergedLoss,
    EmptyCorpus,
    InvalidSmiles,
    MissingCaptionFile,
)
from .losses import LossBreakdown, clm_loss, contrastive_loss, match_loss, total_loss
from .model import AlignmentModel, ModelConfig
from .vocab import (
    BOS,
    EOS,
    PAD,
    PropertyBinner,
    Vocabulary,
    build_vocabularies,
    decoder_sequence,
    encoder_sequence,
    pad_batch,
    property_tokens,
    text_tokens,
)

log = logging.getLogger(__name__)

DIVERGENCE_CEILING = 1e6


@dataclass(frozen=True)
class TrainConfig:
    epochs: int = 30
    batch_size: int = 16
    lr: float = 1e-3
    weight_decay: float = 0.01
    tau: float = 0.07
    alpha: float = 1.0
    beta: float = 5.0
    seed: int = 0
    momentum: float = 0.0  # EMA teacher decay; 0 disables the teacher


@dataclass
class TrainResult:
    model: AlignmentModel
    history: list[LossBreakdown] = field(default_factory=list)


def _smiles_seq(vocab_s: Vocabulary, smiles: str) -> list[int]:
    return encoder_sequence(vocab_s, [t.lexeme for t in tokenize_smiles(smiles)])


def _text_seq(vocab_t: Vocabulary, caption: str) -> list[int]:
    return encoder_sequence(vocab_t, text_tokens(caption))


def _prop_seq(vocab_p: Vocabulary, binner: PropertyBinner, values) -> list[int]:
    return encoder_sequence(vocab_p, property_tokens(binner, values))


def _derangement(n: int, rng: random.Random) -> list[int]:
    """Permutation of range(n) with no fixed points (n >= 2)."""
    while True:
        perm = list(range(n))
        rng.shuffle(perm)
        if all(perm[i] != i for i in range(n)):
            return perm


def _batch_losses(
    model: AlignmentModel,
    batch: list[Triplet],
    binner: PropertyBinner,
    rng: random.Random,
    tau: float,
):
    tok_s = pad_batch([_smiles_seq(model.vocab_s, t.smiles) for t in batch])
    tok_t = pad_batch([_text_seq(model.vocab_t, t.caption) for t in batch])
    tok_p = pad_batch(
        [_prop_seq(model.vocab_p, binner, t.properties.values) for t in batch]
    )
    cls_s, states_s = model.enc["smiles"](tok_s)
    cls_t, _ = model.enc["text"](tok_t)
    cls_p, _ = model.enc["property"](tok_p)

    n = len(batch)
    perm = _derangement(n, rng)
    # 1:1 positives and derangement negatives for the matching heads
    labels = torch.tensor([1] * n + [0] * n)
    pair_s = torch.cat([cls_s, cls_s], dim=0)
    m_st = match_loss(model, pair_s, torch.cat([cls_t, cls_t[perm]]), labels, "text")
    m_sp = match_loss(
        model, pair_s, torch.cat([cls_p, cls_p[perm]]), labels, "property"
    )

    c_st = contrastive_loss(model, cls_s, cls_t, "text", tau=tau)
    c_sp = contrastive_loss(model, cls_s, cls_p, "property", tau=tau)

    dec_t = pad_batch(
        [decoder_sequence(model.vocab_t, text_tokens(t.caption)) for t in batch]
    )
    dec_p = pad_batch(
        [
            decoder_sequence(
                model.vocab_p, property_tokens(binner, t.properties.values)
            )
            for t in batch
        ]
    )
    g_st = clm_loss(model, states_s, tok_s, dec_t, "text")
    g_sp = clm_loss(model, states_s, tok_s, dec_p, "property")
    return m_st, m_sp, c_st, c_sp, g_st, g_sp


def train(
    corpus: list[Triplet],
    cfg: TrainConfig | None = None,
    model_cfg: ModelConfig | None = None,
) -> TrainResult:
    """Train the tri-modal model; returns the model and per-epoch losses.

    Deterministic for a fixed (corpus, cfg): all randomness flows through
    the config seed.
    """
    cfg = cfg or TrainConfig()
    if not corpus:
        raise EmptyCorpus("training corpus is empty")
    torch.manual_seed(cfg.seed)
    vocab_t, vocab_s, vocab_p, binner = build_vocabularies(corpus)
    model_cfg = model_cfg or ModelConfig(tau=cfg.tau)
    model = AlignmentModel(vocab_t, vocab_s, vocab_p, model_cfg)
    model.binner = binner
    optimizer = torch.optim.AdamW(
        model.parameters(), lr=cfg.lr, weight_decay=cfg.weight_decay
    )
    teacher = None
    if cfg.momentum > 0:
        teacher = [p.detach().clone() for p in model.parameters()]

    history: list[LossBreakdown] = []
    for _ in range(cfg.epochs):
        # one RNG per epoch, reseeded from the config: batch composition and
        # derangement negatives repeat epoch to epoch, so a zero learning
        # rate yields a perfectly constant loss history
        rng = random.Random(cfg.seed)
        order = list(range(len(corpus)))
        rng.shuffle(order)
        sums = [0.0] * 6
        batches = 0
        for start in range(0, len(order), cfg.batch_size):
            idx = order[start : start + cfg.batch_size]
            if len(idx) < 2:
                continue  # contrastive term needs >= 2 items
            batch = [corpus[i] for i in idx]
            terms = _batch_losses(model, batch, binner, rng, cfg.tau)
            loss = total_loss(*terms, alpha=cfg.alpha, beta=cfg.beta)
            if not torch.isfinite(loss) or loss.item() > DIVERGENCE_CEILING:
                raise DivergedLoss(f"loss diverged to {loss.item()}")
            optimizer.zero_grad(set_to_none=True)
            loss.backward()
            optimizer.step()
            if teacher is not None:
                with torch.no_grad():
                    for slot, param in zip(teacher, model.parameters()):
                        slot.mul_(cfg.momentum).add_(param, alpha=1 - cfg.momentum)
            for k in range(6):
                sums[k] += terms[k].item()
            batches += 1
        history.append(
            LossBreakdown(
                *(s / max(batches, 1) for s in sums),
                alpha=cfg.alpha,
                beta=cfg.beta,
            )
        )
    return TrainResult(model=model, history=history)


@torch.no_grad()
def retrieval_accuracy(
    model: AlignmentModel,
    binner: PropertyBinner,
    batch: list[Triplet],
    direction: str = "s2p",
) -> float:
    """Top-1 retrieval accuracy from SMILES to property (s2p) or text (s2t).

    Similarity ties resolve to the lowest candidate index (argmax order).
    """
    model.eval()
    tok_s = pad_batch([_smiles_seq(model.vocab_s, t.smiles) for t in batch])
    cls_s, _ = model.enc["smiles"](tok_s)
    if direction == "s2p":
        tok_x = pad_batch(
            [_prop_seq(model.vocab_p, binner, t.properties.values) for t in batch]
        )
        cls_x, _ = model.enc["property"](tok_x)
        zx = F.normalize(model.proj["property"](cls_x), dim=-1)
    elif direction == "s2t":
        tok_x = pad_batch([_text_seq(model.vocab_t, t.caption) for t in batch])
        cls_x, _ = model.enc["text"](tok_x)
        zx = F.normalize(model.proj["text"](cls_x), dim=-1)
    else:
        raise ValueError(f"unknown retrieval direction: {direction!r}")
    zs = F.normalize(model.proj["smiles"](cls_s), dim=-1)
    predicted = (zs @ zx.T).argmax(dim=1)
    hits = (predicted == torch.arange(len(batch))).sum().item()
    model.train()
    return hits / len(batch)


@torch.no_grad()
def generate_caption(
    model: AlignmentModel, smiles: str, max_tokens: int = 64
) -> str:
    """Greedy caption decoding conditioned on one SMILES string."""
    if not is_valid_smiles(smiles):
        raise InvalidSmiles(f"cannot caption invalid SMILES: {smiles!r}")
    model.eval()
    tok_s = pad_batch([_smiles_seq(model.vocab_s, smiles)])
    _, states = model.enc["smiles"](tok_s)
    memory_pad = tok_s == PAD
    seq = [BOS]
    for _ in range(max_tokens):
        logits = model.dec["text"](
            torch.tensor([seq], dtype=torch.long), states, memory_pad
        )
        nxt = int(logits[0, -1].argmax())
        if nxt == EOS:
            break
        seq.append(nxt)
    model.train()
    return " ".join(model.vocab_t.token(i) for i in seq[1:])


def synthesize_triplets(
    smiles_list: list[str],
    caption_source: str = "file",
    caption_file: str | Path | None = None,
    model: AlignmentModel | None = None,
    registry: list[str] | None = None,
) -> tuple[list[Triplet], int]:
    """Build (SMILES, caption, properties) triplets; returns (triplets, skipped).

    Captions come either from a file of one caption per line aligned with the
    SMILES list, or from greedy model decoding.  Invalid SMILES are skipped
    and logged, never fatal.
    """
    if caption_source == "file":
        if caption_file is None or not Path(caption_file).exists():
            raise MissingCaptionFile(f"caption file not found: {caption_file}")
        captions = Path(caption_file).read_text(encoding="utf-8").splitlines()
    elif caption_source == "model":
        if model is None:
            raise ValueError("caption_source='model' requires a model")
        captions = None
    else:
        raise ValueError(f"unknown caption source: {caption_source!r}")

    triplets: list[Triplet] = []
    skipped = 0
    for i, smiles in enumerate(smiles_list):
        try:
            mol = parse_smiles(smiles)
        except SmilesError as exc:
            log.warning("skipping invalid SMILES %r: %s", smiles, exc)
            skipped += 1
            continue
        if captions is not None:
            caption = captions[i] if i < len(captions) else ""
        else:
            caption = generate_caption(model, smiles)
        triplets.append(
            Triplet(
                smiles=smiles,
                caption=caption,
                properties=descriptor_vector(mol, registry),
            )
        )
    return triplets, skipped


def save_checkpoint(
    result: TrainResult, binner: PropertyBinner, path: str | Path
) -> None:
    """Persist weights, vocabularies, binner, and config in one file."""
    model = result.model
    torch.save(
        {
            "state_dict": model.state_dict(),
            "config": model.cfg,
            "vocab_t": model.vocab_t,
            "vocab_s": model.vocab_s,
            "vocab_p": model.vocab_p,
            "binner": binner,
            "history": result.history,
        },
        path,
    )


def load_checkpoint(path: str | Path) -> tuple[AlignmentModel, PropertyBinner]:
    blob = torch.load(path, weights_only=False)
    model = AlignmentModel(
        blob["vocab_t"], blob["vocab_s"], blob["vocab_p"], blob["config"]
    )
    model.load_state_dict(blob["state_dict"])
    return model, blob["binner"]
