"""The six alignment loss terms and their weighted total."""
from __future__ import annotations

from dataclasses import dataclass

import torch
import torch.nn.functional as F

from .errors import BatchTooSmall, LabelOutOfRange, NegativeWeight, TargetTooShort
from .model import AlignmentModel
from .vocab import PAD


def match_loss(
    model: AlignmentModel,
    smiles_cls: torch.Tensor,
    other_cls: torch.Tensor,
    labels: torch.Tensor,
    modality: str,
) -> torch.Tensor:
    """Two-way matching cross-entropy on MLP(concat(CLS_s, CLS_x)).

    `labels` are 1 for matched pairs, 0 for mismatched; negatives are
    supplied by the caller (for training: derangement pairs).
    """
    if labels.numel() and (int(labels.min()) < 0 or int(labels.max()) > 1):
        raise LabelOutOfRange("matching labels must be 0 or 1")
    logits = model.match_head[modality](torch.cat([smiles_cls, other_cls], dim=-1))
    return F.cross_entropy(logits, labels)


def contrastive_loss(
    model: AlignmentModel,
    smiles_cls: torch.Tensor,
    other_cls: torch.Tensor,
    modality: str,
    tau: float | None = None,
) -> torch.Tensor:
    """Symmetric InfoNCE over the batch, plus the two intra-modal terms.

    All four cross-entropies use L2-normalized joint projections divided by
    the temperature; the average of the four is halved so a batch of
    identical embeddings of size M yields exactly 2*ln(M).
    """
    m = smiles_cls.shape[0]
    if m < 2:
        raise BatchTooSmall("contrastive loss needs at least 2 items")
    tau = model.tau if tau is None else tau
    zs = F.normalize(model.proj["smiles"](smiles_cls), dim=-1)
    zx = F.normalize(model.proj[modality](other_cls), dim=-1)
    targets = torch.arange(m, device=zs.device)
    terms = [
        F.cross_entropy(zs @ zx.T / tau, targets),
        F.cross_entropy(zx @ zs.T / tau, targets),
        F.cross_entropy(zs @ zs.T / tau, targets),
        F.cross_entropy(zx @ zx.T / tau, targets),
    ]
    return 0.5 * sum(terms)


def clm_loss(
    model: AlignmentModel,
    smiles_states: torch.Tensor,
    smiles_tokens: torch.Tensor,
    target_tokens: torch.Tensor,
    modality: str,
) -> torch.Tensor:
    """Causal LM negative log-likelihood conditioned on the SMILES states.

    `target_tokens` must be BOS-prefixed and EOS-terminated; positions are
    shifted so each logit predicts the following token.  PAD positions are
    ignored.
    """
    if target_tokens.shape[1] < 2:
        raise TargetTooShort("decoder targets need BOS plus at least one token")
    memory_pad = smiles_tokens == PAD
    logits = model.dec[modality](target_tokens[:, :-1], smiles_states, memory_pad)
    return F.cross_entropy(
        logits.reshape(-1, logits.shape[-1]),
        target_tokens[:, 1:].reshape(-1),
        ignore_index=PAD,
    )


@dataclass(frozen=True)
class LossBreakdown:
    match_st: float
    match_sp: float
    contrastive_st: float
    contrastive_sp: float
    clm_st: float
    clm_sp: float
    alpha: float
    beta: float

    @property
    def total(self) -> float:
        return (
            self.match_st
            + self.match_sp
            + self.alpha * (self.contrastive_st + self.contrastive_sp)
            + self.beta * (self.clm_st + self.clm_sp)
        )


def total_loss(
    match_st: torch.Tensor,
    match_sp: torch.Tensor,
    contrastive_st: torch.Tensor,
    contrastive_sp: torch.Tensor,
    clm_st: torch.Tensor,
    clm_sp: torch.Tensor,
    alpha: float = 1.0,
    beta: float = 5.0,
) -> torch.Tensor:
    if alpha < 0 or beta < 0:
        raise NegativeWeight("alpha and beta must be non-negative")
    return (
        match_st
        + match_sp
        + alpha * (contrastive_st + contrastive_sp)
        + beta * (clm_st + clm_sp)
    )
