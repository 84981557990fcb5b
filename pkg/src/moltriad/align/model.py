"""Small from-scratch transformer encoders and decoders.

Three encoders (text, SMILES, property) pool a CLS representation; two
decoders (text, property) generate their modality while cross-attending to
the SMILES encoder token states.
"""
from __future__ import annotations

from dataclasses import dataclass

import torch
from torch import nn

from .errors import TokenIdOutOfRange
from .vocab import PAD, Vocabulary


@dataclass(frozen=True)
class ModelConfig:
    dim: int = 64
    layers: int = 2
    heads: int = 4
    ff: int = 128
    joint: int = 32
    tau: float = 0.07
    max_len: int = 256


class EncoderLayer(nn.Module):
    def __init__(self, cfg: ModelConfig):
        super().__init__()
        self.attn = nn.MultiheadAttention(cfg.dim, cfg.heads, batch_first=True)
        self.norm1 = nn.LayerNorm(cfg.dim)
        self.norm2 = nn.LayerNorm(cfg.dim)
        self.ff = nn.Sequential(
            nn.Linear(cfg.dim, cfg.ff), nn.GELU(), nn.Linear(cfg.ff, cfg.dim)
        )

    def forward(self, x: torch.Tensor, pad_mask: torch.Tensor) -> torch.Tensor:
        attended, _ = self.attn(x, x, x, key_padding_mask=pad_mask,
                                need_weights=False)
        x = self.norm1(x + attended)
        return self.norm2(x + self.ff(x))


class Encoder(nn.Module):
    def __init__(self, vocab_size: int, cfg: ModelConfig):
        super().__init__()
        self.vocab_size = vocab_size
        self.embed = nn.Embedding(vocab_size, cfg.dim, padding_idx=PAD)
        self.pos = nn.Embedding(cfg.max_len, cfg.dim)
        self.blocks = nn.ModuleList(EncoderLayer(cfg) for _ in range(cfg.layers))

    def forward(self, tokens: torch.Tensor) -> tuple[torch.Tensor, torch.Tensor]:
        """(pooled CLS states, all token states); tokens are PAD-padded."""
        if int(tokens.max()) >= self.vocab_size or int(tokens.min()) < 0:
            raise TokenIdOutOfRange(
                f"token id outside [0, {self.vocab_size})"
            )
        pad_mask = tokens == PAD
        positions = torch.arange(tokens.shape[1], device=tokens.device)
        x = self.embed(tokens) + self.pos(positions)[None, :, :]
        for block in self.blocks:
            x = block(x, pad_mask)
        return x[:, 0, :], x


class DecoderLayer(nn.Module):
    def __init__(self, cfg: ModelConfig):
        super().__init__()
        self.self_attn = nn.MultiheadAttention(cfg.dim, cfg.heads, batch_first=True)
        self.cross_attn = nn.MultiheadAttention(cfg.dim, cfg.heads, batch_first=True)
        self.norm1 = nn.LayerNorm(cfg.dim)
        self.norm2 = nn.LayerNorm(cfg.dim)
        self.norm3 = nn.LayerNorm(cfg.dim)
        self.ff = nn.Sequential(
            nn.Linear(cfg.dim, cfg.ff), nn.GELU(), nn.Linear(cfg.ff, cfg.dim)
        )

    def forward(self, x, memory, causal_mask, pad_mask, memory_pad_mask):
        attended, _ = self.self_attn(
            x, x, x, attn_mask=causal_mask, key_padding_mask=pad_mask,
            need_weights=False,
        )
        x = self.norm1(x + attended)
        crossed, _ = self.cross_attn(
            x, memory, memory, key_padding_mask=memory_pad_mask,
            need_weights=False,
        )
        x = self.norm2(x + crossed)
        return self.norm3(x + self.ff(x))


class Decoder(nn.Module):
    def __init__(self, vocab_size: int, cfg: ModelConfig):
        super().__init__()
        self.vocab_size = vocab_size
        self.embed = nn.Embedding(vocab_size, cfg.dim, padding_idx=PAD)
        self.pos = nn.Embedding(cfg.max_len, cfg.dim)
        self.blocks = nn.ModuleList(DecoderLayer(cfg) for _ in range(cfg.layers))
        self.head = nn.Linear(cfg.dim, vocab_size)

    def forward(self, tokens, memory, memory_pad_mask) -> torch.Tensor:
        """Next-token logits under a causal mask, cross-attending to memory."""
        if int(tokens.max()) >= self.vocab_size or int(tokens.min()) < 0:
            raise TokenIdOutOfRange(
                f"token id outside [0, {self.vocab_size})"
            )
        length = tokens.shape[1]
        pad_mask = tokens == PAD
        causal = torch.triu(
            torch.ones(length, length, dtype=torch.bool, device=tokens.device),
            diagonal=1,
        )
        positions = torch.arange(length, device=tokens.device)
        x = self.embed(tokens) + self.pos(positions)[None, :, :]
        for block in self.blocks:
            x = block(x, memory, causal, pad_mask, memory_pad_mask)
        return self.head(x)


def _projection(cfg: ModelConfig) -> nn.Module:
    return nn.Sequential(
        nn.Linear(cfg.dim, cfg.dim), nn.GELU(), nn.Linear(cfg.dim, cfg.joint)
    )


def _match_head(cfg: ModelConfig) -> nn.Module:
    return nn.Sequential(
        nn.Linear(2 * cfg.dim, cfg.dim), nn.GELU(), nn.Linear(cfg.dim, 2)
    )


class AlignmentModel(nn.Module):
    """Tri-modal alignment model: Enc^t / Enc^s / Enc^p, Dec^t / Dec^p,
    per-pair matching heads, and per-modality projection MLPs."""

    def __init__(
        self,
        vocab_t: Vocabulary,
        vocab_s: Vocabulary,
        vocab_p: Vocabulary,
        cfg: ModelConfig | None = None,
    ):
        super().__init__()
        self.cfg = cfg or ModelConfig()
        self.vocab_t, self.vocab_s, self.vocab_p = vocab_t, vocab_s, vocab_p
        self.enc = nn.ModuleDict({
            "text": Encoder(vocab_t.size, self.cfg),
            "smiles": Encoder(vocab_s.size, self.cfg),
            "property": Encoder(vocab_p.size, self.cfg),
        })
        self.dec = nn.ModuleDict({
            "text": Decoder(vocab_t.size, self.cfg),
            "property": Decoder(vocab_p.size, self.cfg),
        })
        self.proj = nn.ModuleDict({
            "text": _projection(self.cfg),
            "smiles": _projection(self.cfg),
            "property": _projection(self.cfg),
        })
        self.match_head = nn.ModuleDict({
            "text": _match_head(self.cfg),
            "property": _match_head(self.cfg),
        })
        self.tau = self.cfg.tau


def encode(model: AlignmentModel, tokens: torch.Tensor, modality: str):
    """(pooled CLS representations, token-level states) for one modality."""
    return model.enc[modality](tokens)
