"""Vocabularies and property binning for the three modalities."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

import numpy as np
import torch

from ..chem import tokenize_smiles
from .errors import EmptyCorpus

PAD, CLS, BOS, EOS, UNK = 0, 1, 2, 3, 4
SPECIAL_TOKENS = ("<pad>", "<cls>", "<bos>", "<eos>", "<unk>")

_WORD_RE = re.compile(r"[a-z0-9]+|[^\sa-z0-9]")


def text_tokens(text: str) -> list[str]:
    """Lowercase whitespace/punctuation tokenization."""
    return _WORD_RE.findall(text.lower())


@dataclass(frozen=True)
class Vocabulary:
    modality: str
    token_to_id: dict[str, int]

    @property
    def size(self) -> int:
        return len(self.token_to_id)

    def id(self, token: str) -> int:
        return self.token_to_id.get(token, UNK)

    def ids(self, tokens: list[str]) -> list[int]:
        return [self.id(t) for t in tokens]

    def token(self, idx: int) -> str:
        # reverse lookup is only needed for decoding; build lazily
        for token, i in self.token_to_id.items():
            if i == idx:
                return token
        return SPECIAL_TOKENS[UNK]


def _make_vocab(modality: str, tokens: list[str]) -> Vocabulary:
    table = {tok: i for i, tok in enumerate(SPECIAL_TOKENS)}
    for token in tokens:
        if token not in table:
            table[token] = len(table)
    return Vocabulary(modality, table)


@dataclass(frozen=True)
class PropertyBinner:
    names: tuple[str, ...]
    edges: dict[str, np.ndarray]     # K-1 interior quantile edges
    midpoints: dict[str, np.ndarray]  # K representative values
    k: int

    def bin(self, name: str, value: float) -> int:
        return int(np.searchsorted(self.edges[name], value, side="right"))

    def midpoint(self, name: str, bin_index: int) -> float:
        return float(self.midpoints[name][bin_index])


def build_binner(corpus, k: int = 32) -> PropertyBinner:
    names = corpus[0].properties.names
    edges: dict[str, np.ndarray] = {}
    mids: dict[str, np.ndarray] = {}
    columns = np.array([t.properties.values for t in corpus], dtype=float)
    for j, name in enumerate(names):
        col = columns[:, j]
        qs = np.quantile(col, np.linspace(0, 1, k + 1))
        interior = qs[1:-1]
        # strictly increasing edges: collapse duplicates from ties
        interior = np.maximum.accumulate(interior)
        eps = 1e-12 * (1.0 + np.abs(interior))
        for i in range(1, len(interior)):
            if interior[i] <= interior[i - 1]:
                interior[i] = interior[i - 1] + eps[i]
        edges[name] = interior
        mids[name] = np.quantile(col, (np.arange(k) + 0.5) / k)
    return PropertyBinner(names=names, edges=edges, midpoints=mids, k=k)


def build_vocabularies(
    corpus, text_vocab_cap: int = 2000, bins: int = 32
) -> tuple[Vocabulary, Vocabulary, Vocabulary, PropertyBinner]:
    """(text, smiles, property) vocabularies plus the quantile binner."""
    if not corpus:
        raise EmptyCorpus("cannot build vocabularies from an empty corpus")
    counts: Counter[str] = Counter()
    smiles_tokens: list[str] = []
    for triplet in corpus:
        counts.update(text_tokens(triplet.caption))
        smiles_tokens.extend(t.lexeme for t in tokenize_smiles(triplet.smiles))
    top = [tok for tok, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))]
    vocab_t = _make_vocab("text", top[:text_vocab_cap])
    vocab_s = _make_vocab("smiles", sorted(set(smiles_tokens)))
    binner = build_binner(corpus, k=bins)
    prop_tokens = [
        f"{name}#{b}" for name in binner.names for b in range(bins)
    ]
    vocab_p = _make_vocab("property", prop_tokens)
    return vocab_t, vocab_s, vocab_p, binner


# -- sequence construction -------------------------------------------------


def encoder_sequence(vocab: Vocabulary, tokens: list[str]) -> list[int]:
    return [CLS] + vocab.ids(tokens)


def decoder_sequence(vocab: Vocabulary, tokens: list[str]) -> list[int]:
    return [BOS] + vocab.ids(tokens) + [EOS]


def property_tokens(binner: PropertyBinner, values) -> list[str]:
    return [
        f"{name}#{binner.bin(name, value)}"
        for name, value in zip(binner.names, values)
    ]


def pad_batch(sequences: list[list[int]]) -> torch.Tensor:
    width = max(len(s) for s in sequences)
    out = torch.full((len(sequences), width), PAD, dtype=torch.long)
    for i, seq in enumerate(sequences):
        out[i, : len(seq)] = torch.tensor(seq, dtype=torch.long)
    return out
