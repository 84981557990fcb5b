"""Alignment model, loss, and training-loop tests."""
import math

import pytest
import torch

from moltriad.align import (
    AlignmentModel,
    BatchTooSmall,
    DivergedLoss,
    EmptyCorpus,
    InvalidSmiles,
    LabelOutOfRange,
    MissingCaptionFile,
    ModelConfig,
    NegativeWeight,
    TargetTooShort,
    TokenIdOutOfRange,
    TrainConfig,
    build_vocabularies,
    contrastive_loss,
    decoder_sequence,
    generate_caption,
    load_checkpoint,
    match_loss,
    pad_batch,
    property_tokens,
    retrieval_accuracy,
    save_checkpoint,
    synthesize_triplets,
    text_tokens,
    total_loss,
    train,
)
from moltriad.align.losses import clm_loss

from .test_instruct import make_triplet

SMALL = ModelConfig(dim=8, layers=1, heads=2, ff=16, joint=4, max_len=64)


def tiny_corpus():
    smis = ["CCO", "CCN", "CC(=O)O", "c1ccccc1", "CCOC", "CCS"]
    caps = ["an alcohol.", "an amine.", "an acid.", "a ring.", "an ether.",
            "a thiol."]
    return [make_triplet(s, c) for s, c in zip(smis, caps)]


@pytest.fixture(scope="module")
def setup():
    corpus = tiny_corpus()
    vt, vs, vp, binner = build_vocabularies(corpus, bins=4)
    torch.manual_seed(0)
    model = AlignmentModel(vt, vs, vp, SMALL)
    return corpus, model, binner


class TestVocab:
    def test_text_tokenization(self):
        assert text_tokens("An Alcohol, really!") == \
            ["an", "alcohol", ",", "really", "!"]

    def test_binner_covers_range(self, setup):
        _, _, binner = setup
        for name in binner.names:
            assert binner.bin(name, -1e9) == 0
            assert binner.bin(name, 1e9) == binner.k - 1

    def test_property_tokens_in_vocab(self, setup):
        corpus, model, binner = setup
        for triplet in corpus:
            for token in property_tokens(binner, triplet.properties.values):
                assert model.vocab_p.id(token) >= 5  # not UNK/special

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            build_vocabularies([])


class TestLosses:
    def test_total_weighting_identity(self):
        parts = [torch.tensor(v) for v in (0.2, 0.3, 1.0, 1.0, 2.0, 2.0)]
        assert total_loss(*parts, alpha=1.0, beta=5.0).item() == \
            pytest.approx(22.5)

    def test_negative_weight(self):
        parts = [torch.tensor(0.0)] * 6
        with pytest.raises(NegativeWeight):
            total_loss(*parts, alpha=-1.0, beta=5.0)

    def test_uniform_batch_contrastive_value(self, setup):
        _, model, _ = setup
        cls = torch.randn(1, SMALL.dim).repeat(4, 1)
        value = contrastive_loss(model, cls, cls.clone(), "text").item()
        assert value == pytest.approx(2 * math.log(4), abs=1e-5)

    def test_contrastive_batch_too_small(self, setup):
        _, model, _ = setup
        one = torch.randn(1, SMALL.dim)
        with pytest.raises(BatchTooSmall):
            contrastive_loss(model, one, one, "text")

    def test_match_label_out_of_range(self, setup):
        _, model, _ = setup
        cls = torch.randn(2, SMALL.dim)
        with pytest.raises(LabelOutOfRange):
            match_loss(model, cls, cls, torch.tensor([0, 2]), "text")

    def test_clm_target_too_short(self, setup):
        _, model, _ = setup
        tokens = pad_batch([[1, 6, 7]])
        _, states = model.enc["smiles"](tokens)
        with pytest.raises(TargetTooShort):
            clm_loss(model, states, tokens, torch.tensor([[2]]), "text")

    def test_token_id_out_of_range(self, setup):
        _, model, _ = setup
        bad = torch.tensor([[model.vocab_s.size + 3]])
        with pytest.raises(TokenIdOutOfRange):
            model.enc["smiles"](bad)


class TestTraining:
    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            train([], TrainConfig(epochs=1))

    def test_deterministic_per_seed(self):
        corpus = tiny_corpus()
        cfg = TrainConfig(epochs=2, batch_size=3, seed=9)
        a = train(corpus, cfg, SMALL).history
        b = train(corpus, cfg, SMALL).history
        assert a == b

    def test_zero_lr_constant_history(self):
        corpus = tiny_corpus()
        cfg = TrainConfig(epochs=3, batch_size=6, lr=0.0, seed=4)
        history = train(corpus, cfg, SMALL).history
        totals = [h.total for h in history]
        assert max(totals) - min(totals) < 1e-9

    def test_loss_decreases(self):
        corpus = tiny_corpus()
        history = train(corpus, TrainConfig(epochs=5, batch_size=6, seed=0),
                        SMALL).history
        assert history[-1].total < history[0].total

    def test_retrieval_bounds(self, setup):
        corpus, model, binner = setup
        for direction in ("s2p", "s2t"):
            value = retrieval_accuracy(model, binner, corpus, direction)
            assert 0.0 <= value <= 1.0

    def test_generate_caption_rejects_invalid(self, setup):
        _, model, _ = setup
        with pytest.raises(InvalidSmiles):
            generate_caption(model, "not-smiles(")

    def test_checkpoint_round_trip(self, tmp_path):
        corpus = tiny_corpus()
        result = train(corpus, TrainConfig(epochs=1, batch_size=6, seed=1),
                       SMALL)
        path = tmp_path / "ckpt.pt"
        save_checkpoint(result, result.model.binner, path)
        loaded, binner = load_checkpoint(path)
        for a, b in zip(result.model.parameters(), loaded.parameters()):
            assert torch.equal(a, b)
        assert binner.names == result.model.binner.names


class TestSynthesizeTriplets:
    def test_file_captions(self, tmp_path):
        captions = tmp_path / "caps.txt"
        captions.write_text("first\nsecond\nthird\n")
        triplets, skipped = synthesize_triplets(
            ["CCO", "bad(", "CCN"], caption_source="file",
            caption_file=captions,
        )
        assert [t.caption for t in triplets] == ["first", "third"]
        assert skipped == 1

    def test_missing_caption_file(self):
        with pytest.raises(MissingCaptionFile):
            synthesize_triplets(["CCO"], caption_source="file",
                                caption_file="/nonexistent/caps.txt")
