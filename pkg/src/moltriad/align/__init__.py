"""Tri-modal (SMILES / text / property) alignment trainer."""
from .errors import (
    AlignError,
    BatchTooSmall,
    DivergedLoss,
    EmptyCorpus,
    InvalidSmiles,
    LabelOutOfRange,
    MissingCaptionFile,
    NegativeWeight,
    NonFiniteGradient,
    TargetTooShort,
    TokenIdOutOfRange,
)
from .gradcheck import grad_check
from .losses import (
    LossBreakdown,
    clm_loss,
    contrastive_loss,
    match_loss,
    total_loss,
)
from .model import AlignmentModel, Decoder, Encoder, ModelConfig, encode
from .train import (
    TrainConfig,
    TrainResult,
    generate_caption,
    load_checkpoint,
    retrieval_accuracy,
    save_checkpoint,
    synthesize_triplets,
    train,
)
from .vocab import (
    BOS,
    CLS,
    EOS,
    PAD,
    SPECIAL_TOKENS,
    UNK,
    PropertyBinner,
    Vocabulary,
    build_binner,
    build_vocabularies,
    decoder_sequence,
    encoder_sequence,
    pad_batch,
    property_tokens,
    text_tokens,
)

__all__ = [
    "AlignmentModel",
    "ModelConfig",
    "Encoder",
    "Decoder",
    "encode",
    "match_loss",
    "contrastive_loss",
    "clm_loss",
    "total_loss",
    "LossBreakdown",
    "grad_check",
    "TrainConfig",
    "TrainResult",
    "train",
    "retrieval_accuracy",
    "generate_caption",
    "synthesize_triplets",
    "save_checkpoint",
    "load_checkpoint",
    "Vocabulary",
    "PropertyBinner",
    "build_binner",
    "build_vocabularies",
    "text_tokens",
    "encoder_sequence",
    "decoder_sequence",
    "property_tokens",
    "pad_batch",
    "PAD",
    "CLS",
    "BOS",
    "EOS",
    "UNK",
    "SPECIAL_TOKENS",
    "AlignError",
    "EmptyCorpus",
    "TokenIdOutOfRange",
    "LabelOutOfRange",
    "BatchTooSmall",
    "TargetTooShort",
    "NegativeWeight",
    "NonFiniteGradient",
    "DivergedLoss",
    "InvalidSmiles",
    "MissingCaptionFile",
]
