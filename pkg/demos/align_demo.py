"""Train the toy tri-modal aligner on a small synthetic corpus and probe it.

Run from the repository root:

    python3 demos/align_demo.py
"""
import random

from moltriad.align import TrainConfig, generate_caption, retrieval_accuracy, train
from moltriad.chem import is_valid_smiles, parse_smiles
from moltriad.instruct import CONSTRAINT_PROPERTIES, Triplet
from moltriad.props import descriptor_vector

FRAGMENTS = [
    "C", "CC", "CCO", "CCN", "C(=O)O", "c1ccccc1", "C1CCCCC1", "CO", "CS",
    "C(F)(F)F", "c1ccncc1", "C(=O)N", "CCl", "C#N", "C=C",
]
WORDS = (
    "small polar aromatic cyclic chain amine acid alcohol fluorinated "
    "heteroaromatic amide nitrile alkene compound molecule"
).split()


def build_corpus(count: int, seed: int) -> list[Triplet]:
    rng = random.Random(seed)
    corpus, seen = [], set()
    while len(corpus) < count:
        smiles = "".join(rng.choice(FRAGMENTS) for _ in range(rng.randint(1, 3)))
        if smiles in seen or not is_valid_smiles(smiles):
            continue
        seen.add(smiles)
        caption = " ".join(rng.sample(WORDS, 4)) + "."
        vector = descriptor_vector(
            parse_smiles(smiles), list(CONSTRAINT_PROPERTIES)
        )
        corpus.append(Triplet(smiles, caption, vector))
    return corpus


def main() -> None:
    corpus = build_corpus(96, seed=13)
    cfg = TrainConfig(epochs=12, batch_size=16, seed=2)
    print(f"training on {len(corpus)} triplets, {cfg.epochs} epochs ...")
    result = train(corpus, cfg)
    for epoch, h in enumerate(result.history, start=1):
        if epoch == 1 or epoch % 4 == 0:
            print(f"  epoch {epoch:2d}  total {h.total:7.2f}  "
                  f"clm {h.clm_st + h.clm_sp:6.2f}  "
                  f"contrastive {h.contrastive_st + h.contrastive_sp:5.2f}")

    binner = result.model.binner
    batch = corpus[:16]
    for direction in ("s2p", "s2t"):
        acc = retrieval_accuracy(result.model, binner, batch, direction)
        print(f"in-batch {direction} retrieval top-1: {acc:.3f} "
              f"(chance {1 / len(batch):.3f})")

    for smiles in ("CCO", "c1ccccc1"):
        print(f"greedy caption for {smiles}: "
              f"{generate_caption(result.model, smiles)!r}")


if __name__ == "__main__":
    main()
