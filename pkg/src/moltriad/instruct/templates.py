"""Instruction templates for the four downstream tasks.

Wordings are fixed; numeric substitutions are formatted to two decimals.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InstructError, MissingConstraintProperty, UnknownProperty
from .triplets import Triplet

MC = "mc"
TBMG = "tbmg"
MPP = "mpp"
MCMG = "mcmg"
TASKS = (MC, TBMG, MPP, MCMG)

CONSTRAINT_PROPERTIES = ("BalabanJ", "ExactMolWt", "MolLogP", "TPSA", "QED")

# the two single-property-prediction defaults
DEFAULT_MPP_PROPERTIES = ("ExactMolWt", "MolLogP")

MC_TEMPLATE = "How to describe this molecule {smiles}?"
TBMG_TEMPLATE = "Can you give a molecule SMILES and the molecule is {caption}?"
MPP_TEMPLATE = "Can you predict the specific {prop} values of the molecule? {smiles}"
MCMG_TEMPLATE = (
    "Can you give a molecule SMILES which with the value of BalabanJ is "
    "{BalabanJ}, the value of ExactMolWt is {ExactMolWt}, the value of "
    "MolLogP is {MolLogP}, the value of TPSA is {TPSA}, the value of QED is "
    "{QED}?"
)


@dataclass(frozen=True)
class InstructionRecord:
    task: str
    instruction: str
    response: str
    source_smiles: str

    def as_dict(self) -> dict[str, str]:
        return {
            "task": self.task,
            "instruction": self.instruction,
            "response": self.response,
            "source_smiles": self.source_smiles,
        }


def fill_template(
    task: str, triplet: Triplet, mpp_property: str | None = None
) -> InstructionRecord:
    if task == MC:
        return InstructionRecord(
            MC, MC_TEMPLATE.format(smiles=triplet.smiles), triplet.caption,
            triplet.smiles,
        )
    if task == TBMG:
        caption = triplet.caption.rstrip(".")
        return InstructionRecord(
            TBMG, TBMG_TEMPLATE.format(caption=caption), triplet.smiles,
            triplet.smiles,
        )
    values = triplet.properties.as_dict()
    if task == MPP:
        prop = mpp_property or DEFAULT_MPP_PROPERTIES[0]
        if prop not in values:
            raise UnknownProperty(prop)
        return InstructionRecord(
            MPP,
            MPP_TEMPLATE.format(prop=prop, smiles=triplet.smiles),
            f"{values[prop]:.2f}",
            triplet.smiles,
        )
    if task == MCMG:
        missing = [p for p in CONSTRAINT_PROPERTIES if p not in values]
        if missing:
            raise MissingConstraintProperty(", ".join(missing))
        filled = MCMG_TEMPLATE.format(
            **{p: f"{values[p]:.2f}" for p in CONSTRAINT_PROPERTIES}
        )
        return InstructionRecord(MCMG, filled, triplet.smiles, triplet.smiles)
    raise InstructError(f"unknown task {task!r}")
