"""Molecular descriptors, drug-likeness, and fingerprints."""
from .balaban import balaban_j
from .crippen import atom_contributions, atom_types, crippen_logp
from .errors import (
    KindMismatch,
    PropsError,
    UnknownDescriptorId,
    UnknownElementMass,
    UnsupportedKind,
)
from .fingerprints import Fingerprint, fingerprint, tanimoto
from .qed import (
    num_alerts,
    num_aromatic_rings,
    num_h_acceptors,
    num_h_donors,
    num_rotatable_bonds,
    qed,
    qed_properties,
)
from .registry import DESCRIPTORS, PropertyVector, descriptor_vector
from .tables import data_versions, default_registry_ids
from .tpsa import ertl_tpsa
from .weight import exact_mol_wt

__all__ = [
    "balaban_j",
    "crippen_logp",
    "atom_types",
    "atom_contributions",
    "ertl_tpsa",
    "exact_mol_wt",
    "qed",
    "qed_properties",
    "num_alerts",
    "num_aromatic_rings",
    "num_h_acceptors",
    "num_h_donors",
    "num_rotatable_bonds",
    "descriptor_vector",
    "PropertyVector",
    "DESCRIPTORS",
    "fingerprint",
    "Fingerprint",
    "tanimoto",
    "data_versions",
    "default_registry_ids",
    "PropsError",
    "UnknownElementMass",
    "UnknownDescriptorId",
    "UnsupportedKind",
    "KindMismatch",
]
