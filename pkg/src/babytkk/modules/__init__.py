"""Windowed module computations: induced modules, contravariant forms,
sl2-hat subalgebras, highest-weight modules and the vacuum ideal window."""

from babytkk.modules.hw import (
    ModuleWindow, WeightData, build_verma_window, gram_rank_stabilized, highest_weight_action,
    integrability_check, triples_equivalent, validate_triple,
)
from babytkk.modules.sl2 import Sl2Embedding, all_embeddings, sl2_embedding, sl2_vacuum_windows
from babytkk.modules.vacuum import ideal_window
from babytkk.modules.verma import InducedModule

__all__ = [
    "InducedModule",
    "ModuleWindow",
    "Sl2Embedding",
    "WeightData",
    "all_embeddings",
    "build_verma_window",
    "gram_rank_stabilized",
    "highest_weight_action",
    "ideal_window",
    "integrability_check",
    "sl2_embedding",
    "sl2_vacuum_windows",
    "triples_equivalent",
    "validate_triple",
]
