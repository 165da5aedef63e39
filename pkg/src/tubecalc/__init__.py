"""Tube combinatorics for cluster categories of tame type.

Coordinates and Hom calculus in stable tubes, rigid/Schurian
classification of the induced modules over a cluster-tilted algebra,
dimension vectors, and the certified decomposition of denominator
vectors into at most three rigid dimension vectors.
"""

from .config import RegionKind, TubeConfig, random_config, running_example_config, validate_config
from .coords import ZERO, CyclicInterval, TubeCoord, normalize, quasisocle, quasitop, tau, wing
from .classify import ClassificationRecord, classify, classify_grid, strongly_schurian
from .decompose import Companions, DecompositionCertificate, companions, d_vector, decompose, diamond_cells
from .dimvec import DimVector, dim_entry, dim_vector, mesh_table, preprojective_seed
from .hom import HomTable, hammock, hom_dim_cluster, hom_dim_tube, serial_oracle_hom_dim
from .replab import (
    ColouredQuiver,
    QuiverRep,
    build_representation,
    check_relations,
    colour_dim_vector,
    decomposable_over_field,
    hom_dim_reps,
    parse_coloured_quiver,
)

__version__ = "0.1.0"

__all__ = [
    "ClassificationRecord",
    "ColouredQuiver",
    "Companions",
    "CyclicInterval",
    "DecompositionCertificate",
    "DimVector",
    "HomTable",
    "QuiverRep",
    "RegionKind",
    "TubeConfig",
    "TubeCoord",
    "ZERO",
    "build_representation",
    "check_relations",
    "classify",
    "classify_grid",
    "colour_dim_vector",
    "companions",
    "d_vector",
    "decomposable_over_field",
    "decompose",
    "diamond_cells",
    "dim_entry",
    "dim_vector",
    "hammock",
    "hom_dim_cluster",
    "hom_dim_reps",
    "hom_dim_tube",
    "mesh_table",
    "normalize",
    "parse_coloured_quiver",
    "preprojective_seed",
    "quasisocle",
    "quasitop",
    "random_config",
    "running_example_config",
    "serial_oracle_hom_dim",
    "strongly_schurian",
    "tau",
    "validate_config",
    "wing",
]
