"""Group von Neumann algebras and finite ICC evidence."""

from .certificates import ball, free_subgroup_witness, icc_certificate, reduced_word_count
from .models import ICC_EVIDENCE, FreeSubgroupWitness, ICCCertificate, RegularBlockCheck
from .oracles import (
    MATRIX_A,
    MATRIX_B,
    SL3Z_GENERATOR_NOTE,
    FreeGroup,
    GroupOracle,
    LatticeGroup,
    MatrixGroup,
    ProductGroup,
    elementary_matrix,
    oracle_by_name,
    sl2z,
    sl2z_free_pair,
    sl3z,
)
from .regular import conjugacy_class_count, left_regular_algebra, left_translation, regular_block_check

__all__ = [
    "GroupOracle",
    "FreeGroup",
    "LatticeGroup",
    "MatrixGroup",
    "ProductGroup",
    "MATRIX_A",
    "MATRIX_B",
    "SL3Z_GENERATOR_NOTE",
    "ICC_EVIDENCE",
    "ICCCertificate",
    "FreeSubgroupWitness",
    "RegularBlockCheck",
    "elementary_matrix",
    "sl2z",
    "sl3z",
    "sl2z_free_pair",
    "oracle_by_name",
    "ball",
    "icc_certificate",
    "free_subgroup_witness",
    "reduced_word_count",
    "left_translation",
    "left_regular_algebra",
    "conjugacy_class_count",
    "regular_block_check",
]
