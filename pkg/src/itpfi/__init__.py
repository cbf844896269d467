"""ITPFI specifications and their T-set series."""

from .documents import load_spec, parse_spec_document
from .models import IN, OUT, UNDECIDED, ITPFISpec, TsetRow, TsetTable, TsetVerdict, eigenvalue_list
from .series import (
    constant_spec,
    explicit_spec,
    lattice_generator,
    periodic_spec,
    powers_density_matrix,
    powers_lattice_grid,
    powers_lattice_member,
    powers_spec,
    tensor_spec,
    tset_membership,
    tset_scan,
    tset_term,
)

__all__ = [
    "IN",
    "OUT",
    "UNDECIDED",
    "ITPFISpec",
    "TsetRow",
    "TsetTable",
    "TsetVerdict",
    "eigenvalue_list",
    "constant_spec",
    "periodic_spec",
    "explicit_spec",
    "powers_spec",
    "powers_density_matrix",
    "lattice_generator",
    "powers_lattice_grid",
    "powers_lattice_member",
    "tset_term",
    "tset_membership",
    "tset_scan",
    "tensor_spec",
    "parse_spec_document",
    "load_spec",
]
