"""Braided Majorana qubits: exact multi-particle sectors, root-of-unity
truncations, mixed-bracket Heisenberg-Lie algebras and their cross-checks."""

from .arith import (
    EXACT,
    FLOAT,
    CycScalar,
    Mat,
    acomm,
    comm,
    cyc,
    is_zero,
    kron,
)
from .qubit_core import (
    GENERIC,
    INF,
    BraidLevel,
    b_matrix,
    b_poly,
    convert_param,
    f_factor,
    gl11,
    level_from_g,
    level_from_s,
    level_of_root,
)
from .braided_fock import (
    BraidedSector,
    SectorSpec,
    build_sector,
    indist_projector,
    intertwiner,
    spectrum,
)

__version__ = "0.1.0"

__all__ = [
    "EXACT",
    "FLOAT",
    "CycScalar",
    "Mat",
    "acomm",
    "comm",
    "cyc",
    "is_zero",
    "kron",
    "GENERIC",
    "INF",
    "BraidLevel",
    "b_matrix",
    "b_poly",
    "convert_param",
    "f_factor",
    "gl11",
    "level_from_g",
    "level_from_s",
    "level_of_root",
    "BraidedSector",
    "SectorSpec",
    "build_sector",
    "indist_projector",
    "intertwiner",
    "spectrum",
]
