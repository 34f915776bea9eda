"""Independent oracles used to cross-check the multiplicity engine and conductor formulas."""

from .chartable import Family, GL2CharTable, char_table_repdata
from .cohen_oesterle import OracleSpace, QuadraticChar, co_dim, genus_x0, newspace_inversion
from .units import enumerate_bc_conductors

__all__ = [
    "Family",
    "GL2CharTable",
    "char_table_repdata",
    "OracleSpace",
    "QuadraticChar",
    "co_dim",
    "genus_x0",
    "newspace_inversion",
    "enumerate_bc_conductors",
]
