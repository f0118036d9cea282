"""Exact Z-modular data: quantum S/T matrices, symbol Fourier matrices,
Verlinde fusion rings, and the theorem-level checks tying them together."""

from .cyclo import CycNum, root_of_unity
from .datum import ModularDatum
from .fusion import FusionRing, check_associativity, sl2z_relations, unitarity, verlinde
from .lattice import RootDatum, Weight, alcove, build_root_datum, sublattice_ops
from .quantum import ModularContext, WeightPair
from .symbols import (
    Symbol,
    ennola,
    enumerate_symbols,
    fourier_entry,
    frobenius,
    iota,
    malle_datum,
    special_symbols,
    symbol_from_pair,
)

__all__ = [
    "CycNum",
    "FusionRing",
    "ModularContext",
    "ModularDatum",
    "RootDatum",
    "Symbol",
    "Weight",
    "WeightPair",
    "alcove",
    "build_root_datum",
    "check_associativity",
    "ennola",
    "enumerate_symbols",
    "fourier_entry",
    "frobenius",
    "iota",
    "malle_datum",
    "root_of_unity",
    "sl2z_relations",
    "special_symbols",
    "sublattice_ops",
    "symbol_from_pair",
    "unitarity",
    "verlinde",
]
__version__ = "0.1.0"
