"""Finite ternary semigroups, real semigroups and fans."""

from .characters import enumerate_characters, specialization_poset, specializes, zero_set
from .fan import FanModel, FanPreconditionError, closed_form_D, closed_form_Dt, fan_equivalence, make_fan
from .order import chain_length, fan_lattice, repr_order
from .represent import RSModel, check_rs_axioms, induce_D, three_rs, three_ts
from .textformat import ParseError, dump, load, parse, save
from .ts import (DegeneratePresentationError, FiniteTS, Presentation, StructureError, TSAxiomError,
                 check_ts_axioms, free_ts, from_presentation, satisfies_condition_z)

__version__ = "0.1.0"

__all__ = [
    "DegeneratePresentationError", "FanModel", "FanPreconditionError", "FiniteTS", "ParseError",
    "Presentation", "RSModel", "StructureError", "TSAxiomError", "chain_length", "check_rs_axioms",
    "check_ts_axioms", "closed_form_D", "closed_form_Dt", "dump", "enumerate_characters",
    "fan_equivalence", "fan_lattice", "free_ts", "from_presentation", "induce_D", "load", "make_fan",
    "parse", "repr_order", "satisfies_condition_z", "save", "specialization_poset", "specializes",
    "three_rs", "three_ts", "zero_set",
]
