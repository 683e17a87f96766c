"""Associated orders of lattices in rational group algebras."""

from .groups import Group, Subgroup, make_group, normal_closure
from .group_algebra import AlgebraElement, idempotent, multiply, regular_rep, trace_element
from .lattices import (GroupLattice, TracePresentation, associated_order, colon,
                       from_presentation, intersection, is_ring, lattice_from_generators)

__version__ = "0.1.0"
