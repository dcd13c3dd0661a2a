"""Fundamental groups of 3-dimensional small covers over simple polytopes."""
from .polytope import Polytope, build, f_vector, h_vector, parse_polytope, truncate_vertex
from .charmap import find_orientable_coloring, is_orientable, validate_charmap
from .morse import default_order, morse_data, order_from_heights
from .cover import cw_presentation, heegaard_report, simplify, wu_yu_presentation
from .pi1 import abelianization, count_homs, minimal_presentation, parse_presentation

__version__ = "0.1.0"
