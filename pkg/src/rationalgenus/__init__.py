"""Rational genus bounds from Heegaard Floer correction terms, checked on lens spaces."""
from .dinvariant import d, d_gap, d_lens
from .errors import InconsistencyError, InputError, InternalConsistencyError, TruncationError
from .genusbounds import bound_report, genus_conversions, morse_reduce, slam_dunk
from .homology import KnotClass, LensSpace, Manifold, order_of_class
from .simpleknot import gradings_via_d, seifert_genus, theta, u_knot_gradings

__version__ = "0.1.0"
