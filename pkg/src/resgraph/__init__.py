"""Topological invariants of normal surface singularities from resolution graphs."""
__version__ = "0.1.0"

from .graph import (GraphSyntaxError, InvalidGraphError, ResolutionGraph, VertexData,  # noqa: E402
                    intersection_form, is_negative_definite, parse_graph, read_graph,
                    serialize, validate)
from .cycles import (PreconditionError, canonical_cycle, connecting_sequence,  # noqa: E402
                     euler_char, fundamental_cycle)
from .elliptic import elliptic_sequence, minimally_elliptic_cycle  # noqa: E402
from .invariants import HypothesisError, classify, geometric_genus  # noqa: E402
