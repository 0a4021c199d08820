"""Augmented semi-simplicial sets, their cylinders and subdivisions, and the
matrix calculus that predicts their cardinal sequences."""

from .actions import (CoSSObject, by_name, cone_sd_check, cosimp_cil, cosimp_cil0, cosimp_cil2,
                      cosimp_sd, cosimp_yoneda, cylinder, cylinder0, cylinder2, direct_cil_subcomplex,
                      direct_sd_subcomplex, extend, interior_count, subdivision)
from .seqmat import (AugMatrix, AugSequence, dot, invert_triangular, iterate_operator, matmul, named,
                     sd_seq, seq, seq_cone, seq_join, triangle_action)
from .sscore import (AugSSet, SSetMap, boundary, cardinal, cone_left, cone_right, gamma, hexagon, join,
                     subcomplex_of_gamma, validate)

__version__ = "0.1.0"
