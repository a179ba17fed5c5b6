"""Finite-type (Vassiliev) knot invariants of orders 2, 3 and 4.

Computes three independent formula families on combinatorial knot diagrams
(signed Gauss codes or braid closures), together with the chord-diagram and
weight-system algebra needed to state and cross-validate them: relation
generation, exact rational dimension counts, skein resolutions, and symbols.
"""

from .diagrams import (ChordDiagram, GaussCodeError, GaussDiagram,
                       SingularGaussDiagram, braid_closure_to_gauss,
                       canonicalize, chord_diagram_of, enumerate_chord_diagrams,
                       mirror, parse_braid_text, parse_gauss_code,
                       shift_basepoint)
from .invariants import (CrossingLocalData, WeightConstraintError,
                         admissible_builtin_w4, derivative_eval, local_data,
                         pairing, realize_chord_diagram, resolve, symbol_eval,
                         v2_lannes, v2_polyak_viro, v3_lannes, v3_polyak_viro,
                         v4_new, v4_polyak_viro)
from .moves import (BraidWord, applicable_sites, braid_rewrite, r1_delete,
                    r1_insert, r2_delete, r2_insert, random_equivalents)
from .patterns import ArrowPattern, PatternCombination
from .weights import (FourTermRelation, WeightSystem, all_builtin_weight_systems,
                      builtin_w2, builtin_w3, builtin_w4, check_weight_system,
                      eval_weight, four_term_relations, one_term_diagrams,
                      weight_space_basis, weight_space_dimension,
                      weight_system_from_lines, weight_system_to_lines)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
