"""tropcc: S_n-equivariant weight-0 cohomology of tropical moduli of curves.

Computes the reduced rational cohomology of the spaces of n-marked genus-g
tropical curves as symmetric-group representations, by running graph
complexes of stable 2-connected graphs with coefficients in compactly
supported cohomology of configuration spaces of points on graphs, with exact
rational arithmetic throughout.
"""

from .multigraph import (HalfEdgeGraph, GraphAut, ContractionData,
                         GraphCategory, canonical_form, automorphisms,
                         contract, enumerate_category, a_edges,
                         count_stable_weighted_types)
from .config_complex import (ConfCell, CochainComplexCc, build_cc, cohomology,
                             aut_action, sn_action, contraction_pullback,
                             compose_check, ConfOrbitModel)
from .exact_linalg import (RationalSparseMatrix, Subquotient, reynolds_project,
                           restrict_map, solve_columns)
from .sym_rep import (partitions, class_size, mn_character, Character,
                      SeminormalRep, irreducible_rep, isotypic_projector)
from .graph_complex import (GraphComplexSetup, IsotypicSlice, run_isotypic,
                            special_edge_classify, term_character, hgc_degree)
from .pipeline import JobSpec, ResultTable, compute, conf_report, verify

__version__ = "0.1.0"
