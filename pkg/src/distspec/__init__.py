"""Distance spectra of graphs: exact and numeric spectra, families, quotients, checks and searches."""

from .canon import are_isomorphic, canonical_form, certificate, isomorphism
from .exact import (Polynomial, char_poly, det_bareiss, eigen_multiplicity_exact, nullspace,
                    poly_eval, poly_integer_roots, rank_nullity)
from .families import (TreeRecipe, build_t_family, complete, complete_multipartite, cycle,
                       double_star, path, petersen, star, t42_spider)
from .graph import (DisconnectedGraphError, Graph, Graph6Error, GraphError, diameter,
                    distance_matrix, encode_graph6, girth, is_c3c4_free, is_complete_multipartite,
                    is_tree, laplacian_matrix, parse_graph6, pendant_counts)
from .numeric import (Spectrum, count_distinct, distance_spectrum, eig_symmetric, inertia,
                      laplacian_spectrum)
from .quotient import Partition, quotient, quotient_eigs_subset_check
from .search import SearchReport, count_eigs_in_interval, recognize_t_family, run_search
from .theorems import Verdict, classify_three_distinct

__all__ = [name for name in dir() if not name.startswith("_")]
