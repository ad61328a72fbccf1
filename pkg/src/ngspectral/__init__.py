"""Nordhaus-Gaddum spectral toolkit.

Adjacency spectra of graph/complement pairs, checkers for the eigenvalue
inequalities that bound them, the Kronecker-recursive extremal constructions
that approach those bounds, and exact/heuristic search for the extremal
functions themselves.
"""

from ngspectral.bounds import (
    BoundReport,
    RamseyCertificate,
    check_abs_sum_bottom,
    check_abs_sum_top,
    check_csikvari_terpai,
    check_fns_upper,
    check_fs_upper,
    check_nonpositive_eigenvalue,
    check_nosal,
    check_pair_bottom,
    check_pair_top,
    check_ramsey_sign,
    check_subset_squares,
    check_sum_squares_bottom,
    check_sum_squares_top,
    check_weyl_pair,
    ramsey_certificate,
    run_battery,
    violations,
)
from ngspectral.constructions import (
    Matrix01,
    a_spectrum_closed_form,
    construct_a,
    extremal_graph,
    witness_check,
)
from ngspectral.eigensolver import ConvergenceError, symmetric_eigenvalues
from ngspectral.graph6 import emit_graph6, parse_graph6
from ngspectral.graphs import (
    Graph,
    blowup_clique,
    blowup_independent,
    complement,
    complete,
    complete_bipartite,
    cycle,
    empty,
    erdos_renyi,
    generate,
    induced_subgraph,
    max_order,
    path,
)
from ngspectral.search import (
    ExtremalRecord,
    RatioRow,
    exhaustive_f,
    local_search_f,
    objective,
    ratio_table,
    target_ratio,
)
from ngspectral.spectra import (
    DEFAULT_TOL,
    Spectrum,
    adjacency_spectrum,
    blowup_spectrum_closed_form,
    mu,
    mu_bottom,
    regular_shift_spectrum,
    spectrum_pair,
    symmetric_spectrum,
)

__version__ = "0.1.0"
