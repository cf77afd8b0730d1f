"""Clique colourings of graphs and G(n, 1/2) experiments.

Pivot greedy colouring, exact and brute-force clique chromatic numbers, the
colour-class audit, closed-form bounds, and Monte Carlo checks of the
dominating-clique event and Property C.
"""
__version__ = "0.1.0"

from .bounds import (
    adversary_palette_size,
    bound_report,
    expected_dominating_cliques,
    greedy_palette_size,
    lemma1_params,
    mmp_upper_bound,
    theorem1_bounds,
)
from .cliques import (
    contains_maximal_clique,
    count_dominating_cliques,
    enumerate_maximal_cliques,
    extend_to_maximal,
    find_dominating_clique,
    is_clique,
    is_maximal_clique,
)
from .coloring import (
    AuditTrace,
    Coloring,
    GreedyStats,
    audit_coloring,
    brute_force_chi_c,
    exact_chi_c,
    greedy_clique_coloring,
    verify_clique_coloring,
)
from .errors import BudgetExceeded, InputError, NotFoundWithinBudget, ParseError
from .formats import read_coloring, read_graph, write_coloring, write_graph
from .graph import (
    GenParams,
    Graph,
    VertexSet,
    gen_random_graph,
    induced_subgraph,
    non_neighbors,
    non_neighbors_in,
)
from .probchecks import (
    estimate_lemma1_probability,
    lemma1_event_holds,
    property_c_spot_check,
)
