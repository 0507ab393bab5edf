"""Networked anti-coordination games and the maximum independent cut problem."""
from .errors import (
    ExhaustiveLimitError,
    FormatError,
    GraphFormatError,
    PreconditionError,
    SatFormatError,
)
from .game import (
    DynamicsTrace,
    GameParams,
    best_response_dynamics,
    frustration,
    is_local_min_frustration,
    is_nash,
    is_polar_equilibrium,
    player_payoff,
    polar_params,
)
from .graph import (
    Graph,
    cut_size,
    is_independent,
    is_maximal_independent,
    max_degree,
    parse_graph,
    serialize_graph,
)
from .reductions import (
    ReductionCertificate,
    brute_force_mis,
    check_certificate,
    recover_assignment,
    recover_mis,
    reduce_2sat_to_micut,
    reduce_mis_to_micut,
)
from .sat import (
    Max2SatInstance,
    brute_force_opt,
    evaluate,
    majority_heuristic,
    parse_instance,
    preprocess,
)
from .solvers import IndependentCutSolution, exact_micut, greedy_micut, local_search_micut

__version__ = "0.1.0"
