"""Almost-uniform sampling of labelled posets via a Metropolis chain on DAGs."""
from .graph import (
    CycleError,
    Dag,
    PosetKey,
    class_size_exponent,
    empty_dag,
    hasse_edges,
    poset_key,
    transitive_closure,
    transitive_reduction,
    would_create_cycle,
)
from .chain import (
    ChainConfig,
    ChainState,
    generate_poset,
    mc_step,
    mcstar_step,
    run_chain,
    sample_posets,
)

__version__ = "0.1.0"
