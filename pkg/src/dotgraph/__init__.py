"""Construct, verify, search for and refute dot product representations of graphs."""

from .graph import (
    Graph,
    GraphError,
    InstanceTooLarge,
    complement,
    components,
    gen_anticycle,
    gen_complete_minus_matching,
    gen_cycle,
    gen_named,
    induced_subgraph,
    is_path_or_cycle,
    is_triangle_free,
    min_maximal_independent_set_size,
)
from .model import (
    ModelError,
    ModeMixError,
    VectorModel,
    VerificationReport,
    angular_order,
    induced_graph,
    is_between,
    scale_model,
    verify_model,
)

__version__ = "0.1.0"
