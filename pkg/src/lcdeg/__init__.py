"""Exact computation toolkit for the local minimum degree of graphs."""

from .errors import CapExceeded, InputError, VerificationFailure
from .graph import (
    Graph,
    VertexSet,
    closed_odd_size,
    even_neighborhood,
    is_bipartite,
    local_complement,
    min_degree,
    neighbors,
    odd_neighborhood,
)
from .kernels import BACKEND
from .locmindeg import (
    DeltaLocResult,
    OrbitReport,
    delta_loc_bipartite,
    delta_loc_exact,
    delta_loc_via_orbit,
    falsifier_sample,
    lc_orbit,
)

__version__ = "0.1.0"
