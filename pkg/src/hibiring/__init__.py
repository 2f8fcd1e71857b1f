"""First syzygies and Betti numbers of Hibi rings of finite distributive lattices."""

from . import errors
from .betti import (
    GridBettiBreakdown,
    LinearityVerdict,
    PlanarBettiBreakdown,
    grid_betti,
    k_of,
    linearity_by_k,
    planar_betti,
    typed_minimal_histogram,
)
from .ideal import HibiIdeal, buchberger_check, hibi_ideal
from .lattice import (
    Lattice,
    enumerate_distributive,
    from_covers,
    from_json_dict,
    from_points,
    grid,
)
from .oracle import (
    first_betti_oracle,
    graded_betti_oracle,
    is_linear_first_syzygy,
)
from .syzygy import (
    TypedSyzygy,
    all_typed_generators,
    apply_phi,
    classify_pair,
    schreyer_pair,
    typed_generator,
)

__all__ = [
    "GridBettiBreakdown",
    "HibiIdeal",
    "Lattice",
    "LinearityVerdict",
    "PlanarBettiBreakdown",
    "TypedSyzygy",
    "all_typed_generators",
    "apply_phi",
    "buchberger_check",
    "classify_pair",
    "enumerate_distributive",
    "errors",
    "first_betti_oracle",
    "from_covers",
    "from_json_dict",
    "from_points",
    "graded_betti_oracle",
    "grid",
    "grid_betti",
    "hibi_ideal",
    "is_linear_first_syzygy",
    "k_of",
    "linearity_by_k",
    "planar_betti",
    "schreyer_pair",
    "typed_generator",
    "typed_minimal_histogram",
]
