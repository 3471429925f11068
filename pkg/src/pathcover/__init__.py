"""Path cover and path partition toolkit for oriented graphs."""

__version__ = "0.1.0"

from .graph import Digraph, Graph, from_edge_list, to_edge_list, underlying  # noqa: E402
from .families import Family, FamilySpec, generate, random_oriented, zigzag_pseudo_path  # noqa: E402
from .detectors import Condition, ConditionReport, Status, check_condition, max_pseudo_path_r  # noqa: E402
from .solvers import (  # noqa: E402
    CycleCoverCertificate,
    Mode,
    PathCoverCertificate,
    alpha,
    cc_exact,
    cp_exact,
    gallai_milgram_partition,
    hamiltonian_directed_path,
    pc_exact,
    pp_exact,
    traceable_sets,
)
from .constants import constants, ramsey_upper  # noqa: E402
from .cover import theorem_cover  # noqa: E402

__all__ = [
    "Condition", "ConditionReport", "CycleCoverCertificate", "Digraph", "Family", "FamilySpec", "Graph",
    "Mode", "PathCoverCertificate", "Status", "alpha", "cc_exact", "check_condition", "constants",
    "cp_exact", "from_edge_list", "gallai_milgram_partition", "generate", "hamiltonian_directed_path",
    "max_pseudo_path_r", "pc_exact", "pp_exact", "ramsey_upper", "random_oriented", "theorem_cover",
    "to_edge_list", "traceable_sets", "underlying", "zigzag_pseudo_path",
]
