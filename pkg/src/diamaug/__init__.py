"""Single-shortcut diameter minimisation for paths and trees in metric spaces."""
from .approx import ApproxConfig, approx_optimal_shortcut, build_representatives
from .decision import build_context, check_o_for_shortcut, decide, n_feasible_interval
from .instances import (
    InstanceError,
    generate,
    load_instance,
    parse_instance,
    random_path,
    random_tree,
)
from .metric import MetricInstance, PathInstance, TreeInstance, compute_prefix_sums, validate_metric
from .optimize import OptResult, optimal_shortcut
from .oracle import (
    augmented_diameter_dijkstra,
    brute_force_path,
    brute_force_tree,
    path_diameter_dijkstra,
)
from .rmq import SparseTableMin
from .tree import (
    caterpillarize,
    longest_path_data,
    longest_path_intersection,
    tree_diameter_path,
    tree_optimal_shortcut,
)
from .unicyclic import (
    CaterpillarInstance,
    FourPartValues,
    Shortcut,
    caterpillar_diameter_with_shortcut,
    caterpillar_four_parts,
    four_parts,
    path_diameter_with_shortcut,
)
from .wspd import build_split_tree, compute_wspd, validate_wspd, wspd

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
