"""Star-k-PCG witnesses: construction, transformation, verification, exact solving."""
from .errors import (
    GraphValidationError,
    InternalInvariantError,
    InvalidWitnessError,
    ParseError,
    ResourceLimitError,
    StarPCGError,
    WitnessStructureError,
)
from .graph import (
    Graph,
    TreeClass,
    all_labeled_graphs,
    classify_tree,
    complement_graph,
    parse_graph,
    radius_and_centers,
)
from .witness import (
    Interval,
    VerifyReport,
    Witness,
    canonicalize,
    check_normal_form,
    classify_free,
    min_intervals,
    verify,
)
from .transforms import mirror, normalize, separate_pair_sums
from .operations import (
    OpReport,
    add_false_twins,
    add_isolated,
    add_pendants,
    add_true_twins,
    add_universal,
    complement_witness,
)
from .constructors import acyclic_witness, caterpillar_witness, lobster_witness, path_witness
from .lp import lp_feasible
from .solver import SolverCertificate, grid_upper_bound, is_star_k, star_number

__version__ = "0.1.0"
