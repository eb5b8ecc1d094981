"""Spectral theory of signed weighted graphs.

Data model and switching calculus for signed graphs, normalized signed
Laplacians with a self-contained Jacobi eigensolver, certificates for
spectra symmetric about 1, discrete-time heat dynamics with damped
2-periodic solutions, and motif replication with Dirichlet spectra.
"""

from .eigensolver import jacobi_eigh
from .graph import (
    BalanceClassification,
    Edge,
    GraphError,
    SignedGraph,
    SwitchingFunction,
    apply_switching,
    build_graph,
    check_isomorphism,
    classify_balance,
    connected_components,
    cycle_sign,
    is_bipartite,
    make_edge,
    negate,
)
from .graphio import dump_graph, graph_from_dict, graph_to_dict, load_graph
from .heat import (
    HeatTrajectory,
    PeriodicSolution,
    decompose_periodic,
    detect_periodic,
    heat_simulate,
    periodic_from_eigenpair,
    symmetric_eigenvalue_pairs,
)
from .motif import (
    Motif,
    MotifEigenvalueCheck,
    MotifInclusionReport,
    dirichlet_eigh,
    dirichlet_laplacian,
    extend_eigenvector,
    replica_id,
    replicate,
    verify_motif_inclusion,
)
from .spectral import (
    EigenDecomposition,
    adjacency_matrix,
    degree_matrix,
    degree_vector,
    eigh_m,
    is_spectrum_symmetric,
    laplacian,
    m_inner,
    m_norm,
    nonnegative_first_eigenvector_switch,
    rayleigh_quotient,
    spectrum,
    transition_matrix,
    vertex_vector,
)
from .symmetry import (
    BudgetExceeded,
    SearchBudget,
    SymmetryCertificate,
    find_bipartite_switching,
    find_symmetry_certificate,
    verify_certificate,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceClassification",
    "BudgetExceeded",
    "Edge",
    "EigenDecomposition",
    "GraphError",
    "HeatTrajectory",
    "Motif",
    "MotifEigenvalueCheck",
    "MotifInclusionReport",
    "PeriodicSolution",
    "SearchBudget",
    "SignedGraph",
    "SwitchingFunction",
    "SymmetryCertificate",
    "adjacency_matrix",
    "apply_switching",
    "build_graph",
    "check_isomorphism",
    "classify_balance",
    "connected_components",
    "cycle_sign",
    "decompose_periodic",
    "degree_matrix",
    "degree_vector",
    "detect_periodic",
    "dirichlet_eigh",
    "dirichlet_laplacian",
    "dump_graph",
    "eigh_m",
    "extend_eigenvector",
    "find_bipartite_switching",
    "find_symmetry_certificate",
    "graph_from_dict",
    "graph_to_dict",
    "heat_simulate",
    "is_bipartite",
    "is_spectrum_symmetric",
    "jacobi_eigh",
    "laplacian",
    "load_graph",
    "m_inner",
    "m_norm",
    "make_edge",
    "negate",
    "nonnegative_first_eigenvector_switch",
    "periodic_from_eigenpair",
    "rayleigh_quotient",
    "replica_id",
    "replicate",
    "spectrum",
    "symmetric_eigenvalue_pairs",
    "transition_matrix",
    "verify_certificate",
    "verify_motif_inclusion",
    "vertex_vector",
]
