//! Simplicial complexes, Hodge Laplacians and a Fourier-coined discrete-time
//! quantum walk used to detect n-down simplicial communities.
//!
//! ```
//! use simplex_walk::{clique_complex, parse_edge_list, KARATE_EDGE_LIST};
//!
//! let edges = parse_edge_list(KARATE_EDGE_LIST).unwrap();
//! let complex = clique_complex(&edges, 4).unwrap();
//! assert_eq!(complex.counts(), vec![34, 78, 45, 11, 2]);
//! ```

pub mod community;
pub mod complex;
pub mod error;
pub mod hodge;
pub mod qwalk;
pub mod scalar;

pub use community::{
    detect_communities, exact_down_communities, exact_up_communities, modularity_matrix,
    simplicial_modularity, verify_symmetry, CommunityPartition, DetectOptions, Detection,
    DetectionRound, ModularityReport, SymmetryReport, Threshold,
};
pub use complex::{
    clique_complex, clique_complex_with_vertices, parse_edge_list, Adjacency, AdjacencyMatrix,
    ChainVector, IncidenceMatrix, Simplex, SimplicialComplex, VertexId,
};
pub use error::{Error, Result};
pub use hodge::{
    betti_number, hodge_laplacian, numerical_rank, spectrum, symmetric_eigenvalues,
    verify_chain_identities, ChainIdentityReport, HodgeLaplacian, SpectrumReport,
    DEFAULT_KERNEL_TOLERANCE,
};
pub use qwalk::{
    amplitude_lower_bound, finite_time_average, long_time_average_spectral, transition_probability,
    transition_table_at, Estimator, QuantumState, TransitionTable, UnitarySpectrum, UnitaryWalk,
    WalkSpace, DEFAULT_PHASE_TOLERANCE, DEFAULT_TIME_STEPS,
};
pub use scalar::{Coefficient, LinalgReal, Real};

/// Zachary's karate club network: 34 members, 78 ties, 1-indexed.
pub const KARATE_EDGE_LIST: &str = include_str!("../data/karate.txt");

/// Members of the Mr. Hi faction in the karate club split; the rest sided
/// with the Officer.
pub const KARATE_MR_HI_FACTION: [u32; 17] =
    [1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 12, 13, 14, 17, 18, 20, 22];

pub type Walk = qwalk::UnitaryWalk<f64>;
pub type Walk32 = qwalk::UnitaryWalk<f32>;
pub type Spectrum = qwalk::UnitarySpectrum<f64>;
pub type Table = qwalk::TransitionTable<f64>;
pub type Modularity = community::ModularityReport<f64>;
pub type RationalChain = ChainVector<num_rational::Ratio<i64>>;
pub type IntegerChain = ChainVector<i64>;
