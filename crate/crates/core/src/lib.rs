//! Exact rainbow connection numbers for small graphs, the extremal
//! constructions that pin both sides of the Nordhaus-Gaddum window
//! `4 <= rc(G) + rc(complement)` `<= n + 2`, and an exhaustive census
//! over all complementary connected pairs at desk scale.

pub mod canon;
pub mod census;
pub mod coloring;
pub mod constructions;
pub mod extend;
pub mod graph;
pub mod graph6;
pub mod rainbow;
pub mod solver;

pub use canon::{canonical_key, CanonicalKey};
pub use census::{
    enumerate_both_connected, ng_census, two_two_filter, verify_no_2_2, CensusError,
    CensusOptions, CensusReport, NgRecord, No22Report, TwoTwoVerdict,
};
pub use coloring::{ColoringError, EdgeColoring};
pub use constructions::{
    double_star, lower_family, small_case_pairs, ConstructError, ConstructedPair, FixtureCache,
    PairBundle,
};
pub use extend::{extend_rainbow_coloring, ExtendError};
pub use graph::{DegreeProfile, Diameter, Graph, GraphError, VertexSet};
pub use graph6::{parse_graph6, to_graph6, Graph6Error};
pub use rainbow::{find_rainbow_path, is_rainbow_connected};
pub use solver::{
    has_rainbow_k_coloring, rc_exact, rc_exact_with, rc_upper_tree, Evidence, RcCertificate,
    SolverError, SolverOptions,
};
