//! Minimum edge-cut analysis for small simple graphs.
//!
//! The library enumerates the complete family of minimum edge-cuts of a
//! graph, builds the intersection graph of that family (the *mincut graph*),
//! iterates the construction as an operator on graphs, verifies the
//! structural laws relating graph families to their mincut graphs,
//! synthesizes a host graph whose mincut graph matches a given target, and
//! searches for minimal r-uniform set representations.
//!
//! Everything here is exact and desk-scale: enumeration is exponential by
//! design and guarded by [`Limits`].

pub mod atlas;
pub mod graph;
pub mod intersection;
pub mod io;
pub mod iso;
pub mod laws;
pub mod mincut;
pub mod synthesis;

mod error;

pub use error::{Error, Result};
pub use graph::{family, DegreeProfile, Graph};
pub use intersection::{
    build_mincut_graph, operator_trace, MincutGraph, OperatorIndex, OperatorTrace,
};
pub use iso::{canonical_certificate, canonical_form, isomorphic, IsoResult};
pub use laws::{property_report, search_mincut_duals, DualSearchReport, PropertyReport};
pub use mincut::{brute_force_mincuts, edge_connectivity, enumerate_mincuts, MincutFamily};
pub use synthesis::{
    ix_upper_bound, r_intersection_number, synthesize_host, IntersectionCertificate,
    SynthesisReport,
};

/// Bounds for the exponential search routines.
///
/// The bipartition sweep visits `2^(n-1)` vertex subsets and the brute-force
/// cut oracle visits `C(m, k)` edge subsets per cardinality level; both abort
/// with [`Error::SizeLimitExceeded`] instead of running away.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by the bipartition sweep.
    pub max_n: usize,
    /// Largest number of subset checks a single exhaustive search may spend.
    pub max_subsets: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 24,
            max_subsets: 5_000_000,
        }
    }
}

impl Limits {
    /// Default limits with a different sweep bound.
    pub fn with_max_n(max_n: usize) -> Self {
        Limits {
            max_n,
            ..Limits::default()
        }
    }
}
