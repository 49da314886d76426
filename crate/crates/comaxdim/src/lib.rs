//! Exact computation on co-maximal ideal graphs of finite commutative rings.
//!
//! A ring is modeled as a finite product of chain-type local components
//! (every ideal of a component lies in a single chain), so ideals are level
//! vectors and the ideal lattice is a product of chains. The toolkit builds
//! the co-maximal ideal graph and its derived graphs, computes the strong
//! resolving graph, and obtains the strong metric dimension exactly through
//! a minimum vertex cover, cross-checked against definitional brute force.
//!
//! ```
//! use comaxdim::{ring::RingSpec, comaximal, solver, Caps};
//!
//! let spec = RingSpec::parse("Z4 x Z4 x Z8").unwrap();
//! let caps = Caps::default();
//! let gamma = comaximal::build_gamma(&spec, &caps).unwrap();
//! let sdim = solver::sdim_via_srg(&gamma, &caps).unwrap();
//! assert_eq!(sdim.value, 19);
//! ```

pub mod bitset;
pub mod checks;
pub mod comaximal;
pub mod config;
pub mod format;
pub mod graph;
pub mod report;
pub mod ring;
pub mod solver;
pub mod srg;

pub use config::{Caps, OracleMode};

/// Errors shared across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// The ring spec text could not be parsed.
    #[error("malformed ring spec: {0}")]
    ParseSpec(String),
    /// A graph with no vertices was requested or required.
    #[error("empty graph: {0}")]
    EmptyGraph(String),
    /// An enumeration or solve exceeded its configured cap.
    #[error("{what} needs {needed} but the cap is {cap}; raise the cap to proceed")]
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
    /// The operation requires a connected graph.
    #[error("graph is disconnected: {0}")]
    Disconnected(String),
    /// A vertex index outside the graph was used.
    #[error("vertex index {0} out of range")]
    UnknownVertex(usize),
    /// Ideals from different ring specs were combined.
    #[error("ideal does not belong to this ring spec: {0}")]
    SpecMismatch(String),
    /// An argument violates a documented precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// Unknown export or import format.
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    /// Imported graph data failed validation.
    #[error("invalid graph data: {0}")]
    InvalidGraphData(String),
    /// Arithmetic overflow while evaluating a closed form.
    #[error("overflow computing {0}")]
    Overflow(&'static str),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
