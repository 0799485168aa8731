//! Exact verification engine for the Chevalley and creation/annihilation
//! generator (CAG) presentations of the quantum superalgebra U_q[sl(n+1|m)]
//! and its classical limit.

pub mod coherence;
pub mod error;
pub mod fock;
pub mod linalg;
pub mod matrep;
pub mod rewrite;
pub mod presentations;
pub mod scalar;
pub mod status;
pub mod suites;
pub mod superfree;

pub use error::{Error, Result};
pub use scalar::{Rat, Scalar};
pub use status::{Evidence, Status, Verification};

/// Engine version recorded in reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
