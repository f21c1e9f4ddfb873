//! Exact-arithmetic engine for the six-vertex model on a lattice with a
//! reflecting boundary.
//!
//! Wavefunctions are computed two ways: by contracting double-row
//! monodromy operators over the 2^M-dimensional quantum space
//! ([`lattice`]) and by summing closed-form symmetric functions over
//! S_N × {±1}^N ([`symfunc`]). The domain-wall determinants
//! ([`detformula`]), the coordinate Bethe ansatz form ([`bethe`]) and the
//! identity checkers ([`verify`]) build on those two routes.
//!
//! Every quantity is a rational function of the parameters, so all
//! evaluation happens at rational points and every comparison is exact.

pub mod bethe;
pub mod detformula;
mod error;
pub mod lattice;
pub mod scalarfield;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{FockVector, ModelParams, OccupationConfig};
pub use scalarfield::{Constraints, SamplePoint, Scalar};
pub use verify::VerificationReport;
