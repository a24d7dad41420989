//! Exact computations around spinor bundles of real Grassmannians: Young
//! diagram combinatorics, classical characters, Littlewood–Richardson data,
//! dimension formulas, spinor decompositions, binomial identities and Dirac
//! spectrum data.

pub mod bigjson;
pub mod dims;
pub mod dirac;
pub mod error;
pub mod identities;
pub mod lie;
pub mod lr;
pub mod partitions;
pub mod report;
pub mod spinor;

pub use error::{Error, Result};
pub use lie::{AlgebraId, Family, Weight, WeightMultiset};
pub use partitions::Partition;
