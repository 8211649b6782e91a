//! Symmetric monomial ideals stored by their partition generators.
//!
//! A symmetric monomial ideal in `K[x_1, …, x_n]` is determined by the
//! sorted exponent vectors of its minimal generators, one per orbit of the
//! symmetric group. [`SymmetricIdeal`] works entirely on those partitions;
//! [`oracle::MonomialIdeal`] is the uncompressed reference it is checked
//! against.

pub mod budget;
pub mod corpus;
pub mod decomp;
pub mod differential;
pub mod error;
pub mod invariants;
pub mod oracle;
pub mod partitions;
pub mod polymatroid;
mod ser;
pub mod symideal;
pub mod toric;

pub use error::{Error, Result};
pub use oracle::{MonomialIdeal, MonomialPrime, SymbolicMode};
pub use partitions::{part_of, Exponent, Partition};
pub use symideal::{IdealSpec, SymmetricIdeal};
pub use toric::FiberMoves;
