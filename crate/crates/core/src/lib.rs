//! Exact computations in the rings `k[X,Y,Z,T]/(X^2*Y + g)`: normal forms,
//! weighted gradings and degree filtrations, exponential maps, and a
//! reproducible verification report over the translates of the
//! Koras-Russell threefold.

pub mod cli;
pub mod error;
pub mod expmap;
pub mod grading;
pub mod poly;
pub mod quotient;
pub mod replay;

pub use error::{Error, Result};
