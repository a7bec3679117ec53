//! Exact enumeration, bijections, and truncated power series for ballot
//! permutations and their descent, peak, and depth statistics.

pub mod combinat;
pub mod error;
pub mod oddorder;
pub mod par;
pub mod perm;
pub mod rcmap;
pub mod series;
pub mod verify;

pub use error::{Error, Result};
pub use par::Exec;
pub use perm::{GroundSet, Permutation, StatTable, Statistic};
