//! Identity checks against enumeration oracles and external data.

mod corollaries;
mod identities;
mod oeis;
mod report;

pub use corollaries::{bnd_multinomial, check_bnd_multinomial, eulerian_catalan_check};
pub use identities::{cmd_verify, identity, run_identity, Identity, IDENTITIES};
pub use oeis::{cmd_oeis, OeisBFile, SEQUENCES};
pub use report::{Counterexample, Status, VerificationReport};
