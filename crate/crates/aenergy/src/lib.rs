//! File formats, corpus sweeps and table reproduction on top of
//! [`aenergy_core`].
//!
//! - [`io`]: graph6, edge lists, the `name:params` family language.
//! - [`harness`]: exhaustive/random corpora, bound sweeps, equality checks.

mod error;
pub mod harness;
pub mod io;

pub use error::{Error, Result};
