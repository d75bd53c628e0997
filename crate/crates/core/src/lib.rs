//! Exact computations for Kleinian groups with matrix entries in the
//! biquadratic field `Q(i, sqrt2)`: word evaluation, trace fields, cusp
//! moduli up to `PGL_2(Q)`, integrality of traces, mod-2 homology of a
//! presented family, and right-angled circle configurations.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod geometry;
pub mod invariants;
pub mod linalg;
pub mod moebius;
pub mod numfield;
pub mod parse;

pub use error::{Error, Result};
