//! elliptica: a numerical verification engine for elliptic and basic
//! hypergeometric series on root systems.
//!
//! The crate evaluates both sides of terminating summation and
//! transformation identities for A_n, C_n and D_n series at randomly
//! sampled, constraint-satisfying complex parameters, and certifies
//! lower-triangular transform matrices, their closed-form inverses, the
//! catalog of well-poised Bailey pairs and the lemmas that map pairs to
//! pairs.
//!
//! Entry points:
//! - [`elliptic_core`]: theta functions and q,p-shifted factorials;
//! - [`multi_index`]: lexicographic index domains and Vandermonde products;
//! - [`bailey`]: the six transform matrices, inverses, pairs and lemmas;
//! - [`registry`]: the identity catalog with sampling and two-sided checks;
//! - [`harness`]: the command-line front end (see the `elliptica` binary);
//! - `examples/`: one runnable example per capability.

// Formula transcriptions index variable vectors by the same r, s that
// appear in the products; iterator rewrites would obscure them.
#![allow(clippy::needless_range_loop)]

pub mod bailey;
pub mod certify;
pub mod elliptic_core;
pub mod error;
pub mod harness;
pub mod multi_index;
pub mod precision;
pub mod registry;
pub mod report;
pub mod sampling;

pub use error::{Error, Result};
pub use precision::{Cplx, Dd, PrecisionPolicy, Real, C64};
