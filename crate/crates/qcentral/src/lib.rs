//! Exact computation of central (Casimir-type) elements of the quantized
//! enveloping algebras U_q(g) for the simply-laced families A and D, and the
//! continuous-time Markov generators of exclusion type they induce.
//!
//! The pipeline: root data ([`cartan`]) feeds the negative-half algebra and
//! its bilinear pairing ([`uqalg`]); per-weight-space linear algebra builds
//! PBW bases, the diagonal pairing matrix and sparse change-of-basis
//! inverses ([`pbw`]); dual bases assemble into a central element
//! ([`central`]); tensor-power representations verify centrality and produce
//! Hamiltonians ([`rep`]); the ground-state transform turns those into
//! exclusion-process generators with problematic-state discarding and a
//! Gillespie simulator ([`markov`]); [`bench`] reproduces the contrast with
//! the floating-point interpolation approach. Everything upstream of the
//! simulator is exact arithmetic over Q(q) — no floats anywhere.

pub mod bench;
pub mod cartan;
pub mod central;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod markov;
pub mod pbw;
pub mod qsym;
pub mod rep;
pub mod uqalg;

pub use error::{Error, Result};

/// Tool version stamped into every output artifact.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The q-integer convention recorded in outputs: symmetric q-integers
/// [n] = (q^n - q^-n)/(q - q^-1).
pub const Q_INT_CONVENTION: &str = "symmetric";
