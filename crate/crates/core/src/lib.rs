//! Exact algebra of knot S-equivalence.
//!
//! Seifert matrices and their abelian invariants, the S-equivalence matrix
//! moves, integral symplectic standardization, the disk-band standard form,
//! delta-move equivalence of pure braids and doubled string links, and
//! Seifert matrices of braid closures checked against a reduced Burau oracle.
//! All arithmetic is exact.

pub mod braidclosure;
pub mod cli;
pub mod error;
pub mod intlin;
pub mod laurent;
pub mod purebraid;
pub mod seifert;
pub mod standardform;
pub mod stringlink;
pub mod textfmt;

pub use error::{Error, Result};
pub use intlin::IntMatrix;
pub use laurent::LaurentPoly;
