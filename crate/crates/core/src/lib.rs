//! Exact computations with composition algebras: Hurwitz and symmetric
//! composition algebras over finite fields, ℚ and F_p(t), their order-3
//! automorphisms, idempotents and derivation algebras.

pub mod classify;
pub mod compalg;
pub mod error;
pub mod exactfield;
pub mod liealg;
pub mod linalg;
pub mod maps;
pub mod search;

pub use error::{Error, Result};
