//! The abstract Riesz-space interface, its derived operations and the law harness.

pub mod laws;
pub mod ops;
pub mod space;

pub use laws::{check_laws, replay, Case, Counterexample, LawReport};
pub use space::{Infinitesimal, RieszSpace, SeededRng};
