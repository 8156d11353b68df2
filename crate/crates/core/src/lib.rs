//! Exact finite-scale Riesz spaces and Yosida duality.
//!
//! All scalars are [`Rational`]s, so every lattice identity is checked by exact
//! equality. The crate is organised as
//!
//! * [`lattice`]: the [`RieszSpace`] interface, derived operations (absolute
//!   value, positive and negative parts, orthogonality, Riesz decomposition,
//!   unit norms) and a seeded law-checking harness;
//! * [`spaces`]: `R^n`, the lexicographic plane and piecewise-linear functions;
//! * [`ideals`]: support ideals of `R^n`, quotients, maximal ideals and
//!   separating homomorphisms;
//! * [`duality`]: spectra, the Yosida transform, the functors between finite
//!   discrete spaces and unital `R^n`, and round-trip/naturality verification;
//! * [`approx`]: the lattice Stone–Weierstrass construction producing explicit
//!   [`approx::LatticeExpr`] trees;
//! * [`cli`]: the command implementations behind the `riesz` binary.

pub mod approx;
pub mod cli;
pub mod duality;
pub mod error;
pub mod ideals;
pub mod lattice;
pub mod rational;
pub mod spaces;

pub use error::{ParseError, Result, RieszError};
pub use lattice::{LawReport, RieszSpace};
pub use rational::Rational;
