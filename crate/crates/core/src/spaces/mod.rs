//! Concrete Riesz spaces: `R^n` with the pointwise order, the lexicographic
//! plane, and exact piecewise-linear functions on `[0, 1]`.

mod fin;
mod lex;
mod pl;

pub use fin::{FinDim, FinVec};
pub use lex::{Lex, LexPlane};
pub use pl::{PlFunction, PlSpace};
