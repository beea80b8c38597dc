//! Exact covariant computations for binary forms.

pub mod check;
pub mod discriminant;
pub mod error;
pub mod forms;
pub mod loci;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod resultant;
pub mod special;
pub mod suites;

pub use check::{CheckItem, CheckReport};
pub use error::{Error, PolyError, Result};
pub use matrix::PolyMatrix;
pub use poly::{are_proportional, CoefSymbol, MPoly, Monomial, Pair, Var};
pub use rational::Rational;
