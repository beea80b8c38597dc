//! The polynomial kernel: a fixed variable universe, sparse polynomials over
//! the rationals, text and JSON serialisation, and univariate gcd.

pub mod gcd;
pub mod json;
pub mod mpoly;
pub mod text;
pub mod universe;

pub use gcd::gcd_univariate;
pub use mpoly::{are_proportional, MPoly, Monomial};
pub use text::{parse_poly, to_text};
pub use universe::{config, configure, CoefSymbol, Config, Pair, Var};
