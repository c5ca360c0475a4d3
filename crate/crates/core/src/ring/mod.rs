//! Exact scalars, commuting variable registries, sparse polynomials, divided differences.

mod divided;
mod parse;
mod poly;
mod registry;
pub mod scalar;

pub use divided::divided_differences;
pub use parse::{parse_poly, split_top_level};
pub use poly::{Monomial, Poly};
pub use registry::{CommutingFamily, OddFamily, Registry, Var};
pub use scalar::Scalar;
