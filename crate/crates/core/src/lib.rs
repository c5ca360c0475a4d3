//! Exact Koszul-complex calculus over `Q[x]`: Grassmann algebra with dual generators,
//! contractions and determinant kernels, boundary operators, Gröbner-based quotient
//! algebra, and the dual element of a zero-dimensional polynomial system.

pub mod cli;
pub mod context;
pub mod dual_element;
pub mod error;
pub mod grassmann;
pub mod koszul;
mod linsolve;
pub mod quotient;
pub mod ring;
pub mod verify;

pub use context::Context;
pub use error::{Error, Result};
