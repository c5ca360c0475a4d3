//! Gröbner bases with cofactors, standard monomials, multiplication matrices and the
//! univariate annihilators `T_j` with their ideal-membership cofactors.

mod basis;
mod groebner;
mod matrix;
mod order;

pub use basis::{charpoly_t, mul_matrix, quotient_basis, univariate, Annihilator, AnnihilatorMode, QuotientBasis};
pub use groebner::{compose_cofactors, groebner, reduce_with_cofactors, GroebnerBasis};
pub use matrix::{charpoly, eval_poly_at, identity, is_zero_matrix, mat_mul, Matrix};
pub use order::MonomialOrder;
