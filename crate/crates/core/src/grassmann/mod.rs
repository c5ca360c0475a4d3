//! Exterior algebra over polynomials with paired primal/dual odd generators.

mod contract;
mod det;
mod element;
mod kernel;
mod word;

pub use contract::{bot_contract, drop_family, top_contract};
pub use det::{
    bordered_det, dual_full_product, exp_substitution, grassmann_exp, odd_row_det, transgression_det,
    TransgressionColumn, TRANSGRESSION_SCRATCH,
};
pub use element::{wedge_all, Element};
pub use kernel::SubstitutionKernel;
pub use word::{Gen, Word};
