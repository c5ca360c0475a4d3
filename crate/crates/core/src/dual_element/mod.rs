//! Recurrent dual functionals and the dual element of a zero-dimensional system.

mod functional;
mod pipeline;
mod theorem3;

pub use functional::{
    canonical_functional, functional_eval, recurrent_functional, Functional1D, FunctionalElement, ProductFunctional,
};
pub use pipeline::{dual_element, pair_transgression, Certificate, DualElement, DualElementOptions, Pairing};
pub use theorem3::theorem3_compare;
