//! Binary forms, biforms and the SL2 operator toolkit.

pub mod biform;
pub mod binary;
pub mod series;

pub use biform::{bracket, omega, outer, polarize, transvect_partial_x, BiForm, Polarization};
pub use binary::{
    a_assignment, b_assignment, dual_monomial, from_linear_factors, generic_form, generic_values,
    transvectant, BinaryForm,
};
pub use series::{gordan_c, gordan_series_check, plethysm_decomposition, plethysm_multiplicity};
