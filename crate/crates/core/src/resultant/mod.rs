//! The Cayley-Morley construction of the binary resultant.

mod lifts;
mod morley;
mod syzygy;

pub use lifts::{cech_lift, lift_combination, morley_identity_check, CechLift, Which};
pub use morley::{
    apply_symbol, eta_matrix, eta_matrix_of, morley_form, resultant_det, sylvester_resultant,
    theta, theta_with, MorleyForm,
};
pub use syzygy::{
    common_factor_report, g_apolarity_check, g_apolarity_holds, omega_s_coefficients,
    resultant_evectant, resultant_evectant_as_printed_of, resultant_evectant_of,
    resultant_syzygy_check, syzygy_sum,
};

/// The `(d, e)` pairs on which the construction is checked.
pub const GRID: [(u32, u32); 6] = [(2, 2), (3, 2), (3, 3), (4, 3), (4, 4), (5, 4)];
