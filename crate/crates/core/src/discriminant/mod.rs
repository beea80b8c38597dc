//! Discriminants, evectants and the covariant catalogs of low order.

mod bezout;

pub use bezout::{
    beta_gamma_matrix_of, bezoutiant, discriminant_det, discriminant_of, discriminant_oracle,
    discriminant_oracle_of, evectant, evectant_from_partials, evectant_of_delta_at, h_matrix,
    h_matrix_of, jacobian_generators, jacobian_of, monomial_form,
};
mod identities;

pub use identities::{
    apolarity_check_for, apolarity_identity_check, diffeq_deg2_check, diffeq_deg2_sum,
    double_root_kills_det, oracle_comparison_specialised, quartic_pde_check, quartic_pde_check_for,
    quartic_pde_image, sl2_annihilation_check, sl2_images, wronskian_evectant_check,
    wronskian_evectant_check_symbolic, wronskian_evectant_ratios, wronskian_of_minors,
    xi_coefficient, SpecialisedComparison,
};
mod catalog;

pub use catalog::{
    catalog, quartic_identities_check, quartic_identities_report, quintic_identities_check,
    quintic_identities_report, specialise, CovariantCatalog,
};
mod degrees;

pub use degrees::{degree_report, porteous_degree, DegreeReport};
