//! Coincident-root loci: degrees, the covariants `A_n` and membership tests.

pub mod corpus;
pub mod covariants;
pub mod degrees;

pub use corpus::{builtin_corpus, membership_report, parse_corpus, FactoredForm, BUILTIN_CORPUS};
pub use covariants::{
    a1_hessian_check, a_matrix_of, a_top_discriminant_check, alpha_matrix, alpha_matrix_of,
    alpha_rank, covariant_a, covariant_a_of, degree_order_on_line, distinct_roots,
    evectant_via_a_check, g_f, lemma_gf_check, tau_delta_classify, Stratum,
};
pub use degrees::{hilbert_degree, partitions, partitions_into, phi_degree, PartitionSpec};
