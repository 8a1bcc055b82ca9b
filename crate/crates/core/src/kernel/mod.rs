//! Graded kernels of operator families, hit quotients and the structure of
//! symbolic-`q` kernels.

mod qlayers;
mod solver;
mod tilde;

pub use qlayers::{
    clear_denominators, coefficient_equality, first_last_spans, q_layers, FirstLastSpans, LayerConditions,
    QLayeredPolynomial,
};
pub use solver::{
    common_kernel, default_mode, hit_quotient_dims, hit_space, solve_kernel, GradedKernel, Mode, CAP_LIMIT,
};
pub use tilde::{decomposition_check_tilde, e_operator, support_decomposition, tilde_hat_identity, TildeDecomposition};
