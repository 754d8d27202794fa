//! Orientability verdicts for equivariant bundles: components of fixed
//! points of classifying spaces and first Stiefel–Whitney classes.

mod pi0;
mod verdicts;

pub use pi0::{classifying_pi0, Component, Pi0Data, Pi0Level};
pub use verdicts::{
    augmentation_kernel_dim, free_action_ghost_vanishing, gamma_rho_verdict, norm_minus_one_congruence,
    odd_order_collapse, twofold_sum_verdict, w1_induced_line, Coefficient, InducedLine, ObstructionVerdict,
};
