//! Scalar functionals of states: q-calculus, entropies, fidelity and the divergences.

mod divergence;
mod entropy;
mod fidelity;
mod qcalc;

pub use divergence::{
    kl_divergence, nonadditivity_defect, q_divergence, q_divergence_eigensum,
    q_divergence_jackson, q_divergence_pure_ref, werner_q_divergence_closed, DivergenceValue,
    KERNEL_OVERLAP_CUTOFF, NEGATIVE_READOUT_TOL, SUPPORT_CUTOFF, TERM_FLOOR,
};
pub use entropy::{tsallis_entropy, von_neumann_entropy};
pub use fidelity::{bures_metric_sq, fidelity, fubini_study_sq};
pub use qcalc::{jackson_derivative, leibniz_defect, q_log, EntropicIndex};
