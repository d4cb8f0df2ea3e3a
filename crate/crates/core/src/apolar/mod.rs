//! Catalecticants, annihilators, Hessians and the wildness classifier.

pub mod annihilator;
pub mod catalecticant;
pub mod hessian;
pub mod independence;
pub mod wild;

pub use annihilator::{annihilator_generators, hilbert_function, is_concise, rank_lower_bound};
pub use catalecticant::{annihilator_component, catalecticant, Catalecticant};
pub use hessian::{
    has_slp, hessian_matrix, hessian_vanishes, higher_hessian_matrix, higher_hessian_vanishes, quotient_basis, HessianMode,
    HessianStatus,
};
pub use independence::{algebraically_independent, jacobian};
pub use wild::{classify_wild, MinimalBorderRankCertificate, NotApplicableReason, Verdict, WildnessVerdict};
