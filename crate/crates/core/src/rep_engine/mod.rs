//! The Yangian Y(sl(3)) on `V(λ_1, a) ⊗ V(λ_2, b)`: coproduct action,
//! entangled basis, the closed-form principal action, and irreducibility.

mod entangled;
mod irreducible;
mod sl3;
mod tensor;
mod theorem51;

pub use entangled::{entangled_basis, product_index, reduce3, Convention, EntangledBasis, PhaseTag};
pub use irreducible::{
    burnside_dimension, corollary52, irreducibility, is_invariant, isotypic_components, predicted_verdict,
    proper_submodules, submodule_closure, Corollary52Report, Irreducibility, SeedClosure,
};
pub use sl3::{
    dictionary_check, generator_indices, h1, h2, principal_sl3_gen, sl3_basis, sl3_dual_basis, Dictionary, ORDER,
};
pub use tensor::{
    build_tensor_module, casimir, casimir_invariance_check, coproduct_homomorphism_check, j_linearity_check,
    mixed_relation_check, EvalModule, ModuleKind, TensorModule,
};
pub use theorem51::{
    calibrate, calibrate_with, calibration_samples, casimir_candidates, cross_check_sample, theorem51_coefficient,
    theorem51_coefficient_with, verify_theorem51, verify_theorem51_with, Calibration, Candidate, DeltaReading,
    Theorem51Entry, Theorem51Report, Verdict,
};
