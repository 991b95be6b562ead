//! gl(n) in Cartan-Weyl and principal bases.

pub mod checks;
pub mod linalg;
mod matrix;
mod principal;

pub use matrix::{CycMat, CycVec, MatrixDump};
pub use principal::{
    apply_sigma, cyclic_shift, expand_in_principal, fourier_vec, permutation_p,
    permutation_p_principal, permutation_p_unit, principal_a, principal_action,
    principal_decompose, reconstruct_from_principal, residue, slot, standard_vec, trace_form,
    unit_e, unit_e_over, GradedDecomposition,
};
