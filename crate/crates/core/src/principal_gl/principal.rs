//! gl(n) in the Cartan-Weyl basis `E_ij` and the principal basis `A_ij`.
//!
//! Index conventions live here and nowhere else: residues are stored in
//! `0..n`, matrix positions are read cyclically in `1..=n`, and storage is
//! zero-based. All matrices are over Q(ω_n) with ω = e^{2πi/n}.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{rat, root_of_unity, Cyc};

use super::matrix::{CycMat, CycVec};

/// Canonical representative of a residue class in `0..n`.
pub fn residue(n: usize, r: i64) -> usize {
    r.rem_euclid(n as i64) as usize
}

/// Zero-based storage slot of the cyclic matrix position `p` (1-based, taken mod n).
pub fn slot(n: usize, p: i64) -> usize {
    (p - 1).rem_euclid(n as i64) as usize
}

fn omega(n: usize, k: i64) -> Cyc {
    root_of_unity(n as u32, k)
}

fn check_principal_square(x: &CycMat) -> Result<usize> {
    if !x.is_square() {
        return Err(Error::ShapeMismatch(format!("expected a square matrix, got {}x{}", x.rows(), x.cols())));
    }
    if x.order() as usize != x.rows() {
        return Err(Error::ShapeMismatch(format!(
            "matrix of size {} is over Q(ω_{}), expected Q(ω_{})",
            x.rows(),
            x.order(),
            x.rows()
        )));
    }
    Ok(x.rows())
}

/// `E_ij` in gl(n), 1-based indices.
pub fn unit_e(n: usize, i: usize, j: usize) -> Result<CycMat> {
    unit_e_over(n as u32, n, i, j)
}

/// `E_ij` of size `dim` over Q(ω_order).
pub fn unit_e_over(order: u32, dim: usize, i: usize, j: usize) -> Result<CycMat> {
    for idx in [i, j] {
        if idx == 0 || idx > dim {
            return Err(Error::IndexOutOfRange {
                index: idx as i64,
                size: dim,
            });
        }
    }
    let mut m = CycMat::zeros(order, dim, dim);
    m.set(i - 1, j - 1, Cyc::one(order));
    Ok(m)
}

/// `A_ij = Σ_{k=1}^{n} ω^{ik} E_{k, j+k}`; residues are reduced mod n.
pub fn principal_a(n: usize, i: i64, j: i64) -> CycMat {
    let mut m = CycMat::zeros(n as u32, n, n);
    for k in 1..=n as i64 {
        m.set(slot(n, k), slot(n, j + k), omega(n, i * k));
    }
    m
}

/// The cyclic shift `E = Σ_i E_{i,i+1}` generating the principal Cartan subalgebra.
pub fn cyclic_shift(n: usize) -> CycMat {
    let mut m = CycMat::zeros(n as u32, n, n);
    for k in 1..=n as i64 {
        m.set(slot(n, k), slot(n, k + 1), Cyc::one(n as u32));
    }
    m
}

/// Components of a matrix by principal degree `l - k mod n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDecomposition {
    pub components: Vec<CycMat>,
}

impl GradedDecomposition {
    pub fn sum(&self) -> CycMat {
        let first = &self.components[0];
        self.components[1..]
            .iter()
            .fold(first.clone(), |acc, c| &acc + c)
    }
}

pub fn principal_decompose(x: &CycMat) -> Result<GradedDecomposition> {
    if !x.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "principal decomposition needs a square matrix, got {}x{}",
            x.rows(),
            x.cols()
        )));
    }
    let n = x.rows();
    let mut components = vec![CycMat::zeros(x.order(), n, n); n];
    for (r, c) in x.support() {
        let deg = residue(n, c as i64 - r as i64);
        components[deg].set(r, c, x.get(r, c).clone());
    }
    Ok(GradedDecomposition { components })
}

/// The grading automorphism: `σ(x)_{kl} = ω^{l-k} x_{kl}`.
pub fn apply_sigma(x: &CycMat) -> Result<CycMat> {
    let n = check_principal_square(x)?;
    let mut out = x.clone();
    for (r, c) in x.support() {
        out.set(r, c, x.get(r, c) * &omega(n, c as i64 - r as i64));
    }
    Ok(out)
}

/// The invariant form `(x|y) = tr(xy)`.
pub fn trace_form(x: &CycMat, y: &CycMat) -> Result<Cyc> {
    if !x.is_square() || !y.is_square() || x.rows() != y.rows() {
        return Err(Error::ShapeMismatch(format!(
            "trace form of {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    if x.order() != y.order() {
        return Err(Error::OrderMismatch {
            left: x.order(),
            right: y.order(),
        });
    }
    let mut acc = Cyc::zero(x.order());
    for (r, c) in x.support() {
        let b = y.get(c, r);
        if !b.is_zero() {
            acc += &(x.get(r, c) * b);
        }
    }
    Ok(acc)
}

/// `P = Σ_ij E_ij ⊗ E_ji` on `V ⊗ V`, built from unit matrices.
pub fn permutation_p_unit(n: usize) -> CycMat {
    let order = n as u32;
    let mut p = CycMat::zeros(order, n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            p.set(i * n + j, j * n + i, Cyc::one(order));
        }
    }
    p
}

/// `P = Σ_{kl} (ω^{kl}/n) A_kl ⊗ A_{-k,-l}`.
pub fn permutation_p_principal(n: usize) -> CycMat {
    let order = n as u32;
    let mut p = CycMat::zeros(order, n * n, n * n);
    let inv_n = rat(1, n as i64);
    for k in 0..n as i64 {
        for l in 0..n as i64 {
            let coeff = omega(n, k * l).scale(&inv_n);
            let term = principal_a(n, k, l).kron(&principal_a(n, -k, -l)).scale(&coeff);
            p = &p + &term;
        }
    }
    p
}

/// The flip operator on `V ⊗ V`; with `verify` the principal-basis
/// expansion is recomputed and must agree entrywise.
pub fn permutation_p(n: usize, verify: bool) -> Result<CycMat> {
    if n < 2 {
        return Err(Error::ShapeMismatch(format!("permutation operator needs n >= 2, got {n}")));
    }
    let p = permutation_p_unit(n);
    if verify && p != permutation_p_principal(n) {
        return Err(Error::Verification(format!(
            "principal expansion of P disagrees with Σ E_ij ⊗ E_ji for n = {n}"
        )));
    }
    Ok(p)
}

/// Coefficients `c_kl` with `x = Σ c_kl A_kl`, read off with the dual basis
/// `{(ω^{kl}/n) A_{-k,-l}}`. Zero coefficients are omitted.
pub fn expand_in_principal(x: &CycMat) -> Result<BTreeMap<(usize, usize), Cyc>> {
    let n = check_principal_square(x)?;
    let inv_n = rat(1, n as i64);
    let mut out = BTreeMap::new();
    for k in 0..n as i64 {
        for l in 0..n as i64 {
            let c = trace_form(x, &principal_a(n, -k, -l))? * omega(n, k * l).scale(&inv_n);
            if !c.is_zero() {
                out.insert((k as usize, l as usize), c);
            }
        }
    }
    Ok(out)
}

pub fn reconstruct_from_principal(n: usize, coeffs: &BTreeMap<(usize, usize), Cyc>) -> CycMat {
    coeffs
        .iter()
        .fold(CycMat::zeros(n as u32, n, n), |acc, (&(k, l), c)| {
            &acc + &principal_a(n, k as i64, l as i64).scale(c)
        })
}

/// Standard basis vector `v_i`, 1-based.
pub fn standard_vec(n: usize, i: i64) -> CycVec {
    CycVec::basis(n as u32, n, slot(n, i))
}

/// Unnormalized Fourier vector `φ̃_i = Σ_{k=1}^{n} ω^{ik} v_k` (√n times the unit-norm one).
pub fn fourier_vec(n: usize, i: i64) -> CycVec {
    let mut entries = vec![Cyc::zero(n as u32); n];
    for k in 1..=n as i64 {
        entries[slot(n, k)] = omega(n, i * k);
    }
    CycVec::new(n as u32, entries)
}

/// Checks `A_kl φ̃_i = ω^{il} φ̃_{i+k}` by direct multiplication and returns
/// the phase and target residue.
pub fn principal_action(k: i64, l: i64, i: i64, n: usize) -> Result<(Cyc, usize)> {
    let lhs = principal_a(n, k, l).mul_vec(&fourier_vec(n, i))?;
    let phase = omega(n, i * l);
    let target = residue(n, i + k);
    let rhs = fourier_vec(n, target as i64).scale(&phase);
    if lhs != rhs {
        return Err(Error::Verification(format!(
            "A_{{{k},{l}}} φ_{i}: lhs {lhs:?} != rhs {rhs:?}"
        )));
    }
    Ok((phase, target))
}
