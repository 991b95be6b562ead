//! Exhaustive identity sweeps over the principal basis of gl(n).

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{rat, root_of_unity, Cyc};
use crate::report::CheckReport;

use super::linalg::EchelonBasis;
use super::matrix::CycMat;
use super::principal::{
    apply_sigma, cyclic_shift, fourier_vec, permutation_p_principal, permutation_p_unit,
    principal_a, principal_action, residue, standard_vec, trace_form,
};

fn omega(n: usize, k: i64) -> Cyc {
    root_of_unity(n as u32, k)
}

fn basis_table(n: usize) -> Vec<Vec<CycMat>> {
    (0..n as i64)
        .map(|i| (0..n as i64).map(|j| principal_a(n, i, j)).collect())
        .collect()
}

fn quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    let r = 0..n;
    r.clone().flat_map(move |i| {
        let r = 0..n;
        r.clone().flat_map(move |j| {
            let r = 0..n;
            r.clone()
                .flat_map(move |i2| (0..n).map(move |j2| (i, j, i2, j2)))
        })
    })
}

/// `A_ij A_i'j' = ω^{j i'} A_{i+i', j+j'}` for all index quadruples.
pub fn product_law(n: usize) -> CheckReport {
    let a = basis_table(n);
    let mut report = CheckReport::new("principal-product", n);
    for (i, j, i2, j2) in quadruples(n) {
        let lhs = &a[i][j] * &a[i2][j2];
        let rhs = a[(i + i2) % n][(j + j2) % n].scale(&omega(n, (j * i2) as i64));
        report.record_residual(format_args!("({i},{j},{i2},{j2})"), &(&lhs - &rhs));
    }
    report
}

/// `[A_ij, A_i'j'] = (ω^{j i'} - ω^{j' i}) A_{i+i', j+j'}`.
pub fn commutator_law(n: usize) -> CheckReport {
    let a = basis_table(n);
    let mut report = CheckReport::new("principal-commutator", n);
    for (i, j, i2, j2) in quadruples(n) {
        let lhs = a[i][j].commutator(&a[i2][j2]);
        let coeff = omega(n, (j * i2) as i64) - omega(n, (j2 * i) as i64);
        let rhs = a[(i + i2) % n][(j + j2) % n].scale(&coeff);
        report.record_residual(format_args!("({i},{j},{i2},{j2})"), &(&lhs - &rhs));
    }
    report
}

/// `[E^k, A_ij] = (ω^{ki} - 1) A_{i, j+k}` with `E` the cyclic shift.
pub fn cartan_action_law(n: usize) -> CheckReport {
    let a = basis_table(n);
    let shift = cyclic_shift(n);
    let mut report = CheckReport::new("principal-cartan-action", n);
    for k in 0..n {
        let ek = shift.pow(k as u32);
        for i in 0..n {
            for j in 0..n {
                let lhs = ek.commutator(&a[i][j]);
                let coeff = omega(n, (k * i) as i64) - Cyc::one(n as u32);
                let rhs = a[i][(j + k) % n].scale(&coeff);
                report.record_residual(format_args!("k={k} ({i},{j})"), &(&lhs - &rhs));
            }
        }
    }
    report
}

/// Powers of the cyclic shift commute pairwise and are linearly independent.
pub fn principal_cartan(n: usize) -> CheckReport {
    let shift = cyclic_shift(n);
    let powers: Vec<CycMat> = (0..n).map(|k| shift.pow(k as u32)).collect();
    let mut report = CheckReport::new("principal-cartan-subalgebra", n);
    for (p, x) in powers.iter().enumerate() {
        for (q, y) in powers.iter().enumerate().skip(p + 1) {
            report.record_residual(format_args!("[E^{p}, E^{q}]"), &x.commutator(y));
        }
    }
    let mut span = EchelonBasis::new(n as u32, n * n);
    let independent = powers.iter().all(|m| span.insert(&m.to_vec()));
    report.record("linear independence", independent);
    report
}

/// `σ(A_ij) = ω^j A_ij`.
pub fn sigma_eigen(n: usize) -> CheckReport {
    let mut report = CheckReport::new("sigma-eigenvalue", n);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let a = principal_a(n, i, j);
            let lhs = apply_sigma(&a).expect("principal matrices are square");
            report.record_residual(format_args!("({i},{j})"), &(&lhs - &a.scale(&omega(n, j))));
        }
    }
    report
}

/// Random matrix with small integer coordinates over Q(ω_order).
pub fn random_matrix(rng: &mut ChaCha8Rng, order: u32, rows: usize, cols: usize) -> CycMat {
    let phi = crate::exact_arith::euler_phi(order);
    CycMat::from_fn(order, rows, cols, |_, _| {
        let coeffs = (0..phi).map(|_| rat(rng.gen_range(-3..=3), 1)).collect();
        Cyc::from_poly(order, coeffs)
    })
}

/// `σ(xy) = σ(x)σ(y)` on `samples` random pairs.
pub fn sigma_automorphism(n: usize, rng: &mut ChaCha8Rng, samples: usize) -> CheckReport {
    let mut report = CheckReport::new("sigma-automorphism", n);
    for s in 0..samples {
        let x = random_matrix(rng, n as u32, n, n);
        let y = random_matrix(rng, n as u32, n, n);
        let lhs = apply_sigma(&(&x * &y)).expect("square");
        let rhs = &apply_sigma(&x).expect("square") * &apply_sigma(&y).expect("square");
        report.record_residual(format_args!("sample {s}"), &(&lhs - &rhs));
    }
    report
}

/// `(A_ij | A_i'j') = n ω^{-ij} δ_{i,-i'} δ_{j,-j'}`.
pub fn invariant_form(n: usize) -> CheckReport {
    let a = basis_table(n);
    let mut report = CheckReport::new("invariant-form", n);
    for (i, j, i2, j2) in quadruples(n) {
        let got = trace_form(&a[i][j], &a[i2][j2]).expect("same shape");
        let expected = if (i + i2) % n == 0 && (j + j2) % n == 0 {
            omega(n, -((i * j) as i64)).scale(&rat(n as i64, 1))
        } else {
            Cyc::zero(n as u32)
        };
        report.record(format_args!("({i},{j},{i2},{j2})"), got == expected);
    }
    report
}

/// The unit-matrix and principal expansions of the flip operator agree
/// entrywise, and `P² = 1`.
pub fn permutation_expansion(n: usize) -> CheckReport {
    let unit = permutation_p_unit(n);
    let principal = permutation_p_principal(n);
    let mut report = CheckReport::new("permutation-expansion", n);
    for r in 0..n * n {
        for c in 0..n * n {
            report.record(format_args!("entry ({r},{c})"), unit.get(r, c) == principal.get(r, c));
        }
    }
    report.record_residual("P^2 - I", &(&(&unit * &unit) - &CycMat::identity(n as u32, n * n)));
    report
}

/// `A_kl φ̃_i = ω^{il} φ̃_{i+k}` for every residue triple.
pub fn fourier_action(n: usize) -> CheckReport {
    let mut report = CheckReport::new("fourier-action", n);
    for k in 0..n as i64 {
        for l in 0..n as i64 {
            for i in 0..n as i64 {
                report.record(format_args!("A_({k},{l}) φ_{i}"), principal_action(k, l, i, n).is_ok());
            }
        }
    }
    report
}

/// `(φ̃_i | φ̃_j) = n δ_{i+j,0}` and `n v_i = Σ_k ω^{-ik} φ̃_k`.
pub fn fourier_pairing(n: usize) -> CheckReport {
    let mut report = CheckReport::new("fourier-pairing-inversion", n);
    let nn = Cyc::from_int(n as u32, n as i64);
    for i in 0..n as i64 {
        for j in 0..n as i64 {
            let expected = if residue(n, i + j) == 0 { nn.clone() } else { Cyc::zero(n as u32) };
            report.record(
                format_args!("(φ_{i}|φ_{j})"),
                fourier_vec(n, i).pairing(&fourier_vec(n, j)) == expected,
            );
        }
    }
    for i in 1..=n as i64 {
        let mut acc = fourier_vec(n, 0).scale(&Cyc::zero(n as u32));
        for k in 0..n as i64 {
            acc.add_scaled(&fourier_vec(n, k), &omega(n, -i * k));
        }
        report.record(format_args!("n v_{i}"), acc == standard_vec(n, i).scale(&nn));
    }
    report
}
