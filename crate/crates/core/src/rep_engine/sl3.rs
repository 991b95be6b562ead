//! sl(3) over Q(ω_3): the Cartan-Weyl basis, its trace-form dual, and the
//! modified principal generators `T_i^(j) = ω^{4-i} A_{i-1,j-1}`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exact_arith::{root_of_unity, Cyc};
use crate::principal_gl::linalg::inverse;
use crate::principal_gl::{principal_a, trace_form, unit_e, CycMat};
use crate::report::CheckReport;

/// Cyclotomic order and matrix size for everything in this module.
pub const ORDER: u32 = 3;

fn e(i: usize, j: usize) -> CycMat {
    unit_e(3, i, j).expect("indices in 1..=3")
}

fn w(k: i64) -> Cyc {
    root_of_unity(ORDER, k)
}

pub fn h1() -> CycMat {
    &e(1, 1) - &e(2, 2)
}

pub fn h2() -> CycMat {
    &e(2, 2) - &e(3, 3)
}

/// `E_12, E_13, E_21, E_23, E_31, E_32, H_1, H_2` with display names.
pub fn sl3_basis() -> Vec<(&'static str, CycMat)> {
    vec![
        ("E12", e(1, 2)),
        ("E13", e(1, 3)),
        ("E21", e(2, 1)),
        ("E23", e(2, 3)),
        ("E31", e(3, 1)),
        ("E32", e(3, 2)),
        ("H1", h1()),
        ("H2", h2()),
    ]
}

/// Dual basis `x^β` with `tr(x_α x^β) = δ_αβ`, from the inverse Gram matrix.
pub fn sl3_dual_basis() -> Vec<CycMat> {
    let basis: Vec<CycMat> = sl3_basis().into_iter().map(|(_, m)| m).collect();
    let d = basis.len();
    let gram = CycMat::from_fn(ORDER, d, d, |r, c| {
        trace_form(&basis[r], &basis[c]).expect("same shape")
    });
    let inv = inverse(&gram).expect("trace form is nondegenerate on sl(3)");
    (0..d)
        .map(|a| {
            basis.iter().enumerate().fold(CycMat::zeros(ORDER, 3, 3), |acc, (b, x)| {
                &acc + &x.scale(inv.get(a, b))
            })
        })
        .collect()
}

/// The eight index pairs `(i, j) ≠ (1, 1)` in row order.
pub fn generator_indices() -> impl Iterator<Item = (usize, usize)> {
    (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .filter(|&ij| ij != (1, 1))
}

fn check_generator(i: usize, j: usize) -> Result<()> {
    for x in [i, j] {
        if !(1..=3).contains(&x) {
            return Err(Error::IndexOutOfRange {
                index: x as i64,
                size: 3,
            });
        }
    }
    if (i, j) == (1, 1) {
        return Err(Error::ExcludedGenerator { i, j });
    }
    Ok(())
}

/// `T_i^(j) = ω^{4-i} A_{i-1, j-1}`.
pub fn principal_sl3_gen(i: usize, j: usize) -> Result<CycMat> {
    check_generator(i, j)?;
    Ok(principal_a(3, i as i64 - 1, j as i64 - 1).scale(&w(4 - i as i64)))
}

/// `T_i^(j)` as a combination of `H_1, H_2, E_pq`, term by term.
fn cartan_weyl_terms(i: usize, j: usize) -> Vec<(Cyc, CycMat)> {
    let p = i as i64 - 1;
    match j {
        // H_1 - ω^{-p} H_2
        1 => vec![(w(0), h1()), (-&w(-p), h2())],
        // E_12 + ω^p E_23 + ω^{2p} E_31
        2 => vec![(w(0), e(1, 2)), (w(p), e(2, 3)), (w(2 * p), e(3, 1))],
        // E_13 + ω^p E_21 + ω^{2p} E_32
        _ => vec![(w(0), e(1, 3)), (w(p), e(2, 1)), (w(2 * p), e(3, 2))],
    }
}

/// Generators `T_i^(j)` by index, as used to drive the tensor module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dictionary {
    gens: BTreeMap<(usize, usize), CycMat>,
}

impl Dictionary {
    /// `ω^{4-i} A_{i-1, j-1}`.
    pub fn principal() -> Self {
        Self {
            gens: generator_indices()
                .map(|(i, j)| ((i, j), principal_sl3_gen(i, j).expect("valid index")))
                .collect(),
        }
    }

    /// The same generators written in the Cartan-Weyl basis.
    pub fn cartan_weyl() -> Self {
        Self {
            gens: generator_indices()
                .map(|(i, j)| {
                    let m = cartan_weyl_terms(i, j)
                        .into_iter()
                        .fold(CycMat::zeros(ORDER, 3, 3), |acc, (c, x)| &acc + &x.scale(&c));
                    ((i, j), m)
                })
                .collect(),
        }
    }

    /// Cartan-Weyl dictionary with the phase of the second term of `T_i^(j)`
    /// multiplied by an extra `ω`.
    pub fn with_phase_error(i: usize, j: usize) -> Result<Self> {
        check_generator(i, j)?;
        let mut d = Self::cartan_weyl();
        let mut terms = cartan_weyl_terms(i, j);
        terms[1].0 = &terms[1].0 * &w(1);
        let m = terms
            .into_iter()
            .fold(CycMat::zeros(ORDER, 3, 3), |acc, (c, x)| &acc + &x.scale(&c));
        d.gens.insert((i, j), m);
        Ok(d)
    }

    pub fn get(&self, i: usize, j: usize) -> Result<&CycMat> {
        check_generator(i, j)?;
        Ok(&self.gens[&(i, j)])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &CycMat)> {
        self.gens.iter()
    }
}

/// The eight identities between the principal generators and their
/// Cartan-Weyl expressions.
pub fn dictionary_check() -> CheckReport {
    let principal = Dictionary::principal();
    let cw = Dictionary::cartan_weyl();
    let mut report = CheckReport::new("sl3-dictionary", 3);
    for (&(i, j), m) in principal.iter() {
        let other = cw.get(i, j).expect("same index set");
        report.record_residual(format!("T_{i}^({j})"), &(m - other));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;

    #[test]
    fn dual_basis_closed_form() {
        let dual = sl3_dual_basis();
        let names: Vec<_> = sl3_basis().into_iter().map(|(n, _)| n).collect();
        let third = rat(1, 3);
        let expected = [
            e(2, 1),
            e(3, 1),
            e(1, 2),
            e(3, 2),
            e(1, 3),
            e(2, 3),
            (&h1().scale_rat(&rat(2, 1)) + &h2()).scale_rat(&third),
            (&h1() + &h2().scale_rat(&rat(2, 1))).scale_rat(&third),
        ];
        for ((d, want), name) in dual.iter().zip(&expected).zip(names) {
            assert_eq!(d, want, "dual of {name}");
        }
        let basis = sl3_basis();
        for (a, (_, x)) in basis.iter().enumerate() {
            for (b, y) in dual.iter().enumerate() {
                let t = trace_form(x, y).unwrap();
                assert_eq!(t.is_one(), a == b);
                assert!(a == b || t.is_zero());
            }
        }
    }

    #[test]
    fn dictionary_identities() {
        let report = dictionary_check();
        assert!(report.passed, "{report:#?}");
        assert_eq!(report.indices_tested, 8);
        // T_2^(1) = H_1 - ω² H_2, written out
        let t21 = &h1() - &h2().scale(&w(2));
        assert_eq!(principal_sl3_gen(2, 1).unwrap(), t21);
        // T_3^(2) = E_12 + ω² E_23 + ω E_31
        let t32 = &(&e(1, 2) + &e(2, 3).scale(&w(2))) + &e(3, 1).scale(&w(1));
        assert_eq!(principal_sl3_gen(3, 2).unwrap(), t32);
    }

    #[test]
    fn generators_are_traceless_and_span() {
        use crate::principal_gl::linalg::rank;
        let d = Dictionary::principal();
        let rows: Vec<_> = d.iter().map(|(_, m)| m.to_vec().into_entries()).collect();
        for (_, m) in d.iter() {
            assert!(m.trace().is_zero());
        }
        let stacked = CycMat::from_fn(ORDER, 8, 9, |r, c| rows[r][c].clone());
        assert_eq!(rank(&stacked), 8);
    }

    #[test]
    fn excluded_and_out_of_range() {
        assert!(matches!(principal_sl3_gen(1, 1), Err(Error::ExcludedGenerator { .. })));
        assert!(matches!(principal_sl3_gen(4, 1), Err(Error::IndexOutOfRange { .. })));
        assert!(Dictionary::with_phase_error(1, 1).is_err());
    }

    #[test]
    fn phase_error_changes_one_generator() {
        let d = Dictionary::with_phase_error(2, 2).unwrap();
        let p = Dictionary::principal();
        let diffs = generator_indices()
            .filter(|&(i, j)| d.get(i, j).unwrap() != p.get(i, j).unwrap())
            .collect::<Vec<_>>();
        assert_eq!(diffs, vec![(2, 2)]);
    }
}
