//! Evaluation modules of Y(sl(3)) and their tensor product
//! `V(λ_1, a) ⊗ V(λ_2, b)`.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::exact_arith::{int, Cyc, Rat};
use crate::principal_gl::CycMat;
use crate::report::CheckReport;

use super::sl3::{sl3_basis, sl3_dual_basis, ORDER};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModuleKind {
    /// `x` acts as itself.
    Fundamental,
    /// Contragredient: `x` acts as `-xᵀ`.
    Dual,
}

/// Three-dimensional evaluation module with `J(x) = parameter · I(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvalModule {
    pub kind: ModuleKind,
    pub parameter: Rat,
}

impl EvalModule {
    pub fn new(kind: ModuleKind, parameter: Rat) -> Self {
        Self { kind, parameter }
    }

    pub fn dim(&self) -> usize {
        3
    }

    pub fn action(&self, x: &CycMat) -> CycMat {
        match self.kind {
            ModuleKind::Fundamental => x.clone(),
            ModuleKind::Dual => -&x.transpose(),
        }
    }

    pub fn j_action(&self, x: &CycMat) -> CycMat {
        self.action(x).scale_rat(&self.parameter)
    }
}

/// `Ω = Σ_β x_β ⊗ x^β` with the fundamental action on the first leg and
/// the dual action on the second.
pub fn casimir() -> CycMat {
    let dual = EvalModule::new(ModuleKind::Dual, int(1));
    sl3_basis()
        .into_iter()
        .zip(sl3_dual_basis())
        .fold(CycMat::zeros(ORDER, 9, 9), |acc, ((_, x), y)| {
            &acc + &x.kron(&dual.action(&y))
        })
}

/// `V(λ_1, a) ⊗ V(λ_2, b)` with
/// `J(x) = a·x⊗1 + b·1⊗x + c·[x⊗1, Ω]`.
#[derive(Debug, Clone)]
pub struct TensorModule {
    first: EvalModule,
    second: EvalModule,
    casimir_constant: Rat,
    casimir: CycMat,
    id: CycMat,
}

pub fn build_tensor_module(a: Rat, b: Rat, c: Rat) -> TensorModule {
    TensorModule {
        first: EvalModule::new(ModuleKind::Fundamental, a),
        second: EvalModule::new(ModuleKind::Dual, b),
        casimir_constant: c,
        casimir: casimir(),
        id: CycMat::identity(ORDER, 3),
    }
}

impl TensorModule {
    pub fn dim(&self) -> usize {
        9
    }

    pub fn a(&self) -> &Rat {
        &self.first.parameter
    }

    pub fn b(&self) -> &Rat {
        &self.second.parameter
    }

    pub fn casimir_constant(&self) -> &Rat {
        &self.casimir_constant
    }

    pub fn casimir(&self) -> &CycMat {
        &self.casimir
    }

    /// Lie coproduct `x⊗1 + 1⊗x`.
    pub fn i_action(&self, x: &CycMat) -> CycMat {
        &x.kron(&self.id) + &self.id.kron(&self.second.action(x))
    }

    pub fn j_action(&self, x: &CycMat) -> CycMat {
        let x1 = self.first.action(x).kron(&self.id);
        let evaluation = &self.first.j_action(x).kron(&self.id) + &self.id.kron(&self.second.j_action(x));
        if self.casimir_constant == int(0) {
            return evaluation;
        }
        &evaluation + &x1.commutator(&self.casimir).scale_rat(&self.casimir_constant)
    }

    /// `I(x)` and `J(x)` for every Cartan-Weyl basis element of sl(3).
    pub fn action_matrices(&self) -> Vec<CycMat> {
        let basis = sl3_basis();
        let mut out: Vec<CycMat> = basis.iter().map(|(_, x)| self.i_action(x)).collect();
        out.extend(basis.iter().map(|(_, x)| self.j_action(x)));
        out
    }
}

/// `[I(x), I(y)] = I([x, y])` over all basis pairs.
pub fn coproduct_homomorphism_check(m: &TensorModule) -> CheckReport {
    let basis = sl3_basis();
    let mut report = CheckReport::new("tensor-coproduct-homomorphism", 3);
    for (nx, x) in &basis {
        for (ny, y) in &basis {
            let lhs = m.i_action(x).commutator(&m.i_action(y));
            report.record_residual(format!("{nx},{ny}"), &(&lhs - &m.i_action(&x.commutator(y))));
        }
    }
    report
}

/// `[Ω, I(x)] = 0` for every basis element.
pub fn casimir_invariance_check(m: &TensorModule) -> CheckReport {
    let mut report = CheckReport::new("tensor-casimir-invariance", 3);
    for (name, x) in sl3_basis() {
        report.record_residual(name, &m.casimir().commutator(&m.i_action(&x)));
    }
    report
}

/// `[I(x), J(y)] = J([x, y])` over all basis pairs.
pub fn mixed_relation_check(m: &TensorModule) -> CheckReport {
    let basis = sl3_basis();
    let mut report = CheckReport::new("tensor-mixed-relation", 3);
    for (nx, x) in &basis {
        for (ny, y) in &basis {
            let lhs = m.i_action(x).commutator(&m.j_action(y));
            report.record_residual(format!("{nx},{ny}"), &(&lhs - &m.j_action(&x.commutator(y))));
        }
    }
    report
}

/// `J(αx + βy) = αJ(x) + βJ(y)` on `samples` random combinations.
pub fn j_linearity_check(m: &TensorModule, rng: &mut ChaCha8Rng, samples: usize) -> CheckReport {
    let basis = sl3_basis();
    let mut report = CheckReport::new("tensor-j-linearity", 3);
    for s in 0..samples {
        let coeffs: Vec<Cyc> = (0..basis.len())
            .map(|_| Cyc::from_poly(ORDER, vec![int(rng.gen_range(-3..=3)), int(rng.gen_range(-3..=3))]))
            .collect();
        let x = basis
            .iter()
            .zip(&coeffs)
            .fold(CycMat::zeros(ORDER, 3, 3), |acc, ((_, b), c)| &acc + &b.scale(c));
        let combined = basis
            .iter()
            .zip(&coeffs)
            .fold(CycMat::zeros(ORDER, 9, 9), |acc, ((_, b), c)| &acc + &m.j_action(b).scale(c));
        report.record_residual(format!("sample {s}"), &(&m.j_action(&x) - &combined));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rat;
    use rand::SeedableRng;

    #[test]
    fn casimir_off_is_evaluation() {
        let m = build_tensor_module(rat(2, 1), rat(-1, 3), rat(0, 1));
        let h1 = super::super::sl3::h1();
        let id = CycMat::identity(ORDER, 3);
        let expected = &h1.kron(&id).scale_rat(&rat(2, 1)) + &id.kron(&-&h1.transpose()).scale_rat(&rat(-1, 3));
        assert_eq!(m.j_action(&h1), expected);
    }

    #[test]
    fn structural_checks() {
        let m = build_tensor_module(rat(1, 1), rat(2, 7), rat(1, 2));
        let reports = [
            coproduct_homomorphism_check(&m),
            casimir_invariance_check(&m),
            mixed_relation_check(&m),
            j_linearity_check(&m, &mut ChaCha8Rng::seed_from_u64(4), 4),
        ];
        for r in &reports {
            assert!(r.passed, "{r:#?}");
        }
        assert_eq!(reports[0].indices_tested, 64);
        assert_eq!(reports[2].indices_tested, 64);
    }

    #[test]
    fn casimir_is_nonscalar_and_has_singlet_eigenvalue() {
        // On the singlet Σ|l,l⟩, Ω acts by minus the fundamental Casimir value 8/3.
        let omega = casimir();
        let singlet = crate::principal_gl::CycVec::new(
            ORDER,
            (0..9).map(|i| Cyc::from_int(ORDER, (i % 4 == 0) as i64)).collect(),
        );
        let image = omega.mul_vec(&singlet).unwrap();
        assert_eq!(image, singlet.scale(&Cyc::from_rat(ORDER, rat(-8, 3))));
    }

    #[test]
    fn dual_module_is_a_representation() {
        let d = EvalModule::new(ModuleKind::Dual, rat(1, 1));
        for (_, x) in sl3_basis() {
            for (_, y) in sl3_basis() {
                assert_eq!(d.action(&x.commutator(&y)), d.action(&x).commutator(&d.action(&y)));
            }
        }
    }
}
