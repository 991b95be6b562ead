//! Irreducibility of `V(λ_1, a) ⊗ V(λ_2, b)`: Burnside dimension of the
//! generated algebra, cyclic submodules, and the exact list of proper
//! submodules.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{rat, serde_rat, Cyc, Rat};
use crate::principal_gl::linalg::EchelonBasis;
use crate::principal_gl::{CycMat, CycVec};

use super::entangled::{entangled_basis, product_index, Convention};
use super::sl3::ORDER;
use super::tensor::TensorModule;

const DIM: usize = 9;

/// Smallest subspace containing `seed` and stable under every `I(x)`, `J(x)`.
pub fn submodule_closure(module: &TensorModule, seed: &CycVec) -> Result<EchelonBasis> {
    if seed.is_zero() {
        return Err(Error::ZeroSeed);
    }
    let gens = module.action_matrices();
    let mut span = EchelonBasis::new(ORDER, DIM);
    span.insert(seed);
    let mut queue = VecDeque::from([seed.clone()]);
    while let Some(v) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for g in &gens {
            let image = g.mul_vec(&v)?;
            if span.insert(&image) {
                queue.push_back(image);
            }
        }
    }
    Ok(span)
}

/// Dimension of the associative algebra generated by the identity and the
/// 16 action matrices; `81` iff the module is irreducible.
pub fn burnside_dimension(module: &TensorModule) -> usize {
    let gens = module.action_matrices();
    let id = CycMat::identity(ORDER, DIM);
    let mut span = EchelonBasis::new(ORDER, DIM * DIM);
    span.insert(&id.to_vec());
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let word = g * &w;
            if span.insert(&word.to_vec()) {
                if span.is_full() {
                    return span.dim();
                }
                queue.push_back(word);
            }
        }
    }
    span.dim()
}

/// Whether every action matrix maps the span into itself.
pub fn is_invariant(module: &TensorModule, span: &EchelonBasis) -> bool {
    let gens = module.action_matrices();
    span.rows()
        .iter()
        .all(|v| gens.iter().all(|g| span.contains(&g.mul_vec(v).expect("9-dimensional"))))
}

/// The sl(3)-submodules of `V(λ_1) ⊗ V(λ_2) = V(0) ⊕ V(λ_1 + λ_2)`: the
/// singlet `Σ|l,l⟩` and the traceless complement. Every proper Yangian
/// submodule is one of them.
pub fn isotypic_components() -> [EchelonBasis; 2] {
    let one = Cyc::one(ORDER);
    let mut singlet = EchelonBasis::new(ORDER, DIM);
    let mut s = CycVec::zeros(ORDER, DIM);
    for l in 0..3 {
        s.add_scaled(&CycVec::basis(ORDER, DIM, product_index(l, l)), &one);
    }
    singlet.insert(&s);

    let mut adjoint = EchelonBasis::new(ORDER, DIM);
    for l in 0..3 {
        for j in (0..3).filter(|&j| j != l) {
            adjoint.insert(&CycVec::basis(ORDER, DIM, product_index(l, j)));
        }
    }
    for l in 0..2 {
        let d = &CycVec::basis(ORDER, DIM, product_index(l, l)) - &CycVec::basis(ORDER, DIM, product_index(l + 1, l + 1));
        adjoint.insert(&d);
    }
    [singlet, adjoint]
}

/// Dimensions of the proper submodules, ascending.
pub fn proper_submodules(module: &TensorModule) -> Vec<usize> {
    isotypic_components()
        .iter()
        .filter(|c| is_invariant(module, c))
        .map(EchelonBasis::dim)
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Irreducibility {
    Irreducible,
    Reducible { submodule_dims: Vec<usize> },
}

/// Burnside verdict; for a reducible module the proper submodules are
/// listed exactly.
pub fn irreducibility(module: &TensorModule) -> Irreducibility {
    if burnside_dimension(module) == DIM * DIM {
        Irreducibility::Irreducible
    } else {
        Irreducibility::Reducible {
            submodule_dims: proper_submodules(module),
        }
    }
}

/// Verdict predicted from `a - b` alone.
pub fn predicted_verdict(a: &Rat, b: &Rat) -> Irreducibility {
    let d = a - b;
    if d == rat(3, 2) {
        Irreducibility::Reducible { submodule_dims: vec![1] }
    } else if d == rat(-3, 2) {
        Irreducibility::Reducible { submodule_dims: vec![8] }
    } else {
        Irreducibility::Irreducible
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SeedClosure {
    pub seed: String,
    pub dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Corollary52Report {
    pub check: &'static str,
    #[serde(with = "serde_rat")]
    pub a: Rat,
    #[serde(with = "serde_rat")]
    pub b: Rat,
    #[serde(with = "serde_rat")]
    pub c: Rat,
    pub convention: Convention,
    pub burnside_dimension: usize,
    /// Closures of `|l, j⟩` followed by closures of every `ψ_k^(m)`.
    pub entries: Vec<SeedClosure>,
    pub proper_submodules: Vec<usize>,
    /// Number of distinct proper subspaces among the closures.
    pub distinct_proper_closures: usize,
    pub predicted: Irreducibility,
    pub verdict: Irreducibility,
    /// Burnside, closures and the `a - b` prediction all agree.
    pub consistent: bool,
}

pub fn corollary52(module: &TensorModule, convention: Convention) -> Result<Corollary52Report> {
    let burnside = burnside_dimension(module);
    let proper = proper_submodules(module);
    let verdict = if burnside == DIM * DIM {
        Irreducibility::Irreducible
    } else {
        Irreducibility::Reducible {
            submodule_dims: proper.clone(),
        }
    };

    let mut seeds: Vec<(String, CycVec)> = (0..3)
        .flat_map(|l| (0..3).map(move |j| (l, j)))
        .map(|(l, j)| (format!("|{l},{j}⟩"), CycVec::basis(ORDER, DIM, product_index(l, j))))
        .collect();
    let basis = entangled_basis(convention);
    seeds.extend(basis.iter().map(|((k, m), v)| (format!("ψ_{k}^({m})"), v.clone())));

    let mut entries = Vec::with_capacity(seeds.len());
    let mut distinct: Vec<EchelonBasis> = Vec::new();
    for (name, seed) in seeds {
        let span = submodule_closure(module, &seed)?;
        if !span.is_full() && !distinct.iter().any(|d| same_span(d, &span)) {
            distinct.push(span.clone());
        }
        entries.push(SeedClosure { seed: name, dim: span.dim() });
    }

    let predicted = predicted_verdict(module.a(), module.b());
    let closures_match = distinct.iter().all(|d| proper.contains(&d.dim()));
    let consistent = verdict == predicted
        && closures_match
        && (burnside == DIM * DIM) == proper.is_empty()
        && distinct.len() == proper.len();
    Ok(Corollary52Report {
        check: "corollary52",
        a: module.a().clone(),
        b: module.b().clone(),
        c: module.casimir_constant().clone(),
        convention,
        burnside_dimension: burnside,
        entries,
        proper_submodules: proper,
        distinct_proper_closures: distinct.len(),
        predicted,
        verdict,
        consistent,
    })
}

fn same_span(x: &EchelonBasis, y: &EchelonBasis) -> bool {
    x.dim() == y.dim() && y.rows().iter().all(|v| x.contains(v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;
    use crate::rep_engine::entangled::PhaseTag;
    use crate::rep_engine::tensor::build_tensor_module;

    fn module(a: Rat, b: Rat) -> TensorModule {
        build_tensor_module(a, b, rat(1, 2))
    }

    fn conv() -> Convention {
        Convention::new(PhaseTag::Subscript, 2).unwrap()
    }

    #[test]
    fn zero_seed_rejected() {
        let m = module(int(1), int(0));
        assert_eq!(submodule_closure(&m, &CycVec::zeros(ORDER, 9)).unwrap_err(), Error::ZeroSeed);
    }

    #[test]
    fn isotypic_components_are_sl3_stable() {
        // With a = b = c = 0 only the Lie action is nonzero.
        let lie_only = build_tensor_module(int(0), int(0), int(0));
        let [singlet, adjoint] = isotypic_components();
        assert_eq!((singlet.dim(), adjoint.dim()), (1, 8));
        assert!(is_invariant(&lie_only, &singlet));
        assert!(is_invariant(&lie_only, &adjoint));
    }

    #[test]
    fn generic_is_irreducible() {
        let m = module(int(1), int(0));
        assert_eq!(burnside_dimension(&m), 81);
        assert_eq!(irreducibility(&m), Irreducibility::Irreducible);
        let seed = CycVec::basis(ORDER, 9, 4);
        assert_eq!(submodule_closure(&m, &seed).unwrap().dim(), 9);
    }

    #[test]
    fn singlet_submodule_at_plus_three_halves() {
        let m = module(rat(3, 2), int(0));
        assert_eq!(
            irreducibility(&m),
            Irreducibility::Reducible { submodule_dims: vec![1] }
        );
        let psi = entangled_basis(conv()).get(1, 1).clone();
        assert_eq!(submodule_closure(&m, &psi).unwrap().dim(), 1);
        let r = corollary52(&m, conv()).unwrap();
        assert!(r.consistent, "{r:#?}");
        assert!(r.burnside_dimension < 81);
    }

    #[test]
    fn adjoint_submodule_at_minus_three_halves() {
        let m = module(int(0), rat(3, 2));
        assert_eq!(
            irreducibility(&m),
            Irreducibility::Reducible { submodule_dims: vec![8] }
        );
        // |0,1⟩ lies in the traceless part
        let seed = CycVec::basis(ORDER, 9, product_index(0, 1));
        assert_eq!(submodule_closure(&m, &seed).unwrap().dim(), 8);
        let r = corollary52(&m, conv()).unwrap();
        assert!(r.consistent, "{r:#?}");
        assert_eq!(r.distinct_proper_closures, 1);
    }
}
