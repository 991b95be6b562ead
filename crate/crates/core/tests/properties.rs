use principal_yangian::exact_arith::{format_rat, parse_rat, rat, root_of_unity, Cyc, Rat};
use principal_yangian::principal_gl::{
    apply_sigma, expand_in_principal, principal_decompose, reconstruct_from_principal, CycMat,
};
use principal_yangian::rep_engine::{
    build_tensor_module, irreducibility, verify_theorem51, Convention, Irreducibility, PhaseTag,
};
use principal_yangian::yangian_core::{s_from_t, t_from_s, GenTable, InverseVariant, Presentation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const ORDERS: [u32; 5] = [3, 4, 5, 6, 8];

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

/// Elements of Q(ω_n) given by up to `n` coefficients on powers of ω, so
/// non-canonical representatives are exercised too.
fn cyc(order: u32) -> impl Strategy<Value = Cyc> {
    prop::collection::vec(small_rat(), order as usize).prop_map(move |c| Cyc::from_poly(order, c))
}

fn triple() -> impl Strategy<Value = (Cyc, Cyc, Cyc)> {
    prop::sample::select(ORDERS.to_vec()).prop_flat_map(|n| (cyc(n), cyc(n), cyc(n)))
}

fn matrix(order: u32, dim: usize) -> impl Strategy<Value = CycMat> {
    prop::collection::vec(cyc(order), dim * dim).prop_map(move |e| {
        CycMat::from_fn(order, dim, dim, |r, c| e[r * dim + c].clone())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((x, y, z) in triple()) {
        let n = x.order();
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, Cyc::zero(n));
        prop_assert_eq!(&x * &Cyc::one(n), x.clone());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        } else {
            prop_assert!(x.inv().is_err());
        }
    }

    #[test]
    fn conjugation((x, y, _) in triple()) {
        prop_assert_eq!(x.conj().conj(), x.clone());
        prop_assert_eq!((&x * &y).conj(), &x.conj() * &y.conj());
        // x·conj(x) is fixed by conjugation
        let norm = &x * &x.conj();
        prop_assert_eq!(norm.conj(), norm);
    }

    #[test]
    fn canonical_form_is_idempotent((x, _, _) in triple()) {
        let c = x.canonicalize();
        prop_assert_eq!(&c, &x);
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert_eq!(c.coeffs().len(), principal_yangian::exact_arith::euler_phi(x.order()));
    }

    #[test]
    fn serde_round_trip((x, _, _) in triple()) {
        let json = serde_json::to_string(&x).unwrap();
        let back: Cyc = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn geometric_sum_vanishes(n in prop::sample::select(ORDERS.to_vec()), k in 1i64..20) {
        prop_assume!(k % n as i64 != 0);
        let sum = (0..n as i64).fold(Cyc::zero(n), |acc, j| &acc + &root_of_unity(n, j * k));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn rational_text_round_trip(r in small_rat()) {
        prop_assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn graded_components_are_sigma_eigenvectors(
        (n, x) in (2usize..=5).prop_flat_map(|n| (Just(n), matrix(n as u32, n)))
    ) {
        let d = principal_decompose(&x).unwrap();
        prop_assert_eq!(d.sum(), x.clone());
        for (k, comp) in d.components.iter().enumerate() {
            prop_assert_eq!(apply_sigma(comp).unwrap(), comp.scale(&root_of_unity(n as u32, k as i64)));
        }
        let coeffs = expand_in_principal(&x).unwrap();
        prop_assert_eq!(reconstruct_from_principal(n, &coeffs), x);
    }

    #[test]
    fn presentation_round_trip(n in 2usize..=4, depth in 1usize..=3, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let t = GenTable::random(Presentation::CartanWeyl, n, 2, depth, &mut rng);
        let s = s_from_t(&t, InverseVariant::Corrected).unwrap();
        prop_assert_eq!(t_from_s(&s).unwrap(), t);
        let s2 = GenTable::random(Presentation::Principal, n, 2, depth, &mut rng);
        prop_assert_eq!(s_from_t(&t_from_s(&s2).unwrap(), InverseVariant::Corrected).unwrap(), s2);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn closed_form_action_at_random_parameters(a in small_rat(), b in small_rat()) {
        let conv = Convention::new(PhaseTag::Subscript, 2).unwrap();
        let r = verify_theorem51(&a, &b, &rat(1, 2), conv);
        prop_assert!(r.passed(), "{} failures", r.failure_count());
    }

    #[test]
    fn verdict_depends_only_on_difference(a in small_rat(), b in small_rat(), t in small_rat()) {
        let m = build_tensor_module(a.clone(), b.clone(), rat(1, 2));
        let shifted = build_tensor_module(&a + &t, &b + &t, rat(1, 2));
        let v = irreducibility(&m);
        prop_assert_eq!(&v, &irreducibility(&shifted));
        let d = &a - &b;
        if d != rat(3, 2) && d != rat(-3, 2) {
            prop_assert_eq!(v, Irreducibility::Irreducible);
        }
    }
}
