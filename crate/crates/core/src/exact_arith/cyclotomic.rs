//! Exact arithmetic in the cyclotomic field Q(ω), ω = e^{2πi/n}.
//!
//! Elements are stored in canonical form: coordinates over the power basis
//! `1, ω, …, ω^{φ(n)-1}` after reduction modulo the n-th cyclotomic
//! polynomial Φ_n. Since Φ_n is irreducible, two elements are equal exactly
//! when their coordinate vectors are equal.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Arc, OnceLock, RwLock};

use num::{BigInt, One, Signed, ToPrimitive, Zero};
use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

use super::poly::{self, QPoly};
use super::rational::{display_rat, format_rat, is_negative, parse_rat, Rat};
use crate::error::{Error, Result};

/// Coefficients of Φ_n, lowest degree first.
///
/// Computed by dividing `x^n - 1` by every Φ_d with `d | n`, `d < n`.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic order must be positive");
    let mut p = vec![BigInt::zero(); n as usize + 1];
    p[0] = BigInt::from(-1);
    p[n as usize] = BigInt::one();
    for d in (1..n).filter(|d| n % d == 0) {
        p = div_exact_monic(&p, &cyclotomic_poly(d));
    }
    p
}

fn div_exact_monic(a: &[BigInt], d: &[BigInt]) -> Vec<BigInt> {
    let dd = d.len() - 1;
    debug_assert!(d[dd].is_one());
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - dd];
    for shift in (0..quot.len()).rev() {
        let c = rem[shift + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (i, dc) in d.iter().enumerate() {
            rem[shift + i] -= &c * dc;
        }
        quot[shift] = c;
    }
    debug_assert!(rem.iter().all(Zero::is_zero), "inexact division");
    quot
}

pub fn euler_phi(n: u32) -> usize {
    cyclotomic_poly(n).len() - 1
}

/// Per-order data shared by all elements of one field.
#[derive(Debug)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<BigInt>,
    /// Canonical coordinates of ω^k for k in 0..n.
    powers: Vec<Vec<Rat>>,
}

impl CyclotomicField {
    fn build(order: u32) -> Self {
        let modulus = cyclotomic_poly(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut cur = vec![Rat::zero(); phi];
        cur[0] = Rat::one();
        for _ in 0..order {
            powers.push(cur.clone());
            let mut next = vec![Rat::zero(); phi + 1];
            for (i, c) in cur.iter().enumerate() {
                next[i + 1] = c.clone();
            }
            reduce_in_place(&mut next, &modulus);
            cur = next;
        }
        Self {
            order,
            modulus,
            powers,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[BigInt] {
        &self.modulus
    }
}

/// Reduces a coefficient vector modulo the monic `modulus`, truncating it to
/// `deg(modulus)` entries.
fn reduce_in_place(p: &mut Vec<Rat>, modulus: &[BigInt]) {
    let phi = modulus.len() - 1;
    for d in (phi..p.len()).rev() {
        if p[d].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut p[d]);
        for (k, mk) in modulus.iter().enumerate().take(phi) {
            if mk.is_zero() {
                continue;
            }
            p[d - phi + k] -= &c * mk;
        }
    }
    p.resize(phi, Rat::zero());
}

static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<CyclotomicField>>>> = OnceLock::new();

/// Shared field data for Q(ω_n), built once per order.
pub fn field(order: u32) -> Arc<CyclotomicField> {
    assert!(order >= 1, "cyclotomic order must be positive");
    let cache = FIELDS.get_or_init(Default::default);
    if let Some(f) = cache.read().expect("field cache poisoned").get(&order) {
        return Arc::clone(f);
    }
    let built = Arc::new(CyclotomicField::build(order));
    let mut w = cache.write().expect("field cache poisoned");
    Arc::clone(w.entry(order).or_insert(built))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycOp {
    Add,
    Sub,
    Mul,
}

/// An element of Q(ω_n) in canonical form.
#[derive(Clone)]
pub struct Cyc {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rat>,
}

impl Cyc {
    pub fn zero(order: u32) -> Self {
        let field = field(order);
        let coeffs = vec![Rat::zero(); field.degree()];
        Self { field, coeffs }
    }

    pub fn one(order: u32) -> Self {
        Self::from_rat(order, Rat::one())
    }

    pub fn from_rat(order: u32, r: Rat) -> Self {
        let mut c = Self::zero(order);
        c.coeffs[0] = r;
        c
    }

    pub fn from_int(order: u32, v: i64) -> Self {
        Self::from_rat(order, Rat::from_integer(BigInt::from(v)))
    }

    /// Element `Σ c_k ω^k` for an arbitrary-length coefficient list.
    pub fn from_poly(order: u32, coeffs: Vec<Rat>) -> Self {
        let field = field(order);
        let mut coeffs = coeffs;
        if coeffs.len() < field.degree() {
            coeffs.resize(field.degree(), Rat::zero());
        }
        reduce_in_place(&mut coeffs, &field.modulus);
        Self { field, coeffs }
    }

    /// ω^k with k taken modulo n.
    pub fn root(order: u32, k: i64) -> Self {
        let field = field(order);
        let idx = k.rem_euclid(order as i64) as usize;
        let coeffs = field.powers[idx].clone();
        Self { field, coeffs }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Some(r) when the element is the rational r.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    /// Re-reduces the stored coordinates. Values built through this API are
    /// already canonical, so this is the identity on them.
    pub fn canonicalize(&self) -> Self {
        Self::from_poly(self.order(), self.coeffs.clone())
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(self.with_coeffs(coeffs))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.order()));
        }
        if let Some(r) = self.as_rat() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rat() {
            return Ok(self.scale(r));
        }
        let phi = self.coeffs.len();
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        reduce_in_place(&mut prod, &self.field.modulus);
        Ok(self.with_coeffs(prod))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against Φ_n.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rat() {
            return Ok(Self::from_rat(self.order(), r.recip()));
        }
        let mut a: QPoly = self.coeffs.clone();
        poly::trim(&mut a);
        let m: QPoly = self.field.modulus.iter().cloned().map(Rat::from_integer).collect();
        let (g, s) = poly::ext_gcd_left(&a, &m);
        // Φ_n is irreducible, so a nonzero element is coprime to it.
        debug_assert!(g.len() == 1 && g[0].is_one());
        Ok(Self::from_poly(self.order(), s))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.try_mul(&other.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return Self::zero(self.order());
        }
        self.with_coeffs(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Complex conjugation, the field automorphism ω ↦ ω^{-1}.
    pub fn conj(&self) -> Self {
        let n = self.order() as usize;
        let mut out = vec![Rat::zero(); self.coeffs.len()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, p) in out.iter_mut().zip(&self.field.powers[(n - k) % n]) {
                if !p.is_zero() {
                    *o += c * p;
                }
            }
        }
        self.with_coeffs(out)
    }

    pub fn pow(&self, e: u64) -> Self {
        let mut acc = Self::one(self.order());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Floating-point rendering for display only.
    pub fn to_complex(&self) -> (f64, f64) {
        let theta = 2.0 * std::f64::consts::PI / self.order() as f64;
        self.coeffs
            .iter()
            .enumerate()
            .fold((0.0, 0.0), |(re, im), (k, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                let a = theta * k as f64;
                (re + v * a.cos(), im + v * a.sin())
            })
    }

    fn with_coeffs(&self, coeffs: Vec<Rat>) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

/// ω^k in Q(ω_n), k taken modulo n.
pub fn root_of_unity(n: u32, k: i64) -> Cyc {
    Cyc::root(n, k)
}

pub fn cyc_arith(x: &Cyc, y: &Cyc, op: CycOp) -> Result<Cyc> {
    match op {
        CycOp::Add => x.try_add(y),
        CycOp::Sub => x.try_sub(y),
        CycOp::Mul => x.try_mul(y),
    }
}

pub fn cyc_inv(x: &Cyc) -> Result<Cyc> {
    x.inv()
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        self.order() == other.order() && self.coeffs == other.coeffs
    }
}

impl Eq for Cyc {}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc<{}>({})", self.order(), self)
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = is_negative(c);
            let mag = display_rat(&c.abs());
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            match k {
                0 => f.write_str(&mag)?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}·")?;
                    }
                    f.write_str("ω")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Cyc> for &Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &Cyc) -> Cyc {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }
        impl $tr<Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: Cyc) -> Cyc {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Cyc> for Cyc {
            type Output = Cyc;
            fn $method(self, rhs: &Cyc) -> Cyc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl AddAssign<&Cyc> for Cyc {
    fn add_assign(&mut self, rhs: &Cyc) {
        assert_eq!(self.order(), rhs.order(), "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyc> for Cyc {
    fn sub_assign(&mut self, rhs: &Cyc) {
        assert_eq!(self.order(), rhs.order(), "cyclotomic order mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

impl Neg for &Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        self.with_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        -&self
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    order: u32,
    coeffs: Vec<String>,
}

impl Serialize for Cyc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CycRepr {
            order: self.order(),
            coeffs: self.coeffs.iter().map(format_rat).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Cyc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = CycRepr::deserialize(d)?;
        if repr.order == 0 {
            return Err(D::Error::custom("cyclotomic order must be positive"));
        }
        let coeffs = repr
            .coeffs
            .iter()
            .map(|s| parse_rat(s))
            .collect::<Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        if coeffs.len() != euler_phi(repr.order) {
            return Err(D::Error::custom(format!(
                "expected {} coefficients for order {}",
                euler_phi(repr.order),
                repr.order
            )));
        }
        Ok(Cyc::from_poly(repr.order, coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, rat};

    fn coeffs_of(p: &[i64]) -> Vec<BigInt> {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    fn cyc(n: u32, cs: &[Rat]) -> Cyc {
        Cyc::from_poly(n, cs.to_vec())
    }

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), coeffs_of(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), coeffs_of(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), coeffs_of(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), coeffs_of(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), coeffs_of(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(8), coeffs_of(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic_poly(12), coeffs_of(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn phi_values() {
        let expected = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (n, &e) in (1..=12).zip(expected.iter()) {
            assert_eq!(euler_phi(n), e, "phi({n})");
        }
    }

    #[test]
    fn roots_of_unity_examples() {
        assert!(root_of_unity(3, 3).is_one());
        assert_eq!(root_of_unity(3, 2), cyc(3, &[int(-1), int(-1)]));
        assert!((root_of_unity(4, 1) * root_of_unity(4, 3)).is_one());
        assert_eq!(root_of_unity(5, -1), root_of_unity(5, 4));
    }

    #[test]
    fn primitive_root_has_exact_order() {
        for n in 1..=12u32 {
            let w = root_of_unity(n, 1);
            assert!(w.pow(n as u64).is_one());
            for k in 1..n {
                assert!(!w.pow(k as u64).is_one(), "ω_{n}^{k} = 1");
            }
        }
    }

    #[test]
    fn arithmetic_examples() {
        let w = root_of_unity(3, 1);
        let w2 = root_of_unity(3, 2);
        assert_eq!(cyc_arith(&w, &w2, CycOp::Add).unwrap(), Cyc::from_int(3, -1));
        assert!(cyc_arith(&w, &w2, CycOp::Mul).unwrap().is_one());
        let i = root_of_unity(4, 1);
        let one = Cyc::one(4);
        let prod = cyc_arith(&(&one + &i), &(&one - &i), CycOp::Mul).unwrap();
        assert_eq!(prod, Cyc::from_int(4, 2));
    }

    #[test]
    fn order_mismatch_rejected() {
        let e = cyc_arith(&Cyc::one(3), &Cyc::one(4), CycOp::Add).unwrap_err();
        assert_eq!(e, Error::OrderMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_examples() {
        let w = root_of_unity(3, 1);
        assert_eq!(cyc_inv(&w).unwrap(), root_of_unity(3, 2));
        assert_eq!(cyc_inv(&Cyc::from_int(3, 2)).unwrap(), Cyc::from_rat(3, rat(1, 2)));
        assert_eq!(cyc_inv(&Cyc::zero(5)).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn inverse_of_one_minus_omega() {
        // Candidate from (1-ω)(1-ω²) = 3: inverse is (1-ω²)/3 = (2+ω)/3.
        let x = Cyc::one(3) - root_of_unity(3, 1);
        let candidate = cyc(3, &[rat(2, 3), rat(1, 3)]);
        assert!((&x * &candidate).is_one());
        assert_eq!(x.inv().unwrap(), candidate);
    }

    #[test]
    fn geometric_sums() {
        for n in 1..=12u32 {
            let w = root_of_unity(n, 1);
            for j in 0..n {
                let wj = w.pow(j as u64);
                let mut sum = Cyc::zero(n);
                let mut term = Cyc::one(n);
                for _ in 0..n {
                    sum += &term;
                    term = &term * &wj;
                }
                let expected = if j == 0 { Cyc::from_int(n as u32, n as i64) } else { Cyc::zero(n) };
                assert_eq!(sum, expected, "n={n} j={j}");
            }
        }
    }

    #[test]
    fn conjugation_inverts_roots() {
        for n in 1..=10u32 {
            for k in 0..n as i64 {
                assert_eq!(root_of_unity(n, k).conj(), root_of_unity(n, -k));
            }
        }
    }

    #[test]
    fn serialization_format() {
        let x = cyc(3, &[rat(2, 3), int(-1)]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"order":3,"coeffs":["2/3","-1/1"]}"#);
        let back: Cyc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_str::<Cyc>(r#"{"order":3,"coeffs":["1/1"]}"#).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(root_of_unity(3, 2).to_string(), "-1 - ω");
        assert_eq!(Cyc::zero(4).to_string(), "0");
        assert_eq!(cyc(5, &[rat(1, 2), int(0), int(3)]).to_string(), "1/2 + 3·ω^2");
        let (re, im) = root_of_unity(4, 1).to_complex();
        assert!(re.abs() < 1e-12 && (im - 1.0).abs() < 1e-12);
    }
}
