//! Polynomials in two commuting formal variables `u`, `v` with square
//! matrix coefficients. Used for denominator-cleared Yang-Baxter and RTT
//! residuals.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use crate::exact_arith::Cyc;
use crate::principal_gl::CycMat;

/// `Σ c_{pq} u^p v^q`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiPolyMat {
    order: u32,
    dim: usize,
    terms: BTreeMap<(usize, usize), CycMat>,
}

impl BiPolyMat {
    pub fn zero(order: u32, dim: usize) -> Self {
        Self {
            order,
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// `c · u^du · v^dv`.
    pub fn monomial(du: usize, dv: usize, c: CycMat) -> Self {
        assert!(c.is_square());
        let mut p = Self::zero(c.order(), c.rows());
        p.add_term(du, dv, c);
        p
    }

    pub fn constant(c: CycMat) -> Self {
        Self::monomial(0, 0, c)
    }

    /// `a·u + b·v` times the identity, plus `c`.
    pub fn linear(a: i64, b: i64, c: &CycMat) -> Self {
        let id = CycMat::identity(c.order(), c.rows());
        let mut p = Self::constant(c.clone());
        p.add_term(1, 0, id.scale(&Cyc::from_int(c.order(), a)));
        p.add_term(0, 1, id.scale(&Cyc::from_int(c.order(), b)));
        p
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `(deg_u, deg_v)`; `(0, 0)` for the zero polynomial.
    pub fn degrees(&self) -> (usize, usize) {
        self.terms
            .keys()
            .fold((0, 0), |(a, b), &(p, q)| (a.max(p), b.max(q)))
    }

    pub fn coeff(&self, du: usize, dv: usize) -> Option<&CycMat> {
        self.terms.get(&(du, dv))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &CycMat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, du: usize, dv: usize, c: CycMat) {
        assert_eq!(c.rows(), self.dim, "coefficient dimension mismatch");
        assert_eq!(c.order(), self.order, "coefficient order mismatch");
        if c.is_zero() {
            return;
        }
        let key = (du, dv);
        let sum = match self.terms.remove(&key) {
            Some(prev) => &prev + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    /// Exchanges the roles of `u` and `v`.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero(self.order, self.dim);
        for (&(p, q), c) in &self.terms {
            out.add_term(q, p, c.clone());
        }
        out
    }

    /// Applies `f` to every coefficient (used to embed into larger spaces).
    pub fn map_coeffs(&self, dim: usize, f: impl Fn(&CycMat) -> CycMat) -> Self {
        let mut out = Self::zero(self.order, dim);
        for (&(p, q), c) in &self.terms {
            out.add_term(p, q, f(c));
        }
        out
    }
}

impl Add<&BiPolyMat> for &BiPolyMat {
    type Output = BiPolyMat;
    fn add(self, rhs: &BiPolyMat) -> BiPolyMat {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, c.clone());
        }
        out
    }
}

impl Sub<&BiPolyMat> for &BiPolyMat {
    type Output = BiPolyMat;
    fn sub(self, rhs: &BiPolyMat) -> BiPolyMat {
        let mut out = self.clone();
        for (&(p, q), c) in &rhs.terms {
            out.add_term(p, q, -c);
        }
        out
    }
}

impl Mul<&BiPolyMat> for &BiPolyMat {
    type Output = BiPolyMat;
    fn mul(self, rhs: &BiPolyMat) -> BiPolyMat {
        let mut out = BiPolyMat::zero(self.order, self.dim);
        for (&(p, q), a) in &self.terms {
            for (&(r, s), b) in &rhs.terms {
                out.add_term(p + r, q + s, a * b);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn commuting_variables() {
        let id = CycMat::identity(2, 1);
        let u = BiPolyMat::monomial(1, 0, id.clone());
        let v = BiPolyMat::monomial(0, 1, id.clone());
        assert_eq!(&u * &v, &v * &u);
        // (u + v)(u - v) = u² - v²
        let lhs = &(&u + &v) * &(&u - &v);
        let rhs = &BiPolyMat::monomial(2, 0, id.clone()) - &BiPolyMat::monomial(0, 2, id);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.degrees(), (2, 2));
        assert!((&lhs - &rhs).is_zero());
    }

    #[test]
    fn swap_and_linear() {
        let c = CycMat::identity(3, 2);
        let p = BiPolyMat::linear(1, -1, &c);
        let q = p.swap_vars();
        assert_eq!(q.coeff(0, 1), p.coeff(1, 0));
        assert_eq!(q.coeff(1, 0).unwrap(), &(-&c));
    }
}
