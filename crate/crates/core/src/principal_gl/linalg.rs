//! Exact Gaussian elimination over Q(ω_n). Pivots are the first nonzero
//! entry in column order; results are deterministic.

use crate::error::{Error, Result};
use crate::exact_arith::Cyc;

use super::matrix::{CycMat, CycVec};

/// Incrementally built row-echelon basis of a subspace.
///
/// Every stored row has a 1 in its pivot column and zeros in the pivot
/// columns of all earlier rows.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    order: u32,
    len: usize,
    rows: Vec<CycVec>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(order: u32, len: usize) -> Self {
        Self {
            order,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.len
    }

    pub fn rows(&self) -> &[CycVec] {
        &self.rows
    }

    /// Component of `v` left after eliminating against the basis.
    pub fn reduce(&self, v: &CycVec) -> CycVec {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let mut r = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r.get(p).clone();
            if !c.is_zero() {
                r.add_scaled(row, &-c);
            }
        }
        r
    }

    pub fn contains(&self, v: &CycVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` if it is independent of the current rows; returns whether it was.
    pub fn insert(&mut self, v: &CycVec) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.entries().iter().position(|e| !e.is_zero()) else {
            return false;
        };
        let inv = r.get(p).inv().expect("pivot is nonzero");
        self.rows.push(r.scale(&inv));
        self.pivots.push(p);
        true
    }
}

/// Rank of a matrix.
pub fn rank(m: &CycMat) -> usize {
    let mut basis = EchelonBasis::new(m.order(), m.cols());
    for r in 0..m.rows() {
        let row = CycVec::new(m.order(), (0..m.cols()).map(|c| m.get(r, c).clone()).collect());
        basis.insert(&row);
    }
    basis.dim()
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &CycMat, b: &CycVec) -> Result<CycVec> {
    let n = a.rows();
    if !a.is_square() || b.len() != n {
        return Err(Error::ShapeMismatch(format!(
            "solve: {}x{} system with rhs of length {}",
            a.rows(),
            a.cols(),
            b.len()
        )));
    }
    let order = a.order();
    let mut aug: Vec<Vec<Cyc>> = (0..n)
        .map(|r| {
            let mut row: Vec<Cyc> = (0..n).map(|c| a.get(r, c).clone()).collect();
            row.push(b.get(r).clone());
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !aug[r][col].is_zero())
            .ok_or(Error::DivisionByZero)?;
        aug.swap(col, piv);
        let inv = aug[col][col].inv()?;
        for e in aug[col].iter_mut() {
            *e = &*e * &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (e, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *e -= &(&f * p);
                }
            }
        }
    }
    Ok(CycVec::new(order, aug.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// Inverse of a square nonsingular matrix, column by column.
pub fn inverse(a: &CycMat) -> Result<CycMat> {
    let n = a.rows();
    let cols: Vec<CycVec> = (0..n)
        .map(|j| solve(a, &CycVec::basis(a.order(), n, j)))
        .collect::<Result<_>>()?;
    Ok(CycMat::from_fn(a.order(), n, n, |r, c| cols[c].get(r).clone()))
}
