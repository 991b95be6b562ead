//! Dense matrices and vectors over Q(ω_n).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact_arith::{Cyc, Rat};

/// Row-major dense matrix; every entry lives in the same cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMat {
    order: u32,
    rows: usize,
    cols: usize,
    entries: Vec<Cyc>,
}

impl CycMat {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        Self {
            order,
            rows,
            cols,
            entries: vec![Cyc::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, dim: usize) -> Self {
        let mut m = Self::zeros(order, dim, dim);
        for i in 0..dim {
            m.set(i, i, Cyc::one(order));
        }
        m
    }

    pub fn from_fn(order: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Cyc) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                let v = f(r, c);
                assert_eq!(v.order(), order, "entry order mismatch");
                entries.push(v);
            }
        }
        Self {
            order,
            rows,
            cols,
            entries,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based access.
    pub fn get(&self, r: usize, c: usize) -> &Cyc {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Cyc) {
        assert_eq!(v.order(), self.order, "entry order mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn add_at(&mut self, r: usize, c: usize, v: &Cyc) {
        self.entries[r * self.cols + c] += v;
    }

    pub fn entries(&self) -> &[Cyc] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyc::is_zero)
    }

    /// Positions of nonzero entries, row-major.
    pub fn support(&self) -> Vec<(usize, usize)> {
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .filter(|&(r, c)| !self.get(r, c).is_zero())
            .collect()
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{what}: {}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b;
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a -= b;
        }
        Ok(out)
    }

    /// Matrix product; zero entries are skipped, which matters for the
    /// sparse principal-basis matrices.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "mul: {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.order, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.add_at(i, j, &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Cyc) -> Self {
        if s.is_one() {
            return self.clone();
        }
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            if !e.is_zero() {
                *e = &*e * s;
            }
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = e.scale(r);
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.order, self.cols, self.rows, |r, c| self.get(c, r).clone())
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        let (r2, c2) = (other.rows, other.cols);
        let mut out = Self::zeros(self.order, self.rows * r2, self.cols * c2);
        for (i, j) in self.support() {
            let a = self.get(i, j);
            for (k, l) in other.support() {
                out.set(i * r2 + k, j * c2 + l, a * other.get(k, l));
            }
        }
        out
    }

    pub fn trace(&self) -> Cyc {
        let mut t = Cyc::zero(self.order);
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    pub fn pow(&self, e: u32) -> Self {
        assert!(self.is_square());
        (0..e).fold(Self::identity(self.order, self.rows), |acc, _| &acc * self)
    }

    pub fn mul_vec(&self, v: &CycVec) -> Result<CycVec> {
        if self.cols != v.len() {
            return Err(Error::ShapeMismatch(format!(
                "mul_vec: {}x{} by length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        let mut out = CycVec::zeros(self.order, self.rows);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if !a.is_zero() && !v.get(k).is_zero() {
                    out.entries[i] += &(a * v.get(k));
                }
            }
        }
        Ok(out)
    }

    /// Row-major flattening, used when matrices are treated as vectors.
    pub fn to_vec(&self) -> CycVec {
        CycVec::new(self.order, self.entries.clone())
    }

    pub fn dump(&self) -> MatrixDump {
        MatrixDump {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.chunks(self.cols.max(1)).map(<[Cyc]>::to_vec).collect(),
        }
    }
}

impl fmt::Debug for CycMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMat<{}> {}x{} [", self.order, self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

macro_rules! mat_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&CycMat> for &CycMat {
            type Output = CycMat;
            fn $method(self, rhs: &CycMat) -> CycMat {
                match self.$checked(rhs) {
                    Ok(m) => m,
                    Err(e) => panic!("{e}"),
                }
            }
        }
        impl $tr<CycMat> for CycMat {
            type Output = CycMat;
            fn $method(self, rhs: CycMat) -> CycMat {
                (&self).$method(&rhs)
            }
        }
    };
}

mat_binop!(Add, add, try_add);
mat_binop!(Sub, sub, try_sub);
mat_binop!(Mul, mul, try_mul);

impl Neg for &CycMat {
    type Output = CycMat;
    fn neg(self) -> CycMat {
        let mut out = self.clone();
        for e in out.entries.iter_mut() {
            *e = -&*e;
        }
        out
    }
}

/// JSON matrix dump: `{order, rows, cols, entries: [[Cyc]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub order: u32,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Cyc>>,
}

impl MatrixDump {
    pub fn into_matrix(self) -> Result<CycMat> {
        if self.entries.len() != self.rows || self.entries.iter().any(|r| r.len() != self.cols) {
            return Err(Error::ShapeMismatch("matrix dump rows/cols disagree with entries".into()));
        }
        if let Some(bad) = self.entries.iter().flatten().find(|e| e.order() != self.order) {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: bad.order(),
            });
        }
        Ok(CycMat {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.into_iter().flatten().collect(),
        })
    }
}

/// Column vector over Q(ω_n).
#[derive(Clone, PartialEq, Eq)]
pub struct CycVec {
    order: u32,
    entries: Vec<Cyc>,
}

impl CycVec {
    pub fn new(order: u32, entries: Vec<Cyc>) -> Self {
        assert!(entries.iter().all(|e| e.order() == order), "entry order mismatch");
        Self { order, entries }
    }

    pub fn zeros(order: u32, len: usize) -> Self {
        Self::new(order, vec![Cyc::zero(order); len])
    }

    /// Zero-based standard basis vector.
    pub fn basis(order: u32, len: usize, idx: usize) -> Self {
        let mut v = Self::zeros(order, len);
        v.entries[idx] = Cyc::one(order);
        v
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> &Cyc {
        &self.entries[i]
    }

    pub fn entries(&self) -> &[Cyc] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Cyc> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Cyc::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn scale(&self, s: &Cyc) -> Self {
        Self::new(self.order, self.entries.iter().map(|e| e * s).collect())
    }

    pub fn add_scaled(&mut self, other: &Self, s: &Cyc) {
        assert_eq!(self.len(), other.len());
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a += &(b * s);
            }
        }
    }

    /// Bilinear pairing `Σ x_i y_i`, so that `(v_i | v_j) = δ_ij`.
    pub fn pairing(&self, other: &Self) -> Cyc {
        assert_eq!(self.len(), other.len());
        let mut acc = Cyc::zero(self.order);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(a * b);
            }
        }
        acc
    }

    /// Hermitian product `Σ conj(x_i) y_i`.
    pub fn hermitian(&self, other: &Self) -> Cyc {
        assert_eq!(self.len(), other.len());
        let mut acc = Cyc::zero(self.order);
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += &(&a.conj() * b);
            }
        }
        acc
    }
}

impl fmt::Debug for CycVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "CycVec<{}>[{}]", self.order, parts.join(", "))
    }
}

impl Add<&CycVec> for &CycVec {
    type Output = CycVec;
    fn add(self, rhs: &CycVec) -> CycVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyc::one(self.order));
        out
    }
}

impl Sub<&CycVec> for &CycVec {
    type Output = CycVec;
    fn sub(self, rhs: &CycVec) -> CycVec {
        let mut out = self.clone();
        out.add_scaled(rhs, &Cyc::from_int(self.order, -1));
        out
    }
}
