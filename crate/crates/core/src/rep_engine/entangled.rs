//! Maximally entangled basis of `C^3 ⊗ C^3`, up to a finite family of
//! labelling conventions.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{rat, root_of_unity, Cyc};
use crate::principal_gl::CycVec;

use super::sl3::ORDER;

/// Flat index of the product basis vector `|l, j⟩`, labels in `0..3`.
pub fn product_index(l: usize, j: usize) -> usize {
    3 * l + j
}

/// Reduces an index into `1..=3` modulo 3.
pub fn reduce3(x: i64) -> usize {
    ((x - 1).rem_euclid(3) + 1) as usize
}

/// Which label of `ψ_k^(m)` carries the phase `ω^{l(·-1)}`; the other one
/// selects the diagonal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhaseTag {
    Superscript,
    Subscript,
}

impl PhaseTag {
    pub const ALL: [PhaseTag; 2] = [PhaseTag::Superscript, PhaseTag::Subscript];

    pub fn name(self) -> &'static str {
        match self {
            PhaseTag::Superscript => "superscript",
            PhaseTag::Subscript => "subscript",
        }
    }
}

/// `(phase tag, shift s ∈ Z_3)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Convention {
    pub tag: PhaseTag,
    pub shift: u8,
}

impl Convention {
    pub fn new(tag: PhaseTag, shift: u8) -> Result<Self> {
        if shift >= 3 {
            return Err(Error::InvalidConvention(format!("shift {shift} is not in Z_3")));
        }
        Ok(Self { tag, shift })
    }

    /// All six conventions, superscript first.
    pub fn all() -> Vec<Convention> {
        PhaseTag::ALL
            .into_iter()
            .flat_map(|tag| (0..3).map(move |shift| Convention { tag, shift }))
            .collect()
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.tag.name(), self.shift)
    }
}

impl Serialize for Convention {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Convention {
    type Err = Error;

    /// Parses `"<tag>/<shift>"`, e.g. `subscript/2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidConvention(format!("{s:?}; expected superscript/<0..2> or subscript/<0..2>"));
        let (tag, shift) = s.split_once('/').ok_or_else(bad)?;
        let tag = PhaseTag::ALL
            .into_iter()
            .find(|t| t.name() == tag)
            .ok_or_else(bad)?;
        Convention::new(tag, shift.parse().map_err(|_| bad())?)
    }
}

/// Unnormalized vectors
/// `ψ_k^(m) = Σ_l ω^{l(p-1)} |l, (l + q + s) mod 3⟩`
/// with `(p, q) = (m, k)` for the superscript tag and `(k, m)` for the
/// subscript tag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntangledBasis {
    convention: Convention,
    /// Index `3(k-1) + (m-1)`.
    vectors: Vec<CycVec>,
}

pub fn entangled_basis(convention: Convention) -> EntangledBasis {
    let vectors = (1..=3)
        .flat_map(|k| (1..=3).map(move |m| (k, m)))
        .map(|(k, m)| {
            let (p, q) = match convention.tag {
                PhaseTag::Superscript => (m, k),
                PhaseTag::Subscript => (k, m),
            };
            let mut entries = vec![Cyc::zero(ORDER); 9];
            for l in 0..3 {
                let j = (l + q + convention.shift as usize) % 3;
                entries[product_index(l, j)] = root_of_unity(ORDER, (l * (p - 1)) as i64);
            }
            CycVec::new(ORDER, entries)
        })
        .collect();
    EntangledBasis { convention, vectors }
}

impl EntangledBasis {
    pub fn convention(&self) -> Convention {
        self.convention
    }

    /// `ψ_k^(m)`, indices in `1..=3`.
    pub fn get(&self, k: usize, m: usize) -> &CycVec {
        assert!((1..=3).contains(&k) && (1..=3).contains(&m), "ψ indices are in 1..=3");
        &self.vectors[3 * (k - 1) + (m - 1)]
    }

    /// `((k, m), ψ_k^(m))` in row order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &CycVec)> {
        self.vectors
            .iter()
            .enumerate()
            .map(|(idx, v)| ((idx / 3 + 1, idx % 3 + 1), v))
    }

    /// Coordinates of `v` in this basis, indexed like `iter`. Uses
    /// `⟨ψ, ψ'⟩ = 3δ` for the Hermitian product.
    pub fn coordinates(&self, v: &CycVec) -> Vec<Cyc> {
        let third = rat(1, 3);
        self.vectors.iter().map(|psi| psi.hermitian(v).scale(&third)).collect()
    }
}
