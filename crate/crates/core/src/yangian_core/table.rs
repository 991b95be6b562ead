//! Truncated generator tables and the change of presentation between the
//! Cartan-Weyl generators `T_ij^(m)` and the principal generators `S_kl^(m)`.

use std::fmt;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exact_arith::{rat, root_of_unity, Cyc};
use crate::principal_gl::checks::random_matrix;
use crate::principal_gl::{residue, slot, CycMat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Presentation {
    /// `T_ij`, indices are matrix positions `1..=n`.
    CartanWeyl,
    /// `S_kl`, indices are residues mod n.
    Principal,
}

impl Presentation {
    pub fn name(self) -> &'static str {
        match self {
            Presentation::CartanWeyl => "cartan-weyl",
            Presentation::Principal => "principal",
        }
    }
}

/// Which formula is used for the map from `T` to `S`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InverseVariant {
    /// `S_kl = (1/n) Σ_i ω^{-ki} T_{i, i+l}`, the two-sided inverse of `t_from_s`.
    Corrected,
    /// `S_kl = (1/n) Σ_i ω^{-ki} T_{i+l, i}`, transposed indices.
    AsPrinted,
}

impl InverseVariant {
    pub const ALL: [InverseVariant; 2] = [InverseVariant::Corrected, InverseVariant::AsPrinted];

    pub fn name(self) -> &'static str {
        match self {
            InverseVariant::Corrected => "corrected",
            InverseVariant::AsPrinted => "as-printed",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for InverseVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Generators up to level `depth`, each an operator on a module of
/// dimension `dim` over Q(ω_n).
///
/// Level 0 is fixed by convention: `T_ij^(0) = δ_ij`, `S_kl^(0) = δ_k0 δ_l0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenTable {
    presentation: Presentation,
    n: usize,
    dim: usize,
    /// `levels[m][a * n + b]`, storage slots `a, b` in `0..n`.
    levels: Vec<Vec<CycMat>>,
}

impl GenTable {
    /// Table with all generators of level `1..=depth` equal to zero.
    pub fn zero(presentation: Presentation, n: usize, dim: usize, depth: usize) -> Self {
        let order = n as u32;
        let zero = CycMat::zeros(order, dim, dim);
        let id = CycMat::identity(order, dim);
        let level0 = (0..n * n)
            .map(|s| {
                let (a, b) = (s / n, s % n);
                let unit = match presentation {
                    Presentation::CartanWeyl => a == b,
                    Presentation::Principal => a == 0 && b == 0,
                };
                if unit {
                    id.clone()
                } else {
                    zero.clone()
                }
            })
            .collect();
        let mut levels = vec![level0];
        levels.extend((0..depth).map(|_| vec![zero.clone(); n * n]));
        Self {
            presentation,
            n,
            dim,
            levels,
        }
    }

    /// Levels `1..=depth` filled with small random integer-coordinate matrices.
    pub fn random(presentation: Presentation, n: usize, dim: usize, depth: usize, rng: &mut ChaCha8Rng) -> Self {
        let mut t = Self::zero(presentation, n, dim, depth);
        for level in t.levels.iter_mut().skip(1) {
            for m in level.iter_mut() {
                *m = random_matrix(rng, n as u32, dim, dim);
            }
        }
        t
    }

    pub fn presentation(&self) -> Presentation {
        self.presentation
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    fn slot_of(&self, i: i64, j: i64) -> usize {
        let (a, b) = match self.presentation {
            Presentation::CartanWeyl => (slot(self.n, i), slot(self.n, j)),
            Presentation::Principal => (residue(self.n, i), residue(self.n, j)),
        };
        a * self.n + b
    }

    fn check_level(&self, level: usize) -> Result<()> {
        if level > self.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                depth: self.depth(),
            });
        }
        Ok(())
    }

    /// Generator at `(i, j)` and `level`. Cartan-Weyl indices are read
    /// cyclically in `1..=n`, principal indices mod n.
    pub fn get(&self, i: i64, j: i64, level: usize) -> Result<&CycMat> {
        self.check_level(level)?;
        Ok(&self.levels[level][self.slot_of(i, j)])
    }

    /// Sets a generator of level `>= 1`.
    pub fn set(&mut self, i: i64, j: i64, level: usize, value: CycMat) -> Result<()> {
        self.check_level(level)?;
        if level == 0 {
            return Err(Error::LevelOutOfRange { level, depth: self.depth() });
        }
        if value.rows() != self.dim || value.cols() != self.dim || value.order() as usize != self.n {
            return Err(Error::ShapeMismatch(format!(
                "generator must be {d}x{d} over Q(ω_{n})",
                d = self.dim,
                n = self.n
            )));
        }
        let s = self.slot_of(i, j);
        self.levels[level][s] = value;
        Ok(())
    }

    /// Multiplies every generator of level `>= 1` by `c`.
    pub fn scale(&self, c: &Cyc) -> Self {
        let mut out = self.clone();
        for level in out.levels.iter_mut().skip(1) {
            for m in level.iter_mut() {
                *m = m.scale(c);
            }
        }
        out
    }

    /// Entrywise sum of levels `>= 1`; level 0 stays conventional.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (la, lb) in out.levels.iter_mut().zip(&other.levels).skip(1) {
            for (a, b) in la.iter_mut().zip(lb) {
                *a = &*a + b;
            }
        }
        Ok(out)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.presentation != other.presentation
            || self.n != other.n
            || self.dim != other.dim
            || self.depth() != other.depth()
        {
            return Err(Error::ShapeMismatch("generator tables differ in shape".into()));
        }
        Ok(())
    }

    /// Positions and levels where two same-shape tables differ, as
    /// `(i, j, level, difference)` in this table's index convention.
    pub fn differences(&self, other: &Self) -> Result<Vec<(i64, i64, usize, CycMat)>> {
        self.check_compatible(other)?;
        let base = match self.presentation {
            Presentation::CartanWeyl => 1,
            Presentation::Principal => 0,
        };
        let mut out = Vec::new();
        for (level, (la, lb)) in self.levels.iter().zip(&other.levels).enumerate() {
            for (s, (a, b)) in la.iter().zip(lb).enumerate() {
                if a != b {
                    let (i, j) = ((s / self.n) as i64 + base, (s % self.n) as i64 + base);
                    out.push((i, j, level, a - b));
                }
            }
        }
        Ok(out)
    }

    fn expect(&self, presentation: Presentation) -> Result<()> {
        if self.presentation != presentation {
            return Err(Error::WrongPresentation {
                expected: presentation.name(),
                found: self.presentation.name(),
            });
        }
        Ok(())
    }
}

/// `T_ij^(m) = Σ_k ω^{ik} S_{k, j-i}^(m)` for `m >= 1`.
pub fn t_from_s(s: &GenTable) -> Result<GenTable> {
    s.expect(Presentation::Principal)?;
    let n = s.n as i64;
    let mut t = GenTable::zero(Presentation::CartanWeyl, s.n, s.dim, s.depth());
    for level in 1..=s.depth() {
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = CycMat::zeros(n as u32, s.dim, s.dim);
                for k in 0..n {
                    let g = s.get(k, j - i, level)?;
                    if !g.is_zero() {
                        acc = &acc + &g.scale(&root_of_unity(n as u32, i * k));
                    }
                }
                t.set(i, j, level, acc)?;
            }
        }
    }
    Ok(t)
}

/// Principal generators from Cartan-Weyl ones, `m >= 1`.
pub fn s_from_t(t: &GenTable, variant: InverseVariant) -> Result<GenTable> {
    t.expect(Presentation::CartanWeyl)?;
    let n = t.n as i64;
    let inv_n = rat(1, n);
    let mut s = GenTable::zero(Presentation::Principal, t.n, t.dim, t.depth());
    for level in 1..=t.depth() {
        for k in 0..n {
            for l in 0..n {
                let mut acc = CycMat::zeros(n as u32, t.dim, t.dim);
                for i in 1..=n {
                    let g = match variant {
                        InverseVariant::Corrected => t.get(i, i + l, level)?,
                        InverseVariant::AsPrinted => t.get(i + l, i, level)?,
                    };
                    if !g.is_zero() {
                        acc = &acc + &g.scale(&root_of_unity(n as u32, -k * i));
                    }
                }
                s.set(k, l, level, acc.scale_rat(&inv_n))?;
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::principal_gl::{principal_a, unit_e};
    use rand::SeedableRng;

    fn unit_table(n: usize) -> GenTable {
        let mut t = GenTable::zero(Presentation::CartanWeyl, n, n, 1);
        for i in 1..=n {
            for j in 1..=n {
                t.set(i as i64, j as i64, 1, unit_e(n, i, j).unwrap()).unwrap();
            }
        }
        t
    }

    #[test]
    fn level_zero_conventions() {
        let t = GenTable::zero(Presentation::CartanWeyl, 3, 2, 0);
        assert_eq!(t.get(2, 2, 0).unwrap(), &CycMat::identity(3, 2));
        assert!(t.get(1, 2, 0).unwrap().is_zero());
        let s = s_from_t(&t, InverseVariant::Corrected).unwrap();
        assert_eq!(s.depth(), 0);
        assert_eq!(s.get(0, 0, 0).unwrap(), &CycMat::identity(3, 2));
        assert!(s.get(1, 0, 0).unwrap().is_zero());
        assert!(s.get(0, 0, 1).is_err());
    }

    #[test]
    fn wrong_presentation_rejected() {
        let t = GenTable::zero(Presentation::CartanWeyl, 2, 2, 1);
        assert!(matches!(t_from_s(&t), Err(Error::WrongPresentation { .. })));
        let s = GenTable::zero(Presentation::Principal, 2, 2, 1);
        assert!(matches!(s_from_t(&s, InverseVariant::Corrected), Err(Error::WrongPresentation { .. })));
    }

    #[test]
    fn unit_table_n2_by_hand() {
        // n = 2, ω = -1. Expanding the corrected inverse by hand:
        //   S_00 = (E_11 + E_22)/2   S_01 = (E_12 + E_21)/2
        //   S_10 = (-E_11 + E_22)/2  S_11 = (-E_12 + E_21)/2
        let e = |i, j| unit_e(2, i, j).unwrap();
        let half = rat(1, 2);
        let expected = [
            ((0, 0), (&e(1, 1) + &e(2, 2)).scale_rat(&half)),
            ((0, 1), (&e(1, 2) + &e(2, 1)).scale_rat(&half)),
            ((1, 0), (&e(2, 2) - &e(1, 1)).scale_rat(&half)),
            ((1, 1), (&e(2, 1) - &e(1, 2)).scale_rat(&half)),
        ];
        let s = s_from_t(&unit_table(2), InverseVariant::Corrected).unwrap();
        for ((k, l), m) in expected {
            assert_eq!(s.get(k, l, 1).unwrap(), &m, "S_{k}{l}");
            // closed form: A_{-k,l}/n
            assert_eq!(&principal_a(2, -k, l).scale_rat(&half), &m);
        }
        assert_eq!(t_from_s(&s).unwrap(), unit_table(2));
    }

    #[test]
    fn single_s00_spreads_to_diagonal() {
        let mut s = GenTable::zero(Presentation::Principal, 3, 2, 1);
        let x = CycMat::from_fn(3, 2, 2, |r, c| Cyc::from_int(3, (r * 2 + c + 1) as i64));
        s.set(0, 0, 1, x.clone()).unwrap();
        let t = t_from_s(&s).unwrap();
        for i in 1..=3 {
            for j in 1..=3 {
                let g = t.get(i, j, 1).unwrap();
                if i == j {
                    assert_eq!(g, &x);
                } else {
                    assert!(g.is_zero());
                }
            }
        }
    }

    #[test]
    fn maps_are_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let s = GenTable::random(Presentation::Principal, 3, 2, 2, &mut rng);
        let s2 = GenTable::random(Presentation::Principal, 3, 2, 2, &mut rng);
        let c = &root_of_unity(3, 1) + &Cyc::from_int(3, 2);
        assert_eq!(t_from_s(&s.scale(&c)).unwrap(), t_from_s(&s).unwrap().scale(&c));
        assert_eq!(
            t_from_s(&s.add(&s2).unwrap()).unwrap(),
            t_from_s(&s).unwrap().add(&t_from_s(&s2).unwrap()).unwrap()
        );
        let t = t_from_s(&s).unwrap();
        assert_eq!(
            s_from_t(&t.scale(&c), InverseVariant::Corrected).unwrap(),
            s_from_t(&t, InverseVariant::Corrected).unwrap().scale(&c)
        );
    }

    #[test]
    fn transposed_inverse_flips_second_index() {
        // Composing the transposed-index inverse with the forward map sends S_kl to
        // ω^{kl} S_{k,-l}.
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let s = GenTable::random(Presentation::Principal, 3, 2, 1, &mut rng);
        let back = s_from_t(&t_from_s(&s).unwrap(), InverseVariant::AsPrinted).unwrap();
        for k in 0..3 {
            for l in 0..3 {
                let want = s.get(k, -l, 1).unwrap().scale(&root_of_unity(3, k * l));
                assert_eq!(back.get(k, l, 1).unwrap(), &want);
            }
        }
        assert_ne!(back, s);
    }
}
