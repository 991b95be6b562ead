//! Defining relations of the Yangian checked on concrete generator tables,
//! in both presentations, and the two candidate evaluation tables for the
//! principal generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::{rat, root_of_unity};
use crate::principal_gl::{permutation_p_unit, principal_a, CycMat};

use super::table::{GenTable, Presentation};

/// Exponent pair `(e1, e2)` in the componentwise principal relation
///
/// ```text
/// [S_ij^(l+1), S_i'j'^(m)] - [S_ij^(l), S_i'j'^(m+1)]
///   = Σ_ab ω^{e1}/n S_{i'+a,j'+b}^(l) S_{i-a,j-b}^(m)
///   - Σ_ab ω^{e2}/n S_{i'+a,j'+b}^(m) S_{i-a,j-b}^(l)
/// ```
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExponentVariant {
    /// `e1 = (i-i')b - ab`, `e2 = (j-j')b + ab`.
    AsPrinted,
    /// `e1 = ib - bi' - ab`, `e2 = ja - aj' + ab`.
    TheoremStatement,
    /// `e1 = e2 = (j-j')a - ab`, obtained by substituting
    /// `T_ij = Σ_k ω^{ik} S_{k,j-i}` into the Cartan-Weyl relations.
    RttDerived,
}

impl ExponentVariant {
    pub const ALL: [ExponentVariant; 3] = [
        ExponentVariant::AsPrinted,
        ExponentVariant::TheoremStatement,
        ExponentVariant::RttDerived,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ExponentVariant::AsPrinted => "as-printed",
            ExponentVariant::TheoremStatement => "theorem",
            ExponentVariant::RttDerived => "rtt-derived",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == s)
    }

    pub fn exponents(self, idx: (i64, i64, i64, i64), a: i64, b: i64) -> (i64, i64) {
        let (i, j, i2, j2) = idx;
        match self {
            ExponentVariant::AsPrinted => ((i - i2) * b - a * b, (j - j2) * b + a * b),
            ExponentVariant::TheoremStatement => ((i - i2) * b - a * b, (j - j2) * a + a * b),
            ExponentVariant::RttDerived => {
                let e = (j - j2) * a - a * b;
                (e, e)
            }
        }
    }
}

impl fmt::Display for ExponentVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_levels(table: &GenTable, l: usize, m: usize) -> Result<()> {
    for level in [l + 1, m + 1] {
        if level > table.depth() {
            return Err(Error::LevelOutOfRange {
                level,
                depth: table.depth(),
            });
        }
    }
    Ok(())
}

fn expect_presentation(table: &GenTable, p: Presentation) -> Result<()> {
    if table.presentation() != p {
        return Err(Error::WrongPresentation {
            expected: p.name(),
            found: table.presentation().name(),
        });
    }
    Ok(())
}

/// LHS - RHS of the componentwise principal relation at levels `(l, m)`
/// and residues `idx = (i, j, i', j')`.
pub fn principal_relation_residual(
    s: &GenTable,
    l: usize,
    m: usize,
    idx: (i64, i64, i64, i64),
    variant: ExponentVariant,
) -> Result<CycMat> {
    expect_presentation(s, Presentation::Principal)?;
    check_levels(s, l, m)?;
    let n = s.n() as i64;
    let (i, j, i2, j2) = idx;
    let inv_n = rat(1, n);
    let mut res = s.get(i, j, l + 1)?.commutator(s.get(i2, j2, m)?);
    res = &res - &s.get(i, j, l)?.commutator(s.get(i2, j2, m + 1)?);
    for a in 0..n {
        for b in 0..n {
            let (e1, e2) = variant.exponents(idx, a, b);
            let x_l = s.get(i2 + a, j2 + b, l)?;
            let y_m = s.get(i - a, j - b, m)?;
            if !x_l.is_zero() && !y_m.is_zero() {
                let c = root_of_unity(n as u32, e1).scale(&inv_n);
                res = &res - &(x_l * y_m).scale(&c);
            }
            let x_m = s.get(i2 + a, j2 + b, m)?;
            let y_l = s.get(i - a, j - b, l)?;
            if !x_m.is_zero() && !y_l.is_zero() {
                let c = root_of_unity(n as u32, e2).scale(&inv_n);
                res = &res + &(x_m * y_l).scale(&c);
            }
        }
    }
    Ok(res)
}

/// LHS - RHS of the Cartan-Weyl relation
/// `[T_ij^(l+1), T_i'j'^(m)] - [T_ij^(l), T_i'j'^(m+1)] = T_i'j^(l) T_ij'^(m) - T_i'j^(m) T_ij'^(l)`.
pub fn cartan_weyl_relation_residual(t: &GenTable, l: usize, m: usize, idx: (i64, i64, i64, i64)) -> Result<CycMat> {
    expect_presentation(t, Presentation::CartanWeyl)?;
    check_levels(t, l, m)?;
    let (i, j, i2, j2) = idx;
    let lhs = &t.get(i, j, l + 1)?.commutator(t.get(i2, j2, m)?) - &t.get(i, j, l)?.commutator(t.get(i2, j2, m + 1)?);
    let rhs = &(t.get(i2, j, l)? * t.get(i, j2, m)?) - &(t.get(i2, j, m)? * t.get(i, j2, l)?);
    Ok(&lhs - &rhs)
}

/// Candidate principal evaluation tables on `V = C^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EvaluationVariant {
    /// `S_ij^(1) = A_ij`, higher levels zero.
    PrincipalUnits,
    /// Principal coefficients of the evaluation `T(u) = I - P/u`:
    /// `S_kl^(1) = -(ω^{kl}/n) A_{-k,-l}`.
    DerivedFromP,
}

impl EvaluationVariant {
    pub const ALL: [EvaluationVariant; 2] = [EvaluationVariant::PrincipalUnits, EvaluationVariant::DerivedFromP];

    pub fn name(self) -> &'static str {
        match self {
            EvaluationVariant::PrincipalUnits => "principal-units",
            EvaluationVariant::DerivedFromP => "derived-from-p",
        }
    }
}

impl fmt::Display for EvaluationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First-level coefficient of `T(u) = I + X/u` on `V ⊗ W` as principal
/// generators: `S_kl = (ω^{kl}/n) tr_V[(A_{-k,-l} ⊗ 1) X]`.
pub fn extract_principal_level(x: &CycMat, n: usize) -> Result<Vec<Vec<CycMat>>> {
    if !x.is_square() || x.rows() % n != 0 {
        return Err(Error::ShapeMismatch(format!("operator of size {} is not on C^{n} ⊗ W", x.rows())));
    }
    let w = x.rows() / n;
    let order = x.order();
    let inv_n = rat(1, n as i64);
    let mut out = Vec::with_capacity(n);
    for k in 0..n as i64 {
        let mut row = Vec::with_capacity(n);
        for l in 0..n as i64 {
            let dual = principal_a(n, -k, -l);
            let mut s = CycMat::zeros(order, w, w);
            // tr_V[(D ⊗ 1) X]_{pq} = Σ_{a,b} D_ab X_{(b,p),(a,q)}
            for (a, b) in dual.support() {
                for p in 0..w {
                    for q in 0..w {
                        let xv = x.get(b * w + p, a * w + q);
                        if !xv.is_zero() {
                            s.add_at(p, q, &(dual.get(a, b) * xv));
                        }
                    }
                }
            }
            let c = root_of_unity(n as u32, k * l).scale(&inv_n);
            row.push(s.scale(&c));
        }
        out.push(row);
    }
    Ok(out)
}

/// Principal evaluation table on `C^n` with explicit zero levels up to `depth`.
pub fn principal_evaluation_table(n: usize, variant: EvaluationVariant, depth: usize) -> Result<GenTable> {
    if n < 2 {
        return Err(Error::ShapeMismatch(format!("evaluation table needs n >= 2, got {n}")));
    }
    let mut s = GenTable::zero(Presentation::Principal, n, n, depth.max(1));
    match variant {
        EvaluationVariant::PrincipalUnits => {
            for k in 0..n as i64 {
                for l in 0..n as i64 {
                    s.set(k, l, 1, principal_a(n, k, l))?;
                }
            }
        }
        EvaluationVariant::DerivedFromP => {
            let level = extract_principal_level(&-&permutation_p_unit(n), n)?;
            for (k, row) in level.into_iter().enumerate() {
                for (l, m) in row.into_iter().enumerate() {
                    s.set(k as i64, l as i64, 1, m)?;
                }
            }
        }
    }
    Ok(s)
}

/// Closed form `-(ω^{kl}/n) A_{-k,-l}` of the derived evaluation generator.
pub fn derived_generator_closed_form(n: usize, k: i64, l: i64) -> CycMat {
    let c = -root_of_unity(n as u32, k * l).scale(&rat(1, n as i64));
    principal_a(n, -k, -l).scale(&c)
}

/// Cartan-Weyl evaluation table `T_ij^(1) = x_ij` for the block
/// decomposition `X = Σ E_ij ⊗ x_ij` on `C^n ⊗ W`.
pub fn cartan_weyl_table_from_blocks(x: &CycMat, n: usize, depth: usize) -> Result<GenTable> {
    if !x.is_square() || x.rows() % n != 0 {
        return Err(Error::ShapeMismatch(format!("operator of size {} is not on C^{n} ⊗ W", x.rows())));
    }
    let w = x.rows() / n;
    let mut t = GenTable::zero(Presentation::CartanWeyl, n, w, depth.max(1));
    for i in 0..n {
        for j in 0..n {
            let block = CycMat::from_fn(x.order(), w, w, |p, q| x.get(i * w + p, j * w + q).clone());
            t.set(i as i64 + 1, j as i64 + 1, 1, block)?;
        }
    }
    Ok(t)
}

/// Every `(l, m, (i, j, i', j'))` with `l, m <= max_level` and residues in `0..n`.
pub fn relation_indices(n: usize, max_level: usize) -> Vec<(usize, usize, (i64, i64, i64, i64))> {
    let n = n as i64;
    let mut out = Vec::new();
    for l in 0..=max_level {
        for m in 0..=max_level {
            for i in 0..n {
                for j in 0..n {
                    for i2 in 0..n {
                        for j2 in 0..n {
                            out.push((l, m, (i, j, i2, j2)));
                        }
                    }
                }
            }
        }
    }
    out
}

pub(crate) fn fmt_index(l: usize, m: usize, idx: (i64, i64, i64, i64)) -> String {
    format!("l={l} m={m} ({},{},{},{})", idx.0, idx.1, idx.2, idx.3)
}
