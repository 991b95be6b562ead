//! Yang-Baxter and RTT residuals for `R(u) = I - P/u`, with every
//! denominator cleared so that the check is an exact polynomial zero test.

use crate::principal_gl::{permutation_p_unit, CycMat};

use super::bipoly::BiPolyMat;

/// Embeds an operator on two legs of `V_1 ⊗ V_2 ⊗ V_3` (leg dimensions
/// `dims`) acting on legs `legs.0 < legs.1`, identity on the remaining leg.
pub fn embed_two_legs(x: &CycMat, dims: [usize; 3], legs: (usize, usize)) -> CycMat {
    let (a, b) = legs;
    assert!(a < b && b < 3, "legs must be increasing and below 3");
    let free = 3 - a - b;
    assert_eq!(x.rows(), dims[a] * dims[b], "operator does not match leg dimensions");
    let total = dims.iter().product();
    let flat = |idx: [usize; 3]| (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2];
    let mut out = CycMat::zeros(x.order(), total, total);
    for (r, c) in x.support() {
        let (ra, rb) = (r / dims[b], r % dims[b]);
        let (ca, cb) = (c / dims[b], c % dims[b]);
        for f in 0..dims[free] {
            let mut ri = [0; 3];
            let mut ci = [0; 3];
            ri[a] = ra;
            ri[b] = rb;
            ri[free] = f;
            ci[a] = ca;
            ci[b] = cb;
            ci[free] = f;
            out.set(flat(ri), flat(ci), x.get(r, c).clone());
        }
    }
    out
}

/// LHS - RHS of `R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)` for
/// `R(w) = I - X/w`, multiplied through by `u v (u+v)`.
pub fn qybe_residual_with(x: &CycMat, n: usize) -> BiPolyMat {
    let dims = [n; 3];
    let r12 = BiPolyMat::linear(1, 0, &-&embed_two_legs(x, dims, (0, 1)));
    let r13 = BiPolyMat::linear(1, 1, &-&embed_two_legs(x, dims, (0, 2)));
    let r23 = BiPolyMat::linear(0, 1, &-&embed_two_legs(x, dims, (1, 2)));
    let lhs = &(&r12 * &r13) * &r23;
    let rhs = &(&r23 * &r13) * &r12;
    &lhs - &rhs
}

/// Quantum Yang-Baxter residual for Yang's R-matrix on `(C^n)^{⊗3}`.
pub fn qybe_residual(n: usize) -> BiPolyMat {
    qybe_residual_with(&permutation_p_unit(n), n)
}

/// Denominator-cleared `T(u) = I + X/u`, i.e. `u·I + X`, on `V ⊗ W`.
pub fn evaluation_poly(x: &CycMat) -> BiPolyMat {
    BiPolyMat::linear(1, 0, x)
}

/// Residual of `R(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u-v)` multiplied
/// by `(u-v) u v`.
///
/// `t` is the cleared `u·T(u)` in the variable `u`, acting on `V ⊗ W` with
/// `dim V = n`. `T_1` acts on legs 1 and 3 of `V ⊗ V ⊗ W`, `T_2` on legs 2 and 3.
pub fn rtt_residual(t: &BiPolyMat, n: usize) -> BiPolyMat {
    assert_eq!(t.dim() % n, 0, "T must act on V ⊗ W with dim V = n");
    assert_eq!(t.degrees().1, 0, "T must be a polynomial in u only");
    let w = t.dim() / n;
    let dims = [n, n, w];
    let total = n * n * w;
    let t1 = t.map_coeffs(total, |c| embed_two_legs(c, dims, (0, 2)));
    let t2 = t.swap_vars().map_coeffs(total, |c| embed_two_legs(c, dims, (1, 2)));
    let p12 = embed_two_legs(&permutation_p_unit(n), dims, (0, 1));
    let r = BiPolyMat::linear(1, -1, &-&p12);
    let lhs = &(&r * &t1) * &t2;
    let rhs = &(&t2 * &t1) * &r;
    &lhs - &rhs
}
