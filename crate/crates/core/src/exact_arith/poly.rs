//! Dense univariate polynomials over the rationals, lowest degree first.
//! Only what the cyclotomic field needs: division and the extended
//! Euclidean algorithm.

use num::{One, Zero};

use super::rational::Rat;

pub(crate) type QPoly = Vec<Rat>;

pub(crate) fn trim(p: &mut QPoly) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &QPoly) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn sub(a: &QPoly, b: &QPoly) -> QPoly {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn mul(a: &QPoly, b: &QPoly) -> QPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Quotient and remainder. `d` must be nonzero.
pub(crate) fn div_rem(a: &QPoly, d: &QPoly) -> (QPoly, QPoly) {
    let dd = degree(d).expect("division by the zero polynomial");
    let lead = d[dd].clone();
    let mut rem = a.clone();
    trim(&mut rem);
    let mut quot = vec![Rat::zero(); rem.len().saturating_sub(dd).max(1)];
    while let Some(rd) = degree(&rem) {
        if rd < dd {
            break;
        }
        let c = &rem[rd] / &lead;
        let shift = rd - dd;
        for (i, dc) in d.iter().enumerate().take(dd + 1) {
            let t = &c * dc;
            rem[i + shift] -= t;
        }
        quot[shift] = c;
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Returns `(g, s)` with `s·a ≡ g (mod m)` and `g = gcd(a, m)` made monic.
pub(crate) fn ext_gcd_left(a: &QPoly, m: &QPoly) -> (QPoly, QPoly) {
    let (mut r0, mut r1) = (m.clone(), a.clone());
    let (mut s0, mut s1): (QPoly, QPoly) = (Vec::new(), vec![Rat::one()]);
    trim(&mut r1);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(d) = degree(&r0) {
        let lead = r0[d].clone();
        for c in r0.iter_mut() {
            *c /= &lead;
        }
        for c in s0.iter_mut() {
            *c /= &lead;
        }
    }
    (r0, s0)
}
