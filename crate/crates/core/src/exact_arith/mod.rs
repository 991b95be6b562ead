//! Exact scalars: big rationals and cyclotomic field elements.

mod cyclotomic;
mod poly;
mod rational;

pub use cyclotomic::{
    cyc_arith, cyc_inv, cyclotomic_poly, euler_phi, field, root_of_unity, Cyc, CycOp,
    CyclotomicField,
};
pub use rational::{display_rat, format_rat, int, parse_rat, rat, Rat};

pub(crate) use rational::serde_rat;
