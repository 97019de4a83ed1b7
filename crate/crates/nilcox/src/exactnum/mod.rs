//! Exact scalars: rationals, Laurent polynomials in `p`, cyclotomic numbers,
//! residue fields for modular rank computations, and quantum numbers.

pub mod cyclotomic;
pub mod formal;
pub mod quantum;
pub mod rational;
pub mod residue;
pub mod ring;

pub use cyclotomic::{cyclotomic_arith, CycloCtx, CycloOp, CycloResult, Cyclotomic, CyclotomicField};
pub use formal::{FormalRing, FormalScalar};
pub use quantum::{quantum_binomial, quantum_binomial_general, quantum_factorial, quantum_int};
pub use rational::{rat, Rational};
pub use residue::ResidueField;
pub use ring::{Conjugation, Field, Ring};

/// Substitutes `p -> xi`, a primitive `2nm`-th root of unity.
pub fn specialize(s: &FormalScalar, n: usize, m: usize) -> Cyclotomic {
    let conductor = (2 * n * m) as u32;
    s.terms().fold(Cyclotomic::zero(conductor), |acc, (k, c)| {
        acc.add(&Cyclotomic::xi_pow(conductor, k).mul(&Cyclotomic::from_rational(conductor, c)))
    })
}
