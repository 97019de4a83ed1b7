//! Antisymmetrization, the trace `J = A / (m^{n-1} Delta)`, and the pairing
//! of the bases `X_{1<...<n}` and `X_{n<...<1}`.

use super::basis_x;
use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly, PolyRing};
use crate::refrep::{apply_matrix, enumerate_wm, phi1m, symmetric_subgroup, GroupElement, Root};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntisymVariant {
    /// `A(f) = sum_{w in W_m} (-1)^{l(w)} w(f)`.
    Full,
    /// `A'(f) = sum_{w in S_n} (-1)^{l(w)} w(f)`.
    Finite,
}

/// Precomputed group data for antisymmetrization and `J` at level `m`.
#[derive(Clone, Debug)]
pub struct TraceEngine<F: Field> {
    pub pr: PolyRing<F>,
    pub m: usize,
    wm: Vec<GroupElement<F::Elem>>,
    sn: Vec<GroupElement<F::Elem>>,
    roots: Vec<Root>,
}

/// `P = x_1^{(n-1)m} x_2^{(n-2)m} ... x_{n-1}^m`.
pub fn staircase(n: usize, m: usize) -> Monomial {
    Monomial::from_exps(&(0..n).map(|v| ((n - 1 - v) * m) as u16).collect::<Vec<_>>())
}

impl<F: Field> TraceEngine<F> {
    pub fn new(field: F, n: usize, m: usize) -> Result<Self> {
        let wm = enumerate_wm(&field, n, m)?;
        let sn = symmetric_subgroup(&field, n);
        Ok(TraceEngine {
            pr: PolyRing::new(field, n),
            m,
            wm,
            sn,
            roots: phi1m(n, m),
        })
    }

    pub fn n(&self) -> usize {
        self.pr.n
    }

    /// Degree of `Delta`, `m C(n,2)`.
    pub fn top(&self) -> usize {
        self.m * self.n() * (self.n() - 1) / 2
    }

    pub fn group(&self) -> &[GroupElement<F::Elem>] {
        &self.wm
    }

    pub fn antisymmetrize(&self, f: &Poly<F::Elem>, variant: AntisymVariant) -> Poly<F::Elem> {
        let elems = match variant {
            AntisymVariant::Full => &self.wm,
            AntisymVariant::Finite => &self.sn,
        };
        let mut out = self.pr.zero();
        for g in elems {
            let wf = apply_matrix(&self.pr, &g.matrix, f);
            out = if g.sign > 0 {
                self.pr.add(&out, &wf)
            } else {
                self.pr.sub(&out, &wf)
            };
        }
        out
    }

    /// Exact division by `Delta`, one root at a time.
    pub fn divide_by_delta(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let ring = &self.pr.ring;
        self.roots.iter().try_fold(f.clone(), |g, r| {
            self.pr.divide_linear(&g, r.i, r.j, &ring.z_pow(r.e))
        })
    }

    /// `J(f) = A(f) / (m^{n-1} Delta)`. Monomials whose exponents are pairwise
    /// congruent mod `m` use `A = m^{n-1} A'`; the rest use the full sum.
    pub fn j_operator(&self, f: &Poly<F::Elem>) -> Result<Poly<F::Elem>> {
        let pr = &self.pr;
        let ring = &pr.ring;
        let mut finite_part = pr.zero();
        let mut full_part = pr.zero();
        for (mono, c) in &f.terms {
            let e = mono.exps();
            let congruent = e.iter().all(|&a| (a as usize) % self.m == (e[0] as usize) % self.m);
            let t = pr.term(mono.clone(), c.clone());
            if congruent {
                finite_part = pr.add(&finite_part, &t);
            } else {
                full_part = pr.add(&full_part, &t);
            }
        }
        let mut a = self.antisymmetrize(&finite_part, AntisymVariant::Finite);
        if !full_part.is_zero() {
            let scale = ring.from_int(self.m.pow(self.n() as u32 - 1) as i64);
            let inv = ring.inv(&scale).ok_or(Error::DivisionByZero)?;
            let full = self.antisymmetrize(&full_part, AntisymVariant::Full);
            a = pr.add(&a, &pr.scale(&inv, &full));
        }
        if a.is_zero() {
            return Ok(a);
        }
        self.divide_by_delta(&a)
    }
}

/// Free-function form of [`TraceEngine::antisymmetrize`].
pub fn antisymmetrize<F: Field>(engine: &TraceEngine<F>, f: &Poly<F::Elem>, variant: AntisymVariant) -> Poly<F::Elem> {
    engine.antisymmetrize(f, variant)
}

/// The pairing matrix `M[b][c]` = constant term of `J(bc)`, with `b` running
/// over `X_{1<...<n}` and `c` over `X_{n<...<1}`, both sorted by degree.
#[derive(Clone, Debug)]
pub struct FrobeniusPairing<E> {
    pub rows: Vec<Monomial>,
    pub cols: Vec<Monomial>,
    pub matrix: Matrix<E>,
}

pub fn frobenius_pairing<F: Field>(engine: &TraceEngine<F>) -> Result<FrobeniusPairing<F::Elem>> {
    let n = engine.n();
    let top = engine.top();
    let rows = basis_x(&(0..n).collect::<Vec<_>>(), n, engine.m);
    let cols = basis_x(&(0..n).rev().collect::<Vec<_>>(), n, engine.m);
    let pr = &engine.pr;
    let mut matrix = Matrix::filled(rows.len(), cols.len(), pr.ring.zero());
    for (i, b) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            if b.degree() + c.degree() != top {
                continue;
            }
            let j_bc = engine.j_operator(&pr.term(b.mul(c), pr.ring.one()))?;
            matrix.set(i, j, pr.constant_term(&j_bc));
        }
    }
    Ok(FrobeniusPairing { rows, cols, matrix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{CyclotomicField, Ring};
    use crate::linalg::determinant;

    #[test]
    fn staircase_has_trace_one() {
        for m in 2..=3 {
            let e = TraceEngine::new(CyclotomicField::new(3, m), 3, m).unwrap();
            let p = e.pr.term(staircase(3, m), e.pr.ring.one());
            assert_eq!(e.j_operator(&p).unwrap(), e.pr.one());
        }
    }

    #[test]
    fn pairing_is_nondegenerate_m2() {
        let e = TraceEngine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let fp = frobenius_pairing(&e).unwrap();
        assert_eq!(fp.matrix.rows, 24);
        assert!(!e.pr.ring.is_zero(&determinant(&e.pr.ring, &fp.matrix)));
    }
}
