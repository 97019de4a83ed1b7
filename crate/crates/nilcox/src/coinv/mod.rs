//! Invariant theory of `G(m,m,n)` acting on `R_m`: invariant generators, the
//! monomial bases `X`, and the coinvariant algebra `C = R / (R^W_+)` with
//! normal forms.

mod slice;
mod trace;

use std::collections::HashMap;

pub use slice::{coinvariant_slice, CoinvariantSlice};
pub use trace::{antisymmetrize, frobenius_pairing, staircase, AntisymVariant, FrobeniusPairing, TraceEngine};

use crate::error::{Error, Result};
use crate::exactnum::{Field, Ring};
use crate::poly::{monomials_of_degree, Monomial, Poly, PolyRing};

/// `y_k = z^{mk} x_k^m` (1-based `k`), which becomes `zeta^{mk} x_k^m` at the
/// specialization.
pub fn y_var<R: Ring>(pr: &PolyRing<R>, m: usize, v: usize) -> Poly<R::Elem> {
    let mut e = Monomial::one(pr.n);
    e.0[v] = m as u16;
    pr.term(e, pr.ring.z_pow((m * (v + 1)) as i64))
}

/// `e_0, ..., e_k` of the given polynomials.
pub fn elementary_all<R: Ring>(pr: &PolyRing<R>, ys: &[Poly<R::Elem>]) -> Vec<Poly<R::Elem>> {
    let mut e = vec![pr.one()];
    for y in ys {
        e.push(pr.zero());
        for j in (1..e.len()).rev() {
            let t = pr.mul(&e[j - 1], y);
            e[j] = pr.add(&e[j], &t);
        }
    }
    e
}

/// The complete homogeneous symmetric polynomial `h_c` of the given polynomials.
pub fn complete<R: Ring>(pr: &PolyRing<R>, ys: &[Poly<R::Elem>], c: usize) -> Poly<R::Elem> {
    // h[j] = h_j(y_1..y_t), updated as t grows
    let mut h = vec![pr.zero(); c + 1];
    h[0] = pr.one();
    for y in ys {
        for j in 1..=c {
            let t = pr.mul(&h[j - 1], y);
            h[j] = pr.add(&h[j], &t);
        }
    }
    h.swap_remove(c)
}

/// `{e_i(y)}_{i=1..n-1}` followed by `x_1 ... x_n`.
pub fn invariant_gens<R: Ring>(pr: &PolyRing<R>, m: usize) -> Vec<Poly<R::Elem>> {
    let n = pr.n;
    let ys: Vec<_> = (0..n).map(|v| y_var(pr, m, v)).collect();
    let e = elementary_all(pr, &ys);
    let mut gens: Vec<_> = e[1..n].to_vec();
    gens.push(pr.monomial(&vec![1; n]));
    gens
}

/// `pi_m = (n)_v (m)_v (2m)_v ... ((n-1)m)_v` with `(k)_v = 1 + v + ... + v^{k-1}`.
pub fn pi_m(n: usize, m: usize) -> Vec<usize> {
    let mut factors = vec![n];
    factors.extend((1..n).map(|k| k * m));
    factors.iter().fold(vec![1usize], |acc, &k| {
        let mut out = vec![0; acc.len() + k - 1];
        for (i, a) in acc.iter().enumerate() {
            for j in 0..k {
                out[i + j] += a;
            }
        }
        out
    })
}

/// The monomial basis `X` attached to the total order `i_1 < ... < i_n`
/// (0-based variables in `order`): `a_{i_k} <= m(n-k)` if every earlier
/// exponent is positive, and `a_{i_k} <= m(n+1-k) - 1` otherwise.
pub fn basis_x(order: &[usize], n: usize, m: usize) -> Vec<Monomial> {
    assert_eq!(order.len(), n);
    let mut out = vec![];
    let mut exps = vec![0u16; n];
    fn rec(k: usize, all_pos: bool, order: &[usize], m: usize, exps: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        let n = order.len();
        if k == n {
            out.push(Monomial::from_exps(exps));
            return;
        }
        let kk = k + 1;
        let bound = if all_pos { m * (n - kk) } else { m * (n + 1 - kk) - 1 };
        for a in 0..=bound {
            exps[order[k]] = a as u16;
            rec(k + 1, all_pos && a > 0, order, m, exps, out);
        }
        exps[order[k]] = 0;
    }
    rec(0, true, order, m, &mut exps, &mut out);
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then(b.cmp(a)));
    out
}

/// Number of elements of each degree in a list of monomials.
pub fn graded_count(ms: &[Monomial]) -> Vec<usize> {
    let top = ms.iter().map(Monomial::degree).max().unwrap_or(0);
    let mut c = vec![0; top + 1];
    for m in ms {
        c[m.degree()] += 1;
    }
    c
}

/// The coinvariant algebra with a Groebner basis of `(R^W_+)` for the lex
/// order `x_1 > ... > x_n`.
///
/// With `S_k = {n-k+1, ..., n}` the basis consists of `h_{n-k+1}(y_{S_k})`
/// and `x_{S_k} h_{n-k}(y_{S_k})` for `k = 1..n`, made monic. Their standard
/// monomials form `X_{n < ... < 1}`.
#[derive(Clone, Debug)]
pub struct Coinvariant<F: Field> {
    pub pr: PolyRing<F>,
    pub m: usize,
    pub top: usize,
    gb: Vec<(Monomial, Poly<F::Elem>)>,
    basis: Vec<Vec<Monomial>>,
    index: Vec<HashMap<Monomial, usize>>,
}

impl<F: Field> Coinvariant<F> {
    pub fn new(field: F, n: usize, m: usize) -> Result<Self> {
        if n < 2 || m < 1 {
            return Err(Error::Invalid(format!("need n >= 2 and m >= 1, got n = {n}, m = {m}")));
        }
        let pr = PolyRing::new(field, n);
        let mut gb = vec![];
        for k in 1..=n {
            let vars: Vec<usize> = ((n - k)..n).collect();
            let ys: Vec<_> = vars.iter().map(|&v| y_var(&pr, m, v)).collect();
            let mut xs = Monomial::one(n);
            for &v in &vars {
                xs.0[v] = 1;
            }
            let g1 = complete(&pr, &ys, n - k + 1);
            let g2 = pr.mul_term(&complete(&pr, &ys, n - k), &xs, &pr.ring.one());
            for g in [g1, g2] {
                let (lm, lc) = g.leading().map(|(a, b)| (a.clone(), b.clone())).expect("nonzero generator");
                let inv = pr.ring.inv(&lc).ok_or(Error::DivisionByZero)?;
                gb.push((lm, pr.scale(&inv, &g)));
            }
        }
        let top = m * n * (n - 1) / 2;
        let mut basis = vec![];
        let mut index = vec![];
        for d in 0..=top {
            let std: Vec<Monomial> = monomials_of_degree(n, d)
                .into_iter()
                .filter(|mono| !gb.iter().any(|(lm, _)| lm.divides(mono)))
                .collect();
            index.push(std.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect());
            basis.push(std);
        }
        Ok(Coinvariant {
            pr,
            m,
            top,
            gb,
            basis,
            index,
        })
    }

    pub fn n(&self) -> usize {
        self.pr.n
    }

    pub fn field(&self) -> &F {
        &self.pr.ring
    }

    /// Standard monomials of degree `d`, in decreasing order.
    pub fn basis(&self, d: usize) -> &[Monomial] {
        self.basis.get(d).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn dim(&self, d: usize) -> usize {
        self.basis(d).len()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn groebner_basis(&self) -> &[(Monomial, Poly<F::Elem>)] {
        &self.gb
    }

    /// The remainder of `f` on division by the Groebner basis.
    pub fn normal_form(&self, f: &Poly<F::Elem>) -> Poly<F::Elem> {
        let pr = &self.pr;
        let ring = &pr.ring;
        let mut work = f.clone();
        let mut rem = pr.zero();
        while let Some((lm, lc)) = work.terms.pop_last() {
            if lm.degree() > self.top {
                continue;
            }
            match self.gb.iter().find(|(g, _)| g.divides(&lm)) {
                Some((g, poly)) => {
                    let cof = g.cofactor(&lm);
                    for (t, c) in poly.terms.iter().rev().skip(1) {
                        pr.add_term(&mut work, t.mul(&cof), &ring.neg(&ring.mul(&lc, c)));
                    }
                }
                None => {
                    rem.terms.insert(lm, lc);
                }
            }
        }
        rem
    }

    pub fn in_ideal(&self, f: &Poly<F::Elem>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Coordinates of the degree-`d` part of `normal_form(f)`.
    pub fn coords(&self, f: &Poly<F::Elem>, d: usize) -> Vec<F::Elem> {
        let nf = self.normal_form(&self.pr.component(f, d));
        let mut v = vec![self.pr.ring.zero(); self.dim(d)];
        for (mono, c) in nf.terms {
            v[self.index[d][&mono]] = c;
        }
        v
    }

    pub fn from_coords(&self, d: usize, v: &[F::Elem]) -> Poly<F::Elem> {
        let mut f = self.pr.zero();
        for (mono, c) in self.basis(d).iter().zip(v) {
            self.pr.add_term(&mut f, mono.clone(), c);
        }
        f
    }
}
