//! Sparse multivariate polynomials in `x_1, ..., x_n` over any [`Ring`].
//!
//! Variables are 0-based: variable `v` is `x_{v+1}`. Monomials compare
//! lexicographically with `x_1 > x_2 > ... > x_n`, which on homogeneous
//! polynomials coincides with graded lex.

use std::collections::BTreeMap;

use serde_json::{json, Value};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::exactnum::{Conjugation, Ring};

pub type Exps = SmallVec<[u16; 4]>;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Monomial(pub Exps);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn var(n: usize, v: usize) -> Self {
        let mut e = Self::one(n);
        e.0[v] = 1;
        e
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn cofactor(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(self.0.iter()).map(|(b, a)| b - a).collect())
    }
}

/// All exponent vectors of `n` variables with total degree `d`, in decreasing
/// monomial order.
pub fn monomials_of_degree(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d as u16);
            out.push(Monomial::from_exps(prefix));
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e as u16);
            rec(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = vec![];
    rec(n, d, &mut vec![], &mut out);
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<E> {
    pub terms: BTreeMap<Monomial, E>,
}

impl<E> Default for Poly<E> {
    fn default() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }
}

impl<E: Clone> Poly<E> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &E)> {
        self.terms.iter()
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &E)> {
        self.terms.iter().next_back()
    }
}

/// Arithmetic on [`Poly`] over a fixed scalar ring and number of variables.
#[derive(Clone, Debug)]
pub struct PolyRing<R: Ring> {
    pub ring: R,
    pub n: usize,
}

impl<R: Ring> PolyRing<R> {
    pub fn new(ring: R, n: usize) -> Self {
        PolyRing { ring, n }
    }

    pub fn zero(&self) -> Poly<R::Elem> {
        Poly::default()
    }

    pub fn one(&self) -> Poly<R::Elem> {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, c: R::Elem) -> Poly<R::Elem> {
        self.term(Monomial::one(self.n), c)
    }

    pub fn term(&self, m: Monomial, c: R::Elem) -> Poly<R::Elem> {
        let mut f = self.zero();
        self.add_term(&mut f, m, &c);
        f
    }

    pub fn monomial(&self, exps: &[u16]) -> Poly<R::Elem> {
        assert_eq!(exps.len(), self.n);
        self.term(Monomial::from_exps(exps), self.ring.one())
    }

    pub fn var(&self, v: usize) -> Poly<R::Elem> {
        self.term(Monomial::var(self.n, v), self.ring.one())
    }

    pub fn add_term(&self, f: &mut Poly<R::Elem>, m: Monomial, c: &R::Elem) {
        if self.ring.is_zero(c) {
            return;
        }
        match f.terms.get_mut(&m) {
            Some(v) => {
                let s = self.ring.add(v, c);
                if self.ring.is_zero(&s) {
                    f.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                f.terms.insert(m, c.clone());
            }
        }
    }

    pub fn coeff(&self, f: &Poly<R::Elem>, m: &Monomial) -> R::Elem {
        f.terms.get(m).cloned().unwrap_or_else(|| self.ring.zero())
    }

    pub fn constant_term(&self, f: &Poly<R::Elem>) -> R::Elem {
        self.coeff(f, &Monomial::one(self.n))
    }

    pub fn add(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut h = f.clone();
        for (m, c) in &g.terms {
            self.add_term(&mut h, m.clone(), c);
        }
        h
    }

    pub fn neg(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        Poly {
            terms: f
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), self.ring.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut h = f.clone();
        for (m, c) in &g.terms {
            self.add_term(&mut h, m.clone(), &self.ring.neg(c));
        }
        h
    }

    pub fn scale(&self, c: &R::Elem, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        if self.ring.is_zero(c) {
            return self.zero();
        }
        let mut h = self.zero();
        for (m, v) in &f.terms {
            self.add_term(&mut h, m.clone(), &self.ring.mul(c, v));
        }
        h
    }

    /// `c * m * f`.
    pub fn mul_term(&self, f: &Poly<R::Elem>, m: &Monomial, c: &R::Elem) -> Poly<R::Elem> {
        let mut h = self.zero();
        for (k, v) in &f.terms {
            self.add_term(&mut h, k.mul(m), &self.ring.mul(c, v));
        }
        h
    }

    pub fn mul(&self, f: &Poly<R::Elem>, g: &Poly<R::Elem>) -> Poly<R::Elem> {
        let mut h = self.zero();
        for (m1, c1) in &f.terms {
            for (m2, c2) in &g.terms {
                self.add_term(&mut h, m1.mul(m2), &self.ring.mul(c1, c2));
            }
        }
        h
    }

    pub fn pow(&self, f: &Poly<R::Elem>, e: u32) -> Poly<R::Elem> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, f))
    }

    pub fn sum<'a, I>(&self, it: I) -> Poly<R::Elem>
    where
        I: IntoIterator<Item = &'a Poly<R::Elem>>,
        R::Elem: 'a,
    {
        it.into_iter().fold(self.zero(), |acc, f| self.add(&acc, f))
    }

    /// The homogeneous component of degree `d`.
    pub fn component(&self, f: &Poly<R::Elem>, d: usize) -> Poly<R::Elem> {
        Poly {
            terms: f
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The substitution `x_v -> scale[v] * x_{perm[v]}`.
    pub fn apply_monomial_map(
        &self,
        f: &Poly<R::Elem>,
        perm: &[usize],
        scale: &[R::Elem],
    ) -> Poly<R::Elem> {
        let mut h = self.zero();
        for (m, c) in &f.terms {
            let mut e = Monomial::one(self.n);
            let mut coeff = c.clone();
            for (v, &k) in m.0.iter().enumerate() {
                if k > 0 {
                    e.0[perm[v]] += k;
                    coeff = self.ring.mul(&coeff, &self.ring.pow(&scale[v], k as u64));
                }
            }
            self.add_term(&mut h, e, &coeff);
        }
        h
    }

    /// Exact quotient of `f` by `x_{v1} - c x_{v2}`.
    ///
    /// Terms are grouped into binary forms in `x_{v1}, x_{v2}` with the other
    /// exponents fixed; each form is divided synthetically.
    pub fn divide_linear(
        &self,
        f: &Poly<R::Elem>,
        v1: usize,
        v2: usize,
        c: &R::Elem,
    ) -> Result<Poly<R::Elem>> {
        let mut out = self.zero();
        for (key, d, form) in self.binary_blocks(f, v1, v2) {
            if d == 0 {
                return Err(Error::Inexact(format!(
                    "constant block is not divisible by x{} - c x{}",
                    v1 + 1,
                    v2 + 1
                )));
            }
            let mut q = vec![self.ring.zero(); d];
            q[d - 1] = form[d].clone();
            for k in (1..d).rev() {
                q[k - 1] = self.ring.add(&form[k], &self.ring.mul(c, &q[k]));
            }
            let rem = self.ring.add(&form[0], &self.ring.mul(c, &q[0]));
            if !self.ring.is_zero(&rem) {
                return Err(Error::Inexact(format!(
                    "nonzero remainder dividing by x{} - c x{}",
                    v1 + 1,
                    v2 + 1
                )));
            }
            for (k, qk) in q.into_iter().enumerate() {
                let mut m = key.clone();
                m.0[v1] = k as u16;
                m.0[v2] = (d - 1 - k) as u16;
                self.add_term(&mut out, m, &qk);
            }
        }
        Ok(out)
    }

    /// Splits `f` into binary forms in `(x_{v1}, x_{v2})`: each entry is the
    /// monomial with those two exponents cleared, the block degree `d`, and the
    /// coefficients `F[k]` of `x_{v1}^k x_{v2}^{d-k}`.
    pub fn binary_blocks(
        &self,
        f: &Poly<R::Elem>,
        v1: usize,
        v2: usize,
    ) -> Vec<(Monomial, usize, Vec<R::Elem>)> {
        let mut blocks: BTreeMap<(Monomial, usize), Vec<R::Elem>> = BTreeMap::new();
        for (m, c) in &f.terms {
            let k = m.0[v1] as usize;
            let d = k + m.0[v2] as usize;
            let mut key = m.clone();
            key.0[v1] = 0;
            key.0[v2] = 0;
            let form = blocks
                .entry((key, d))
                .or_insert_with(|| vec![self.ring.zero(); d + 1]);
            form[k] = c.clone();
        }
        blocks
            .into_iter()
            .map(|((key, d), form)| (key, d, form))
            .collect()
    }

    pub fn map_coeffs<F: Fn(&R::Elem) -> R::Elem>(&self, f: &Poly<R::Elem>, g: F) -> Poly<R::Elem> {
        let mut h = self.zero();
        for (m, c) in &f.terms {
            self.add_term(&mut h, m.clone(), &g(c));
        }
        h
    }

    pub fn to_json<F: Fn(&R::Elem) -> Value>(&self, f: &Poly<R::Elem>, enc: F) -> Value {
        let exps: Vec<Value> = f.terms.keys().map(|m| json!(m.exps())).collect();
        let coeffs: Vec<Value> = f.terms.values().map(enc).collect();
        json!({ "exps": exps, "coeffs": coeffs })
    }

    pub fn from_json<F: Fn(&Value) -> Result<R::Elem>>(
        &self,
        v: &Value,
        dec: F,
    ) -> Result<Poly<R::Elem>> {
        let bad = || Error::Parse("polynomial JSON needs \"exps\" and \"coeffs\" arrays".into());
        let exps = v.get("exps").and_then(Value::as_array).ok_or_else(bad)?;
        let coeffs = v.get("coeffs").and_then(Value::as_array).ok_or_else(bad)?;
        if exps.len() != coeffs.len() {
            return Err(bad());
        }
        let mut f = self.zero();
        for (e, c) in exps.iter().zip(coeffs) {
            let e: Vec<u16> = serde_json::from_value(e.clone())
                .map_err(|err| Error::Parse(err.to_string()))?;
            if e.len() != self.n {
                return Err(Error::Parse(format!("exponent vector of length {} for n = {}", e.len(), self.n)));
            }
            self.add_term(&mut f, Monomial::from_exps(&e), &dec(c)?);
        }
        Ok(f)
    }

    /// Human-readable rendering, highest term first.
    pub fn render<F: Fn(&R::Elem) -> String>(&self, f: &Poly<R::Elem>, fmt_coeff: F) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = f
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let vars: Vec<String> = m
                    .0
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(v, &e)| {
                        if e == 1 {
                            format!("x{}", v + 1)
                        } else {
                            format!("x{}^{}", v + 1, e)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("({})", fmt_coeff(c))
                } else {
                    format!("({})*{}", fmt_coeff(c), vars.join("*"))
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl<R: Conjugation> PolyRing<R> {
    /// Applies the scalar conjugation `p -> p^{-1}` coefficientwise.
    pub fn conj(&self, f: &Poly<R::Elem>) -> Poly<R::Elem> {
        self.map_coeffs(f, |c| self.ring.conj(c))
    }
}
