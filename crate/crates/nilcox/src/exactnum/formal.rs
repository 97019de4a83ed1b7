use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use super::rational::{rational_from_json, rational_to_json, Rational};
use super::ring::{Conjugation, Ring};
use crate::error::{Error, Result};

/// A Laurent polynomial in `p` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FormalScalar {
    coeffs: BTreeMap<i64, Rational>,
}

impl FormalScalar {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Rational::one(), 0)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Self { coeffs }
    }

    pub fn from_int(k: i64) -> Self {
        Self::monomial(Rational::from_integer(k.into()), 0)
    }

    pub fn p_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn z_pow(k: i64) -> Self {
        Self::p_pow(2 * k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Pairs `(exponent of p, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: i64) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some((c, k))` when the value is `c p^k`.
    pub fn single_term(&self) -> Option<(Rational, i64)> {
        if self.coeffs.len() == 1 {
            let (k, c) = self.coeffs.iter().next().unwrap();
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    /// True when only even powers of `p` occur, i.e. the value lies in `Q[z, z^{-1}]`.
    pub fn is_z_integral(&self) -> bool {
        self.coeffs.keys().all(|k| k % 2 == 0)
    }

    /// Value at `p = 1`.
    pub fn eval_at_one(&self) -> Rational {
        self.coeffs.values().fold(Rational::zero(), |acc, c| acc + c)
    }

    fn add_term(&mut self, k: i64, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.coeffs {
            out.add_term(*k, c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.coeffs {
            for (k2, c2) in &other.coeffs {
                out.add_term(k1 + k2, &(c1 * c2));
            }
        }
        out
    }

    /// `p -> p^{-1}`.
    pub fn conj(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (k, c) in &self.coeffs {
            map.insert(k.to_string(), rational_to_json(c));
        }
        Value::Object(map)
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("expected object of p-exponents, got {v}")))?;
        let mut out = Self::zero();
        for (k, c) in obj {
            let k: i64 = k
                .parse()
                .map_err(|e| Error::Parse(format!("bad exponent {k:?}: {e}")))?;
            out.add_term(k, &rational_from_json(c)?);
        }
        Ok(out)
    }
}

impl fmt::Display for FormalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *k {
                0 => write!(f, "{c}")?,
                _ => write!(f, "({c})*p^{k}")?,
            }
        }
        Ok(())
    }
}

/// The ring `Q[p, p^{-1}]` of formal scalars.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct FormalRing;

impl Ring for FormalRing {
    type Elem = FormalScalar;

    fn zero(&self) -> FormalScalar {
        FormalScalar::zero()
    }
    fn one(&self) -> FormalScalar {
        FormalScalar::one()
    }
    fn from_int(&self, k: i64) -> FormalScalar {
        FormalScalar::from_int(k)
    }
    fn is_zero(&self, a: &FormalScalar) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FormalScalar, b: &FormalScalar) -> FormalScalar {
        a.add(b)
    }
    fn sub(&self, a: &FormalScalar, b: &FormalScalar) -> FormalScalar {
        a.sub(b)
    }
    fn neg(&self, a: &FormalScalar) -> FormalScalar {
        a.neg()
    }
    fn mul(&self, a: &FormalScalar, b: &FormalScalar) -> FormalScalar {
        a.mul(b)
    }
    fn p_pow(&self, k: i64) -> FormalScalar {
        FormalScalar::p_pow(k)
    }
    fn add_assign(&self, a: &mut FormalScalar, b: &FormalScalar) {
        for (k, c) in &b.coeffs {
            a.add_term(*k, c);
        }
    }
}

impl Conjugation for FormalRing {
    fn conj(&self, a: &FormalScalar) -> FormalScalar {
        a.conj()
    }
}
