use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::rational::{rational_from_json, rational_to_json, Rational};
use super::ring::{Conjugation, Field, Ring};
use crate::error::{Error, Result};

/// Precomputed data for `Q(xi)` with `xi` a primitive `N`-th root of unity.
#[derive(Debug)]
pub struct CycloCtx {
    pub conductor: u32,
    pub phi: usize,
    /// Coefficients of the cyclotomic polynomial, lowest degree first (monic).
    pub phi_poly: Vec<i64>,
    /// `xi_pow[k]` is `xi^k` reduced, for `0 <= k < N`.
    xi_pow: Vec<Vec<i64>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // Both lowest-degree first; den monic.
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return vec![];
    }
    let mut quot = vec![0i64; rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (j, dj) in den.iter().enumerate() {
                rem[k + j] -= c * dj;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0), "inexact cyclotomic division");
    quot
}

fn cyclotomic_poly(n: u32, memo: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = memo.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let pd = cyclotomic_poly(d, memo);
            p = poly_div_exact(&p, &pd);
        }
    }
    memo.insert(n, p.clone());
    p
}

impl CycloCtx {
    fn build(conductor: u32) -> Self {
        assert!(conductor >= 1);
        let phi_poly = cyclotomic_poly(conductor, &mut HashMap::new());
        let phi = phi_poly.len() - 1;
        let mut xi_pow = Vec::with_capacity(conductor as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..conductor {
            xi_pow.push(cur.clone());
            // multiply by xi
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] -= top * phi_poly[j];
                }
            }
        }
        Self {
            conductor,
            phi,
            phi_poly,
            xi_pow,
        }
    }

    pub fn get(conductor: u32) -> Arc<CycloCtx> {
        static REG: OnceLock<Mutex<HashMap<u32, Arc<CycloCtx>>>> = OnceLock::new();
        let reg = REG.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = reg.lock().unwrap();
        guard
            .entry(conductor)
            .or_insert_with(|| Arc::new(CycloCtx::build(conductor)))
            .clone()
    }

    fn reduced_pow(&self, k: usize) -> &[i64] {
        &self.xi_pow[k % self.conductor as usize]
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
enum Repr {
    Small { num: Vec<i64>, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

/// An element of `Q(xi_N)`, stored as integer numerators over a common
/// positive denominator in the power basis `1, xi, ..., xi^{phi-1}`.
///
/// The representation is canonical: numerators and denominator share no
/// common factor, and values fitting in `i64` always use the small form.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    repr: Repr,
}

fn normalize_i128(num: Vec<i128>, den: i128) -> Repr {
    let (mut num, mut den) = (num, den);
    if den < 0 {
        num.iter_mut().for_each(|x| *x = -*x);
        den = -den;
    }
    if num.iter().all(|x| *x == 0) {
        return Repr::Small {
            num: vec![0; num.len()],
            den: 1,
        };
    }
    if den != 1 {
        let mut g = den;
        for x in &num {
            if g == 1 {
                break;
            }
            g = g.gcd(x);
        }
        if g != 1 {
            num.iter_mut().for_each(|x| *x /= g);
            den /= g;
        }
    }
    let small: Option<Vec<i64>> = num.iter().map(|x| i64::try_from(*x).ok()).collect();
    match (small, i64::try_from(den)) {
        (Some(num), Ok(den)) => Repr::Small { num, den },
        _ => Repr::Big {
            num: num.into_iter().map(BigInt::from).collect(),
            den: BigInt::from(den),
        },
    }
}

fn normalize_big(mut num: Vec<BigInt>, mut den: BigInt) -> Repr {
    if den.is_negative() {
        num.iter_mut().for_each(|x| *x = -&*x);
        den = -den;
    }
    if num.iter().all(|x| x.is_zero()) {
        return Repr::Small {
            num: vec![0; num.len()],
            den: 1,
        };
    }
    if !den.is_one() {
        let mut g = den.clone();
        for x in &num {
            if g.is_one() {
                break;
            }
            g = g.gcd(x);
        }
        if !g.is_one() {
            num.iter_mut().for_each(|x| *x = &*x / &g);
            den = &den / &g;
        }
    }
    let small: Option<Vec<i64>> = num.iter().map(|x| x.to_i64()).collect();
    match (small, den.to_i64()) {
        (Some(num), Some(den)) => Repr::Small { num, den },
        _ => Repr::Big { num, den },
    }
}

impl Repr {
    fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Repr::Small { num, den } => (
                num.iter().map(|x| BigInt::from(*x)).collect(),
                BigInt::from(*den),
            ),
            Repr::Big { num, den } => (num.clone(), den.clone()),
        }
    }
}

impl Cyclotomic {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn ctx(&self) -> Arc<CycloCtx> {
        CycloCtx::get(self.conductor)
    }

    pub fn zero(conductor: u32) -> Self {
        let phi = CycloCtx::get(conductor).phi;
        Self {
            conductor,
            repr: Repr::Small {
                num: vec![0; phi],
                den: 1,
            },
        }
    }

    pub fn from_int(conductor: u32, k: i64) -> Self {
        let mut out = Self::zero(conductor);
        if let Repr::Small { num, .. } = &mut out.repr {
            num[0] = k;
        }
        out
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_int(conductor, 1)
    }

    /// `xi^k` for any integer `k`.
    pub fn xi_pow(conductor: u32, k: i64) -> Self {
        let ctx = CycloCtx::get(conductor);
        let kk = k.rem_euclid(conductor as i64) as usize;
        Self {
            conductor,
            repr: Repr::Small {
                num: ctx.reduced_pow(kk).to_vec(),
                den: 1,
            },
        }
    }

    /// Builds `sum_j c_j xi^j` for coefficient lists of any length.
    pub fn from_rationals(conductor: u32, coeffs: &[Rational]) -> Self {
        let ctx = CycloCtx::get(conductor);
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut num = vec![BigInt::zero(); ctx.phi];
        for (j, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let scaled = c.numer() * (&den / c.denom());
            for (t, r) in ctx.reduced_pow(j).iter().enumerate() {
                if *r != 0 {
                    num[t] += &scaled * r;
                }
            }
        }
        Self {
            conductor,
            repr: normalize_big(num, den),
        }
    }

    pub fn from_rational(conductor: u32, c: &Rational) -> Self {
        Self::from_rationals(conductor, std::slice::from_ref(c))
    }

    /// Power-basis coefficients as rationals (length `phi(N)`).
    pub fn coeffs(&self) -> Vec<Rational> {
        let (num, den) = self.repr.to_big();
        num.into_iter()
            .map(|x| Rational::new(x, den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Small { num, .. } => num.iter().all(|x| *x == 0),
            Repr::Big { num, .. } => num.iter().all(|x| x.is_zero()),
        }
    }

    /// `Some(c)` when the element is the rational number `c`.
    pub fn as_rational(&self) -> Option<Rational> {
        let c = self.coeffs();
        if c[1..].iter().all(|x| x.is_zero()) {
            Some(c[0].clone())
        } else {
            None
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.conductor != other.conductor {
            return Err(Error::ConductorMismatch(self.conductor, other.conductor));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) =
            (&self.repr, &other.repr)
        {
            if da == db {
                let s: Option<Vec<i64>> =
                    a.iter().zip(b).map(|(x, y)| x.checked_add(*y)).collect();
                if let Some(s) = s {
                    if *da == 1 {
                        return Self {
                            conductor: self.conductor,
                            repr: Repr::Small { num: s, den: 1 },
                        };
                    }
                    return Self {
                        conductor: self.conductor,
                        repr: normalize_i128(s.into_iter().map(i128::from).collect(), *da as i128),
                    };
                }
            }
            let (da, db) = (*da as i128, *db as i128);
            let s: Vec<i128> = a
                .iter()
                .zip(b)
                .map(|(x, y)| *x as i128 * db + *y as i128 * da)
                .collect();
            return Self {
                conductor: self.conductor,
                repr: normalize_i128(s, da * db),
            };
        }
        let (a, da) = self.repr.to_big();
        let (b, db) = other.repr.to_big();
        let s = a
            .iter()
            .zip(&b)
            .map(|(x, y)| x * &db + y * &da)
            .collect();
        Self {
            conductor: self.conductor,
            repr: normalize_big(s, da * db),
        }
    }

    pub fn neg(&self) -> Self {
        let repr = match &self.repr {
            Repr::Small { num, den } => match num.iter().map(|x| x.checked_neg()).collect() {
                Some(n) => Repr::Small { num: n, den: *den },
                None => normalize_big(num.iter().map(|x| -BigInt::from(*x)).collect(), BigInt::from(*den)),
            },
            Repr::Big { num, den } => Repr::Big {
                num: num.iter().map(|x| -x).collect(),
                den: den.clone(),
            },
        };
        Self {
            conductor: self.conductor,
            repr,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul_small(ctx: &CycloCtx, a: &[i64], b: &[i64]) -> Option<Vec<i128>> {
        let phi = ctx.phi;
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            let x = *x as i128;
            for (j, y) in b.iter().enumerate() {
                if *y == 0 {
                    continue;
                }
                prod[i + j] = prod[i + j].checked_add(x * *y as i128)?;
            }
        }
        let mut out: Vec<i128> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if *c == 0 {
                continue;
            }
            for (t, r) in ctx.reduced_pow(k).iter().enumerate() {
                if *r != 0 {
                    out[t] = out[t].checked_add(c.checked_mul(*r as i128)?)?;
                }
            }
        }
        Some(out)
    }

    fn mul_big(ctx: &CycloCtx, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let phi = ctx.phi;
        let mut prod = vec![BigInt::zero(); 2 * phi - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<BigInt> = prod[..phi].to_vec();
        for (k, c) in prod.iter().enumerate().skip(phi) {
            if c.is_zero() {
                continue;
            }
            for (t, r) in ctx.reduced_pow(k).iter().enumerate() {
                if *r != 0 {
                    out[t] += c * *r;
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.conductor, other.conductor);
        let ctx = self.ctx();
        if let (Repr::Small { num: a, den: da }, Repr::Small { num: b, den: db }) =
            (&self.repr, &other.repr)
        {
            if let Some(p) = Self::mul_small(&ctx, a, b) {
                let den = *da as i128 * *db as i128;
                if den == 1 {
                    if let Some(num) = p.iter().map(|x| i64::try_from(*x).ok()).collect() {
                        return Self {
                            conductor: self.conductor,
                            repr: Repr::Small { num, den: 1 },
                        };
                    }
                }
                return Self {
                    conductor: self.conductor,
                    repr: normalize_i128(p, den),
                };
            }
        }
        let (a, da) = self.repr.to_big();
        let (b, db) = other.repr.to_big();
        Self {
            conductor: self.conductor,
            repr: normalize_big(Self::mul_big(&ctx, &a, &b), da * db),
        }
    }

    /// Multiplicative inverse, by solving the linear system for multiplication by `self`.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let ctx = self.ctx();
        let phi = ctx.phi;
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            cols.push(self.mul(&Self::xi_pow(self.conductor, j as i64)).coeffs());
        }
        // rows t: sum_j M[t][j] x_j = delta_{t0}
        let mut m: Vec<Vec<Rational>> = (0..phi)
            .map(|t| {
                let mut row: Vec<Rational> = (0..phi).map(|j| cols[j][t].clone()).collect();
                row.push(if t == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            let pinv = m[col][col].recip();
            for x in m[col].iter_mut() {
                *x *= &pinv;
            }
            let pivot_row = m[col].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != col && !row[col].is_zero() {
                    let f = row[col].clone();
                    for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                        *x -= &f * y;
                    }
                }
            }
        }
        let sol: Vec<Rational> = m.iter().map(|row| row[phi].clone()).collect();
        Some(Self::from_rationals(self.conductor, &sol))
    }

    /// The Galois conjugate `xi -> xi^{-1}`.
    pub fn conj(&self) -> Self {
        let ctx = self.ctx();
        let n = self.conductor as usize;
        let (num, den) = self.repr.to_big();
        let mut out = vec![BigInt::zero(); ctx.phi];
        for (j, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, r) in ctx.reduced_pow((n - j) % n).iter().enumerate() {
                if *r != 0 {
                    out[t] += c * *r;
                }
            }
        }
        Self {
            conductor: self.conductor,
            repr: normalize_big(out, den),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Returns `k` with `self = xi^k`, if the element is a power of `xi`.
    pub fn xi_log(&self) -> Option<u32> {
        (0..self.conductor).find(|&k| *self == Self::xi_pow(self.conductor, k as i64))
    }

    /// Integer numerators and common denominator, used for reduction modulo primes.
    pub fn numerators(&self) -> (Vec<BigInt>, BigInt) {
        self.repr.to_big()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "N": self.conductor,
            "coeffs": self.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let n = v
            .get("N")
            .and_then(Value::as_u64)
            .filter(|n| *n >= 1)
            .ok_or_else(|| Error::Parse(format!("missing conductor in {v}")))?;
        let coeffs = v
            .get("coeffs")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("missing coeffs in {v}")))?
            .iter()
            .map(rational_from_json)
            .collect::<Result<Vec<_>>>()?;
        let n = n as u32;
        if coeffs.len() != CycloCtx::get(n).phi {
            return Err(Error::Parse(format!(
                "expected {} coefficients for conductor {n}",
                CycloCtx::get(n).phi
            )));
        }
        Ok(Self::from_rationals(n, &coeffs))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| match j {
                0 => format!("{c}"),
                1 => format!("({c})*xi"),
                _ => format!("({c})*xi^{j}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CycloOp {
    Add,
    Mul,
    Inv,
    Eq,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CycloResult {
    Value(Cyclotomic),
    Bool(bool),
}

/// Checked field arithmetic on two elements (the second is ignored by `Inv`).
pub fn cyclotomic_arith(a: &Cyclotomic, b: &Cyclotomic, op: CycloOp) -> Result<CycloResult> {
    a.check(b)?;
    Ok(match op {
        CycloOp::Add => CycloResult::Value(a.add(b)),
        CycloOp::Mul => CycloResult::Value(a.mul(b)),
        CycloOp::Inv => CycloResult::Value(a.inv().ok_or(Error::DivisionByZero)?),
        CycloOp::Eq => CycloResult::Bool(a == b),
    })
}

/// The field `Q(xi)` for a primitive `2nm`-th root of unity `xi`, with `p = xi`
/// and `z = zeta = xi^2`.
#[derive(Clone, Debug)]
pub struct CyclotomicField {
    ctx: Arc<CycloCtx>,
}

impl CyclotomicField {
    pub fn new(n: usize, m: usize) -> Self {
        Self::with_conductor((2 * n * m) as u32)
    }

    pub fn with_conductor(conductor: u32) -> Self {
        Self {
            ctx: CycloCtx::get(conductor),
        }
    }

    pub fn conductor(&self) -> u32 {
        self.ctx.conductor
    }

    pub fn degree(&self) -> usize {
        self.ctx.phi
    }

    pub fn xi(&self) -> Cyclotomic {
        Cyclotomic::xi_pow(self.conductor(), 1)
    }

    pub fn zeta_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::xi_pow(self.conductor(), 2 * k)
    }

    pub fn from_rational(&self, c: &Rational) -> Cyclotomic {
        Cyclotomic::from_rational(self.conductor(), c)
    }
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.conductor() == other.conductor()
    }
}

impl Ring for CyclotomicField {
    type Elem = Cyclotomic;

    fn zero(&self) -> Cyclotomic {
        Cyclotomic::zero(self.conductor())
    }
    fn one(&self) -> Cyclotomic {
        Cyclotomic::one(self.conductor())
    }
    fn from_int(&self, k: i64) -> Cyclotomic {
        Cyclotomic::from_int(self.conductor(), k)
    }
    fn is_zero(&self, a: &Cyclotomic) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.add(b)
    }
    fn sub(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.sub(b)
    }
    fn neg(&self, a: &Cyclotomic) -> Cyclotomic {
        a.neg()
    }
    fn mul(&self, a: &Cyclotomic, b: &Cyclotomic) -> Cyclotomic {
        a.mul(b)
    }
    fn p_pow(&self, k: i64) -> Cyclotomic {
        Cyclotomic::xi_pow(self.conductor(), k)
    }
}

impl Field for CyclotomicField {
    fn inv(&self, a: &Cyclotomic) -> Option<Cyclotomic> {
        a.inv()
    }
}

impl Conjugation for CyclotomicField {
    fn conj(&self, a: &Cyclotomic) -> Cyclotomic {
        a.conj()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rational::rat;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(CycloCtx::get(12).phi_poly, vec![1, 0, -1, 0, 1]);
        assert_eq!(CycloCtx::get(18).phi_poly, vec![1, 0, 0, -1, 0, 0, 1]);
        assert_eq!(CycloCtx::get(1).phi_poly, vec![-1, 1]);
        assert_eq!(CycloCtx::get(7).phi, 6);
    }

    #[test]
    fn xi_has_order_n() {
        for n in [6u32, 12, 18, 24, 30, 36, 42] {
            let xi = Cyclotomic::xi_pow(n, 1);
            assert_eq!(xi.pow(n as u64), Cyclotomic::one(n));
            for k in 1..n {
                assert_ne!(xi.pow(k as u64), Cyclotomic::one(n));
            }
        }
    }

    #[test]
    fn zeta_cubed_is_minus_one_for_n12() {
        let f = CyclotomicField::new(3, 2);
        assert_eq!(f.zeta_pow(3), f.from_int(-1));
        assert_eq!(f.zeta_pow(6), f.one());
    }

    #[test]
    fn inverse_and_rationals() {
        let f = CyclotomicField::with_conductor(12);
        let a = Cyclotomic::from_rationals(12, &[rat(1, 2), rat(-3, 7), rat(0, 1), rat(5, 3)]);
        let ai = a.inv().unwrap();
        assert_eq!(a.mul(&ai), f.one());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn big_path_roundtrips() {
        let big = Cyclotomic::from_int(12, i64::MAX);
        let sq = big.mul(&big);
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        assert_eq!(sq.sub(&sq), Cyclotomic::zero(12));
    }

    #[test]
    fn json_roundtrip() {
        let a = Cyclotomic::from_rationals(12, &[rat(1, 2), rat(-3, 7), rat(0, 1), rat(5, 3)]);
        assert_eq!(Cyclotomic::from_json(&a.to_json()).unwrap(), a);
    }
}
