//! Demazure operators `d_i(f) = (f - s_i f) / (x_i - z x_{i+1})`, their word
//! compositions, the cyclic sums `Theta`, and the scalars `Xi`.

use serde_json::{json, Value};

use crate::affine::{abi_word, cyclic_word, AbiTriple, Anchor, Direction, Word};
use crate::error::{Error, Result};
use crate::exactnum::{quantum_binomial, quantum_binomial_general, quantum_factorial, quantum_int};
use crate::exactnum::{Cyclotomic, CyclotomicField};
use crate::exactnum::{FormalRing, FormalScalar, Ring};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::refrep::reflection_vars;

/// `s_i(f)`.
pub fn s_apply<R: Ring>(pr: &PolyRing<R>, i: u8, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    let (a, b) = reflection_vars(i, pr.n);
    let mut out = pr.zero();
    for (m, c) in &f.terms {
        let (ka, kb) = (m.0[a] as i64, m.0[b] as i64);
        let mut e = m.clone();
        e.0[a] = kb as u16;
        e.0[b] = ka as u16;
        pr.add_term(&mut out, e, &pr.ring.mul(c, &pr.ring.z_pow(ka - kb)));
    }
    out
}

/// `d_i(f)`, dividing each binary form in `(x_i, x_{i+1})` synthetically.
pub fn demazure_apply<R: Ring>(pr: &PolyRing<R>, i: u8, f: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
    let ring = &pr.ring;
    let (a, b) = reflection_vars(i, pr.n);
    let z = ring.z_pow(1);
    let mut out = pr.zero();
    for (key, d, form) in pr.binary_blocks(f, a, b) {
        if d == 0 {
            continue;
        }
        // (s_i F)[d-k] = z^{2k-d} F[k]
        let mut g: Vec<R::Elem> = form.clone();
        for (k, fk) in form.iter().enumerate() {
            if !ring.is_zero(fk) {
                let t = ring.mul(fk, &ring.z_pow(2 * k as i64 - d as i64));
                g[d - k] = ring.sub(&g[d - k], &t);
            }
        }
        let mut q = vec![ring.zero(); d];
        q[d - 1] = g[d].clone();
        for k in (1..d).rev() {
            q[k - 1] = ring.add(&g[k], &ring.mul(&z, &q[k]));
        }
        let rem = ring.add(&g[0], &ring.mul(&z, &q[0]));
        if !ring.is_zero(&rem) {
            return Err(Error::Inexact(format!("Demazure division by alpha_{i} failed")));
        }
        for (k, qk) in q.into_iter().enumerate() {
            let mut m: Monomial = key.clone();
            m.0[a] = k as u16;
            m.0[b] = (d - 1 - k) as u16;
            pr.add_term(&mut out, m, &qk);
        }
    }
    Ok(out)
}

/// `d_w = d_{i_1} ... d_{i_d}`, applying the rightmost letter first.
pub fn word_apply<R: Ring>(pr: &PolyRing<R>, w: &Word, f: &Poly<R::Elem>) -> Result<Poly<R::Elem>> {
    let mut g = f.clone();
    for &i in w.letters().iter().rev() {
        if g.is_zero() {
            break;
        }
        g = demazure_apply(pr, i, &g)?;
    }
    Ok(g)
}

/// A formal linear combination of Demazure words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpr<E> {
    pub terms: Vec<(E, Word)>,
}

impl<E: Clone> OperatorExpr<E> {
    pub fn zero() -> Self {
        OperatorExpr { terms: vec![] }
    }

    pub fn word(one: E, w: Word) -> Self {
        OperatorExpr {
            terms: vec![(one, w)],
        }
    }

    pub fn push(&mut self, c: E, w: Word) {
        self.terms.push((c, w));
    }

    /// Composition `self o other`, expanded bilinearly.
    pub fn compose<R: Ring<Elem = E>>(&self, ring: &R, other: &Self) -> Self {
        let mut out = Self::zero();
        for (c1, w1) in &self.terms {
            for (c2, w2) in &other.terms {
                out.push(ring.mul(c1, c2), w1.concat(w2));
            }
        }
        out
    }

    pub fn map<F, R: Ring>(&self, f: F) -> OperatorExpr<R::Elem>
    where
        F: Fn(&E) -> R::Elem,
    {
        OperatorExpr {
            terms: self.terms.iter().map(|(c, w)| (f(c), w.clone())).collect(),
        }
    }

    pub fn to_json<F: Fn(&E) -> Value>(&self, enc: F) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(c, w)| json!({ "coeff": enc(c), "word": w.to_string() }))
                .collect(),
        )
    }

    pub fn from_json<F: Fn(&Value) -> Result<E>>(v: &Value, n: usize, dec: F) -> Result<Self> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("operator JSON must be a list".into()))?;
        let mut out = Self::zero();
        for t in arr {
            let c = dec(t.get("coeff").ok_or_else(|| Error::Parse("missing coeff".into()))?)?;
            let w = t
                .get("word")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("missing word".into()))?;
            out.push(c, Word::parse(w, n)?);
        }
        Ok(out)
    }
}

pub fn expr_apply<R: Ring>(
    pr: &PolyRing<R>,
    e: &OperatorExpr<R::Elem>,
    f: &Poly<R::Elem>,
) -> Result<Poly<R::Elem>> {
    let mut out = pr.zero();
    for (c, w) in &e.terms {
        if pr.ring.is_zero(c) {
            continue;
        }
        out = pr.add(&out, &pr.scale(c, &word_apply(pr, w, f)?));
    }
    Ok(out)
}

/// `Theta^{(k)}_{i_L} = sum_t z^{-tk} d_{cw_{(i-t)_L, k(n-1)}}` (clockwise) or
/// `bar-Theta^{(k)}_{i_L} = sum_t z^{tk} d_{ws_{(i+t)_L, k(n-1)}}` (widdershins).
pub fn theta<R: Ring>(ring: &R, n: usize, i: i64, k: usize, dir: Direction) -> OperatorExpr<R::Elem> {
    let d = k * (n - 1);
    let mut out = OperatorExpr::zero();
    for t in 0..n as i64 {
        let (c, start) = match dir {
            Direction::Clockwise => (ring.z_pow(-t * k as i64), i - t),
            Direction::Widdershins => (ring.z_pow(t * k as i64), i + t),
        };
        out.push(c, cyclic_word(start, d, dir, Anchor::Left, n));
    }
    out
}

/// `Theta^{(k)}_{j_R}`: the same operator named by the last letter of its
/// leading word.
pub fn theta_right<R: Ring>(ring: &R, n: usize, j: i64, k: usize, dir: Direction) -> OperatorExpr<R::Elem> {
    let d = (k * (n - 1)) as i64;
    let i = match dir {
        Direction::Clockwise => j - (d - 1),
        Direction::Widdershins => j + (d - 1),
    };
    theta(ring, n, i, k, dir)
}

/// `d_{w(a,b,i)}(x_1^k x_2^{a+b+1-k})`, a scalar (`n = 3`).
pub fn xi_bruteforce<R: Ring>(pr: &PolyRing<R>, a: usize, b: usize, i: u8, k: usize) -> Result<R::Elem> {
    let len = a + b + 1;
    if k > len || pr.n != 3 {
        return Err(Error::Invalid(format!("need n = 3 and 0 <= k <= {len}")));
    }
    let w = abi_word(AbiTriple::new(a, b, i), 3)?;
    let f = pr.monomial(&[k as u16, (len - k) as u16, 0]);
    let g = word_apply(pr, &w, &f)?;
    if g.degree().unwrap_or(0) != 0 {
        return Err(Error::Invalid("result is not a scalar".into()));
    }
    Ok(pr.constant_term(&g))
}

/// The index data `(beta, d, floor)` attached to `a` at level `m`.
fn xi_indices(a: usize, m: usize) -> Option<(i64, i64, i64)> {
    if a + 1 > 3 * m {
        return None;
    }
    let b = 3 * m - 1 - a;
    let beta = if b % 2 == 1 { (b as i64 - 1) / 2 } else { (b as i64 - 2) / 2 };
    let d = (m / 2) as i64;
    let all_odd = m % 2 == 1 && a % 2 == 1 && b % 2 == 1;
    let floor = if all_odd { d } else { d - 1 };
    Some((beta, d, floor))
}

/// The quantum binomial `[M, B]` in [`xi_closed_formula`], or `None` when
/// `Xi_m(a, i)` vanishes.
pub fn xi_binomial(a: usize, m: usize) -> Option<(usize, usize)> {
    let (beta, _, floor) = xi_indices(a, m)?;
    if !(floor <= beta && beta <= m as i64 - 1) {
        return None;
    }
    Some(((m as i64 - 1 - floor) as usize, (beta - floor) as usize))
}

/// Closed formula for `Xi_m(a, i)` at `n = 3`, with `p -> xi` (primitive
/// `6m`-th root of unity) and `q = p^{-3}`. Independent of `i`.
pub fn xi_closed_formula(a: usize, m: usize) -> Cyclotomic {
    let f = CyclotomicField::new(3, m);
    let Some((beta, d, floor)) = xi_indices(a, m) else {
        return f.zero();
    };
    if !(floor <= beta && beta <= m as i64 - 1) {
        return f.zero();
    }
    let mi = m as i64;
    let (sign, pexp) = match (m % 2, a % 2) {
        (0, 0) => (1, -3 * beta * d + beta - 1),
        (0, _) => (-1, -3 * beta * d + 5 * beta + 3),
        (_, 0) => (if beta % 2 == 0 { -1 } else { 1 }, -9 * beta * d - beta - 2),
        (_, _) => (if beta % 2 == 0 { -1 } else { 1 }, -9 * beta * d - 2 * beta - 3),
    };
    let sign = sign * if d % 2 == 0 { 1 } else { -1 };
    let binom = quantum_binomial(&f, 3, mi - 1 - floor, beta - floor);
    let total_p = beta * (beta - 1) - 7 * d + pexp;
    let scalar = f.from_int(sign * mi * mi);
    f.mul(&f.mul(&scalar, &binom), &f.p_pow(total_p))
}

/// Outcome of comparing the brute-force value with the even-`a`/odd-`b`
/// product formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormalCaseStatus {
    /// `brute = sign * p^exponent * body`.
    Unit { sign: i8, exponent: i64 },
    /// Both sides vanish.
    BothZero,
    Mismatch,
    /// The inputs fall outside the main case (`k = 0`, `k = a+b+1`, `a = 0`,
    /// or wrong parities).
    OutOfScope,
}

#[derive(Clone, Debug)]
pub struct FormalCaseReport {
    pub a: usize,
    pub b: usize,
    pub i: u8,
    pub k: usize,
    pub brute: FormalScalar,
    pub body: FormalScalar,
    pub status: FormalCaseStatus,
}

impl FormalCaseReport {
    pub fn passed(&self) -> bool {
        matches!(
            self.status,
            FormalCaseStatus::Unit { .. } | FormalCaseStatus::BothZero
        )
    }
}

/// `[alpha]! [beta]! [alpha+beta+2-k] (q - q^{-1})^{alpha+beta+1}
///  sum_j [k-1, beta-j] [alpha+beta+1-k, j] q^{j(2k - 3(alpha+beta+2))}`
/// with `a = 2 alpha + 2`, `b = 2 beta + 1`.
pub fn xi_formal_body(a: usize, b: usize, k: usize) -> FormalScalar {
    let r = FormalRing;
    let (al, be) = ((a as i64 - 2) / 2, (b as i64 - 1) / 2);
    let k = k as i64;
    let qdiff = r.sub(&r.q_pow(3, 1), &r.q_pow(3, -1));
    let mut sum = r.zero();
    for j in 0..=be {
        let t = r.mul(
            &quantum_binomial(&r, 3, k - 1, be - j),
            &quantum_binomial_general(&r, 3, al + be + 1 - k, j),
        );
        sum = r.add(&sum, &r.mul(&t, &r.q_pow(3, j * (2 * k - 3 * (al + be + 2)))));
    }
    [
        quantum_factorial(&r, 3, al as u32),
        quantum_factorial(&r, 3, be as u32),
        quantum_int(&r, 3, al + be + 2 - k),
        r.pow(&qdiff, (al + be + 1) as u64),
        sum,
    ]
    .iter()
    .fold(r.one(), |acc, x| r.mul(&acc, x))
}

/// Checks the even-`a`/odd-`b` formula in the formal ring up to a unit
/// `+-p^e`, which is reported.
pub fn xi_formal_case_check(a: usize, b: usize, i: u8, k: usize) -> Result<FormalCaseReport> {
    let pr = PolyRing::new(FormalRing, 3);
    let in_scope = a >= 2 && a % 2 == 0 && b % 2 == 1 && k > 0 && k < a + b + 1;
    if !in_scope {
        return Ok(FormalCaseReport {
            a,
            b,
            i,
            k,
            brute: FormalScalar::zero(),
            body: FormalScalar::zero(),
            status: FormalCaseStatus::OutOfScope,
        });
    }
    let brute = xi_bruteforce(&pr, a, b, i, k)?;
    let body = xi_formal_body(a, b, k);
    let status = if brute.is_zero() && body.is_zero() {
        FormalCaseStatus::BothZero
    } else {
        match unit_ratio(&brute, &body) {
            Some((sign, exponent)) => FormalCaseStatus::Unit { sign, exponent },
            None => FormalCaseStatus::Mismatch,
        }
    };
    Ok(FormalCaseReport {
        a,
        b,
        i,
        k,
        brute,
        body,
        status,
    })
}

/// `(s, e)` with `num = s p^e den` and `s = +-1`, if such exist.
pub fn unit_ratio(num: &FormalScalar, den: &FormalScalar) -> Option<(i8, i64)> {
    let (en, cn) = num.terms().last()?;
    let (ed, cd) = den.terms().last()?;
    let ratio = cn / cd;
    let sign = if ratio == crate::exactnum::rat(1, 1) {
        1
    } else if ratio == crate::exactnum::rat(-1, 1) {
        -1
    } else {
        return None;
    };
    let e = en - ed;
    let unit = FormalScalar::p_pow(e).mul(&FormalScalar::from_int(sign as i64));
    (unit.mul(den) == *num).then_some((sign, e))
}
