use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::cyclotomic::Cyclotomic;
use super::ring::{Field, Ring};

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The residue field `Z[xi]/P = F_p` for a prime `p = 1 mod N` below `2^31`,
/// with `xi` sent to an element of multiplicative order exactly `N`.
///
/// Reduction is a ring homomorphism on `p`-integral elements, so ranks computed
/// here never exceed ranks over `Q(xi)`.
#[derive(Clone, Debug)]
pub struct ResidueField {
    p: u64,
    conductor: u32,
    xi_pows: Arc<Vec<u64>>,
}

impl ResidueField {
    /// The `index`-th largest prime `p < 2^31` with `p = 1 mod N`.
    pub fn new(conductor: u32, index: usize) -> Self {
        let n = conductor as u64;
        let mut k = ((1u64 << 31) - 2) / n;
        let mut found = 0;
        let p = loop {
            let cand = k * n + 1;
            if is_prime(cand) {
                if found == index {
                    break cand;
                }
                found += 1;
            }
            k -= 1;
        };
        let factors = prime_factors(p - 1);
        let g = (2..p)
            .find(|g| factors.iter().all(|q| pow_mod(*g, (p - 1) / q, p) != 1))
            .expect("primitive root exists");
        let xi = pow_mod(g, (p - 1) / n, p);
        let mut xi_pows = Vec::with_capacity(conductor as usize);
        let mut cur = 1u64;
        for _ in 0..conductor {
            xi_pows.push(cur);
            cur = cur * xi % p;
        }
        Self {
            p,
            conductor,
            xi_pows: Arc::new(xi_pows),
        }
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    fn reduce_int(&self, x: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = ((x % &p) + &p) % &p;
        r.to_u64().unwrap()
    }

    /// Image of a cyclotomic number; `None` when its denominator vanishes mod `p`.
    pub fn reduce(&self, c: &Cyclotomic) -> Option<u64> {
        assert_eq!(c.conductor(), self.conductor, "conductor mismatch");
        let (num, den) = c.numerators();
        let d = self.reduce_int(&den);
        let dinv = self.inv(&d)?;
        let mut acc = 0u64;
        for (j, x) in num.iter().enumerate() {
            let r = self.reduce_int(x);
            acc = (acc + r * self.xi_pows[j]) % self.p;
        }
        Some(acc * dinv % self.p)
    }
}

impl Ring for ResidueField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn from_int(&self, k: i64) -> u64 {
        k.rem_euclid(self.p as i64) as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    fn p_pow(&self, k: i64) -> u64 {
        self.xi_pows[k.rem_euclid(self.conductor as i64) as usize]
    }
    fn mul_add_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = (*acc + a * b) % self.p;
    }
}

impl Field for ResidueField {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }
}
