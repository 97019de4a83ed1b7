use std::fmt::Debug;
use std::hash::Hash;

/// A commutative scalar ring together with the distinguished unit `p`
/// (the half-power of `z`).
///
/// Elements are plain values; all arithmetic goes through the ring object so
/// that context (conductor, modulus) never has to travel with each element.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Hash + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_int(&self, k: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `p^k`, where `z = p^2`.
    fn p_pow(&self, k: i64) -> Self::Elem;

    /// `z^k`.
    fn z_pow(&self, k: i64) -> Self::Elem {
        self.p_pow(2 * k)
    }

    /// `q^k` with `q = p^{-n}`.
    fn q_pow(&self, n: usize, k: i64) -> Self::Elem {
        self.p_pow(-(n as i64) * k)
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn add_assign(&self, a: &mut Self::Elem, b: &Self::Elem) {
        *a = self.add(a, b);
    }

    /// `acc += a * b`.
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let prod = self.mul(a, b);
        self.add_assign(acc, &prod);
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// The automorphism `p -> p^{-1}` (complex conjugation once specialized).
pub trait Conjugation: Ring {
    fn conj(&self, a: &Self::Elem) -> Self::Elem;
}
