//! Balanced quantum integers, factorials and binomials in `q = p^{-n}`.

use super::ring::Ring;

/// `[k]_q = q^{k-1} + q^{k-3} + ... + q^{1-k}`, with `[-k] = -[k]`.
pub fn quantum_int<R: Ring>(ring: &R, n: usize, k: i64) -> R::Elem {
    let kk = k.abs();
    let mut acc = ring.zero();
    for j in 0..kk {
        ring.add_assign(&mut acc, &ring.q_pow(n, kk - 1 - 2 * j));
    }
    if k < 0 {
        ring.neg(&acc)
    } else {
        acc
    }
}

/// `[k]! = [1][2]...[k]`; `[0]! = 1`.
pub fn quantum_factorial<R: Ring>(ring: &R, n: usize, k: u32) -> R::Elem {
    (1..=k as i64).fold(ring.one(), |acc, j| ring.mul(&acc, &quantum_int(ring, n, j)))
}

/// Balanced quantum binomial `[k choose c]` via the Pascal recurrence
/// `[k c] = q^c [k-1 c] + q^{c-k} [k-1 c-1]`; zero outside `0 <= c <= k`.
pub fn quantum_binomial<R: Ring>(ring: &R, n: usize, k: i64, c: i64) -> R::Elem {
    if k < 0 || c < 0 || c > k {
        return ring.zero();
    }
    let (k, c) = (k as usize, c as usize);
    let mut row = vec![ring.one()];
    for kk in 1..=k {
        let mut next = Vec::with_capacity(kk + 1);
        for cc in 0..=kk {
            let mut v = ring.zero();
            if cc < kk {
                v = ring.mul(&ring.q_pow(n, cc as i64), &row[cc]);
            }
            if cc >= 1 {
                let t = ring.mul(&ring.q_pow(n, cc as i64 - kk as i64), &row[cc - 1]);
                ring.add_assign(&mut v, &t);
            }
            next.push(v);
        }
        row = next;
    }
    row.swap_remove(c)
}

/// `[k choose c]` for any integer `k`, via `[-k choose c] = (-1)^c [k+c-1 choose c]`
/// when `k < 0`; zero for `c < 0`.
pub fn quantum_binomial_general<R: Ring>(ring: &R, n: usize, k: i64, c: i64) -> R::Elem {
    if c < 0 {
        return ring.zero();
    }
    if k >= 0 {
        return quantum_binomial(ring, n, k, c);
    }
    let v = quantum_binomial(ring, n, -k + c - 1, c);
    if c % 2 == 0 {
        v
    } else {
        ring.neg(&v)
    }
}
