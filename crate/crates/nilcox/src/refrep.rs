//! The deformed reflection representation `V_z` and its specialization `V_m`:
//! monomial matrices, roots, `Delta`, root-counting length, the group
//! `W_m = G(m,m,n)` with signs, and the element `omega`.
//!
//! The simple reflection `s_i` acts by `x_i -> z x_{i+1}`, `x_{i+1} -> z^{-1} x_i`
//! with indices mod `n`. In 0-based variables, letter `i` moves variable
//! `(i + n - 1) % n` to variable `i % n`.

use std::collections::HashMap;

use crate::affine::{cyclic_word, Anchor, Direction, Word};
use crate::error::{Error, Result};
use crate::exactnum::{Conjugation, Ring};
use crate::poly::{Poly, PolyRing};

/// The two variables moved by `s_i`: `(x_i, x_{i+1})` as 0-based indices.
pub fn reflection_vars(i: u8, n: usize) -> (usize, usize) {
    let i = i as usize % n;
    ((i + n - 1) % n, i)
}

/// The linear map `x_j -> scale[j] x_{perm[j]}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MonomialMatrix<E> {
    pub perm: Vec<usize>,
    pub scale: Vec<E>,
}

impl<E: Clone> MonomialMatrix<E> {
    pub fn n(&self) -> usize {
        self.perm.len()
    }
}

pub fn identity_matrix<R: Ring>(ring: &R, n: usize) -> MonomialMatrix<R::Elem> {
    MonomialMatrix {
        perm: (0..n).collect(),
        scale: vec![ring.one(); n],
    }
}

pub fn simple_reflection_matrix<R: Ring>(ring: &R, n: usize, i: u8) -> MonomialMatrix<R::Elem> {
    let (a, b) = reflection_vars(i, n);
    let mut g = identity_matrix(ring, n);
    g.perm[a] = b;
    g.perm[b] = a;
    g.scale[a] = ring.z_pow(1);
    g.scale[b] = ring.z_pow(-1);
    g
}

/// `g h` as linear maps (apply `h` first).
pub fn compose<R: Ring>(
    ring: &R,
    g: &MonomialMatrix<R::Elem>,
    h: &MonomialMatrix<R::Elem>,
) -> MonomialMatrix<R::Elem> {
    let n = g.n();
    let mut out = identity_matrix(ring, n);
    for j in 0..n {
        let k = h.perm[j];
        out.perm[j] = g.perm[k];
        out.scale[j] = ring.mul(&h.scale[j], &g.scale[k]);
    }
    out
}

/// The matrix of `s_{i_1} s_{i_2} ... s_{i_d}`.
pub fn word_matrix<R: Ring>(ring: &R, n: usize, w: &Word) -> MonomialMatrix<R::Elem> {
    w.letters().iter().fold(identity_matrix(ring, n), |g, &i| {
        compose(ring, &g, &simple_reflection_matrix(ring, n, i))
    })
}

pub fn apply_matrix<R: Ring>(
    pr: &PolyRing<R>,
    g: &MonomialMatrix<R::Elem>,
    f: &Poly<R::Elem>,
) -> Poly<R::Elem> {
    pr.apply_monomial_map(f, &g.perm, &g.scale)
}

/// An element of `W_m` with its sign `(-1)^{l(w)}` and breadth-first depth.
#[derive(Clone, Debug)]
pub struct GroupElement<E> {
    pub matrix: MonomialMatrix<E>,
    pub sign: i8,
    pub depth: usize,
}

fn bfs_closure<R: Ring>(
    ring: &R,
    n: usize,
    gens: &[u8],
    limit: usize,
) -> Result<Vec<GroupElement<R::Elem>>> {
    let gen_mats: Vec<_> = gens
        .iter()
        .map(|&i| simple_reflection_matrix(ring, n, i))
        .collect();
    let id = identity_matrix(ring, n);
    let mut seen: HashMap<MonomialMatrix<R::Elem>, usize> = HashMap::new();
    seen.insert(id.clone(), 0);
    let mut out = vec![GroupElement {
        matrix: id,
        sign: 1,
        depth: 0,
    }];
    let mut head = 0;
    while head < out.len() {
        let (g, depth) = (out[head].matrix.clone(), out[head].depth);
        head += 1;
        for s in &gen_mats {
            let h = compose(ring, &g, s);
            if !seen.contains_key(&h) {
                if out.len() >= limit {
                    return Err(Error::Capacity(format!(
                        "group closure exceeded {limit} elements"
                    )));
                }
                seen.insert(h.clone(), out.len());
                out.push(GroupElement {
                    matrix: h,
                    sign: if (depth + 1) % 2 == 0 { 1 } else { -1 },
                    depth: depth + 1,
                });
            }
        }
    }
    Ok(out)
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// All elements of `W_m` acting on `V_m`, by breadth-first search over the
/// simple reflections. `ring` must be the specialization (so that `z` has
/// order `nm`); the expected size `n! m^{n-1}` is checked.
pub fn enumerate_wm<R: Ring>(ring: &R, n: usize, m: usize) -> Result<Vec<GroupElement<R::Elem>>> {
    let expected = factorial(n) * m.pow(n as u32 - 1);
    let gens: Vec<u8> = (0..n as u8).collect();
    let all = bfs_closure(ring, n, &gens, expected + 1)?;
    if all.len() != expected {
        return Err(Error::Invalid(format!(
            "W_m has {} elements, expected {expected}",
            all.len()
        )));
    }
    Ok(all)
}

/// The finite Weyl group `S_n` generated by `s_1, ..., s_{n-1}`.
pub fn symmetric_subgroup<R: Ring>(ring: &R, n: usize) -> Vec<GroupElement<R::Elem>> {
    let gens: Vec<u8> = (1..n as u8).collect();
    bfs_closure(ring, n, &gens, factorial(n) + 1).expect("S_n is finite")
}

/// The translation by a root-lattice vector `a`: `x_i -> z^{n a_i} x_i`.
pub fn translation_action<R: Ring>(ring: &R, a: &[i64]) -> Result<MonomialMatrix<R::Elem>> {
    if a.iter().sum::<i64>() != 0 {
        return Err(Error::Invalid("translation vector must sum to zero".into()));
    }
    let n = a.len();
    Ok(MonomialMatrix {
        perm: (0..n).collect(),
        scale: a.iter().map(|&k| ring.z_pow(n as i64 * k)).collect(),
    })
}

/// The linear form `x_i - z^e x_j` (0-based variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub i: usize,
    pub j: usize,
    pub e: i64,
}

impl Root {
    pub fn to_poly<R: Ring>(&self, pr: &PolyRing<R>) -> Poly<R::Elem> {
        let zj = pr.scale(&pr.ring.z_pow(self.e), &pr.var(self.j));
        pr.sub(&pr.var(self.i), &zj)
    }
}

/// The simple root `alpha_i = x_i - z x_{i+1}`.
pub fn simple_root(i: u8, n: usize) -> Root {
    let (a, b) = reflection_vars(i, n);
    Root { i: a, j: b, e: 1 }
}

/// `Phi^1_m`: the roots `x_i - zeta^{j-i+ln} x_j` for `i < j`, `1 <= l <= m`.
pub fn phi1m(n: usize, m: usize) -> Vec<Root> {
    let mut out = vec![];
    for i in 0..n {
        for j in (i + 1)..n {
            for l in 1..=m {
                out.push(Root {
                    i,
                    j,
                    e: (j - i + l * n) as i64,
                });
            }
        }
    }
    out
}

/// `Delta`, the product of the roots in `Phi^1_m`.
pub fn delta<R: Ring>(pr: &PolyRing<R>, m: usize) -> Poly<R::Elem> {
    phi1m(pr.n, m)
        .iter()
        .fold(pr.one(), |acc, r| pr.mul(&acc, &r.to_poly(pr)))
}

/// A monomial matrix with scalars that are integer powers of `z`, used for
/// formal root bookkeeping without any scalar ring.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ZMatrix {
    pub perm: Vec<usize>,
    pub zexp: Vec<i64>,
}

impl ZMatrix {
    pub fn identity(n: usize) -> Self {
        ZMatrix {
            perm: (0..n).collect(),
            zexp: vec![0; n],
        }
    }

    pub fn simple(n: usize, i: u8) -> Self {
        let (a, b) = reflection_vars(i, n);
        let mut g = Self::identity(n);
        g.perm[a] = b;
        g.perm[b] = a;
        g.zexp[a] = 1;
        g.zexp[b] = -1;
        g
    }

    pub fn compose(&self, h: &ZMatrix) -> ZMatrix {
        let n = self.perm.len();
        let mut out = Self::identity(n);
        for j in 0..n {
            let k = h.perm[j];
            out.perm[j] = self.perm[k];
            out.zexp[j] = h.zexp[j] + self.zexp[k];
        }
        out
    }

    pub fn of_word(w: &Word, n: usize) -> ZMatrix {
        w.letters()
            .iter()
            .fold(Self::identity(n), |g, &i| g.compose(&Self::simple(n, i)))
    }

    /// Writes `g(x_i - z^e x_j)` as `sign * z^k * (x_a - z^E x_b)` with `E > 0`
    /// and returns `(negative, k, root)`.
    pub fn act_on_root(&self, r: &Root) -> (bool, i64, Root) {
        let (a, b) = (self.perm[r.i], self.perm[r.j]);
        let (ka, kb) = (self.zexp[r.i], self.zexp[r.j]);
        let e = r.e + kb - ka;
        if e > 0 {
            (false, ka, Root { i: a, j: b, e })
        } else {
            (true, ka + e, Root { i: b, j: a, e: -e })
        }
    }
}

/// Roots of `Phi^1` with twist level at most `bound`: `x_a - z^E x_b` with
/// `a != b`, `E = ((b - a) mod n) + l n`, `0 <= l <= bound`.
pub fn phi1_truncated(n: usize, bound: usize) -> Vec<Root> {
    let mut out = vec![];
    for a in 0..n {
        for b in 0..n {
            if a == b {
                continue;
            }
            let base = (b as i64 - a as i64).rem_euclid(n as i64);
            for l in 0..=bound as i64 {
                out.push(Root {
                    i: a,
                    j: b,
                    e: base + l * n as i64,
                });
            }
        }
    }
    out
}

/// Number of roots in `Phi^1` sent into `Phi^-` by the element of `w`, using
/// the truncation `l <= bound`.
pub fn root_counting_length_bounded(w: &Word, n: usize, bound: usize) -> usize {
    let g = ZMatrix::of_word(w, n);
    phi1_truncated(n, bound)
        .iter()
        .filter(|r| g.act_on_root(r).0)
        .count()
}

pub fn root_counting_length(w: &Word, n: usize) -> usize {
    root_counting_length_bounded(w, n, w.len())
}

/// `sum_k A_k` where `s_{i_1} ... s_{i_{k-1}}(alpha_{i_k}) = z^{A_k} beta_k`
/// with `beta_k` a root of `Phi^1`. Fails if some image is negative, i.e. the
/// word is not reduced.
pub fn inversion_root_weight(w: &Word, n: usize) -> Result<i64> {
    let mut g = ZMatrix::identity(n);
    let mut total = 0;
    for &i in w.letters() {
        let (neg, k, _) = g.act_on_root(&simple_root(i, n));
        if neg {
            return Err(Error::Invalid(format!("word {w} is not reduced")));
        }
        total += k;
        g = g.compose(&ZMatrix::simple(n, i));
    }
    Ok(total)
}

/// The exponent `e` with `d_x = z^e d_y` for two reduced words of the same element.
pub fn braid_scalar_exponent(x: &Word, y: &Word, n: usize) -> Result<i64> {
    Ok(inversion_root_weight(y, n)? - inversion_root_weight(x, n)?)
}

/// The element `omega`: the product of the simple reflections along the
/// clockwise word `cw_{i_R, m(n-1)}`, checked to be independent of `i`.
pub fn omega_check<R: Ring>(ring: &R, n: usize, m: usize) -> Result<MonomialMatrix<R::Elem>> {
    let mats: Vec<_> = (0..n as i64)
        .map(|i| {
            let w = cyclic_word(i, m * (n - 1), Direction::Clockwise, Anchor::Right, n);
            word_matrix(ring, n, &w)
        })
        .collect();
    if mats.iter().any(|g| *g != mats[0]) {
        return Err(Error::Invalid("cyclic products depend on the anchor".into()));
    }
    Ok(mats[0].clone())
}

/// `sigma(x_j) = x_{j+1}`, scalars fixed.
pub fn sigma_poly<R: Ring>(pr: &PolyRing<R>, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    let n = pr.n;
    let perm: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
    pr.apply_monomial_map(f, &perm, &vec![pr.ring.one(); n])
}

/// `tau(x_i) = x_{1-i}`, scalars conjugated (`z -> z^{-1}`).
pub fn tau_poly<R: Conjugation>(pr: &PolyRing<R>, f: &Poly<R::Elem>) -> Poly<R::Elem> {
    let n = pr.n;
    let perm: Vec<usize> = (0..n).map(|v| n - 1 - v).collect();
    pr.apply_monomial_map(&pr.conj(f), &perm, &vec![pr.ring.one(); n])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::{enumerate_elements, word_to_perm};
    use crate::exactnum::{CyclotomicField, FormalRing, FormalScalar};

    #[test]
    fn reflection_examples() {
        let pr = PolyRing::new(FormalRing, 3);
        let s1 = simple_reflection_matrix(&FormalRing, 3, 1);
        assert_eq!(
            apply_matrix(&pr, &s1, &pr.var(0)),
            pr.scale(&FormalScalar::z_pow(1), &pr.var(1))
        );
        assert_eq!(apply_matrix(&pr, &s1, &pr.var(2)), pr.var(2));
        for i in 0..3 {
            let s = simple_reflection_matrix(&FormalRing, 3, i);
            assert_eq!(compose(&FormalRing, &s, &s), identity_matrix(&FormalRing, 3));
        }
    }

    #[test]
    fn group_sizes() {
        assert_eq!(enumerate_wm(&CyclotomicField::new(3, 2), 3, 2).unwrap().len(), 24);
        assert_eq!(enumerate_wm(&CyclotomicField::new(3, 3), 3, 3).unwrap().len(), 54);
        assert_eq!(enumerate_wm(&CyclotomicField::new(4, 2), 4, 2).unwrap().len(), 192);
        assert_eq!(enumerate_wm(&CyclotomicField::new(3, 2), 3, 2).unwrap()[0].sign, 1);
    }

    #[test]
    fn root_count_matches_length() {
        for n in 2..=4 {
            for layer in enumerate_elements(n, 6) {
                for (g, w) in layer {
                    assert_eq!(root_counting_length(&w, n), g.length());
                    assert_eq!(root_counting_length_bounded(&w, n, w.len() + 3), g.length());
                }
            }
        }
        assert_eq!(word_to_perm(&Word(vec![2]), 3).length(), 1);
    }

    #[test]
    fn braid_scalar_hand_check() {
        for i in 0..3u8 {
            let x = Word(vec![i, (i + 1) % 3, i]);
            let y = Word(vec![(i + 1) % 3, i, (i + 1) % 3]);
            assert_eq!(braid_scalar_exponent(&x, &y, 3).unwrap(), -1);
        }
    }

    #[test]
    fn phi1m_size_and_delta_degree() {
        let f = CyclotomicField::new(3, 2);
        assert_eq!(phi1m(3, 2).len(), 6);
        let pr = PolyRing::new(f, 3);
        assert_eq!(delta(&pr, 2).degree(), Some(6));
    }
}
