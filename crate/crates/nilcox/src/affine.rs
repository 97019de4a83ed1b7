//! Words in the simple reflections of the affine Weyl group of type `A~_{n-1}`,
//! the affine-permutation model, cyclic words, and the `w(a,b,i)`
//! parametrization of `n = 3`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the letters `Z/nZ`; letter `i` stands for `s_i`, with `s_0 = s_n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(vec![])
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reduces arbitrary integer letters modulo `n`.
    pub fn from_ints(letters: &[i64], n: usize) -> Self {
        Word(
            letters
                .iter()
                .map(|x| x.rem_euclid(n as i64) as u8)
                .collect(),
        )
    }

    /// Parses `"1,2,3,1"`, or for `n = 3` also alias strings such as `"stus"`
    /// (`s, t, u` for `1, 2, 0`). Integer letters are reduced modulo `n`.
    pub fn parse(s: &str, n: usize) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Word::empty());
        }
        let alias = |c: char| match c {
            's' => Some(1u8),
            't' => Some(2),
            'u' => Some(0),
            _ => None,
        };
        let mut out = vec![];
        for tok in s.split(',').map(str::trim) {
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty letter in word {s:?}")));
            }
            if let Ok(k) = tok.parse::<i64>() {
                out.push(k.rem_euclid(n as i64) as u8);
            } else if n == 3 && tok.chars().all(|c| alias(c).is_some()) {
                out.extend(tok.chars().map(|c| alias(c).unwrap()));
            } else {
                return Err(Error::Parse(format!("bad letter {tok:?} in word {s:?}")));
            }
        }
        Ok(Word(out))
    }

    /// Alias spelling for `n = 3` (`s, t, u`).
    pub fn to_alias_string(&self) -> String {
        self.0
            .iter()
            .map(|l| match l {
                1 => 's',
                2 => 't',
                _ => 'u',
            })
            .collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// An affine permutation `f: Z -> Z` with `f(i + n) = f(i) + n`, stored by its
/// window `f(1), ..., f(n)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn identity(n: usize) -> Self {
        AffinePerm {
            window: (1..=n as i64).collect(),
        }
    }

    pub fn from_window(window: Vec<i64>) -> Result<Self> {
        let n = window.len() as i64;
        if n < 2 {
            return Err(Error::Invalid("window needs n >= 2".into()));
        }
        let shift: i64 = window.iter().enumerate().map(|(k, f)| f - (k as i64 + 1)).sum();
        let mut residues: Vec<i64> = window.iter().map(|f| f.rem_euclid(n)).collect();
        residues.sort_unstable();
        residues.dedup();
        if shift != 0 || residues.len() != window.len() {
            return Err(Error::Invalid(format!("not an affine permutation window: {window:?}")));
        }
        Ok(AffinePerm { window })
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(k)` for any integer `k`.
    pub fn eval(&self, k: i64) -> i64 {
        let n = self.n() as i64;
        let r = (k - 1).rem_euclid(n);
        let q = (k - 1).div_euclid(n);
        self.window[r as usize] + q * n
    }

    /// Right multiplication by `s_i`, which swaps the values at positions `i` and `i+1`.
    pub fn mul_simple(&self, i: u8) -> Self {
        let n = self.n();
        let mut w = self.window.clone();
        let i = i as usize % n;
        if i == 0 {
            let f0 = w[n - 1] - n as i64;
            let fn1 = w[0] + n as i64;
            w[0] = f0;
            w[n - 1] = fn1;
        } else {
            w.swap(i - 1, i);
        }
        AffinePerm { window: w }
    }

    /// Number of affine inversions.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let mut total = 0i64;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).abs();
            }
        }
        total as usize
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(k, f)| *f == k as i64 + 1)
    }

    /// Letters `i` with `l(g s_i) < l(g)`.
    pub fn right_descents(&self) -> Vec<u8> {
        let l = self.length();
        (0..self.n() as u8)
            .filter(|&i| self.mul_simple(i).length() < l)
            .collect()
    }
}

pub fn word_to_perm(w: &Word, n: usize) -> AffinePerm {
    w.0.iter()
        .fold(AffinePerm::identity(n), |g, &i| g.mul_simple(i))
}

pub fn coxeter_length(g: &AffinePerm) -> usize {
    g.length()
}

pub fn is_reduced(w: &Word, n: usize) -> bool {
    coxeter_length(&word_to_perm(w, n)) == w.len()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Clockwise,
    Widdershins,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Anchor {
    Left,
    Right,
}

/// The cyclic word of length `d` stepping by `+1` (clockwise) or `-1`
/// (widdershins), whose first (`Left`) or last (`Right`) letter is `i`.
pub fn cyclic_word(i: i64, d: usize, dir: Direction, anchor: Anchor, n: usize) -> Word {
    let step = match dir {
        Direction::Clockwise => 1,
        Direction::Widdershins => -1,
    };
    let first = match anchor {
        Anchor::Left => i,
        Anchor::Right => i - step * (d as i64 - 1),
    };
    let letters: Vec<i64> = (0..d as i64).map(|t| first + step * t).collect();
    Word::from_ints(&letters, n)
}

/// The triple `(a, b, i)` naming the reduced word `w(a,b,i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbiTriple {
    pub a: usize,
    pub b: usize,
    pub i: u8,
}

impl AbiTriple {
    pub fn new(a: usize, b: usize, i: u8) -> Self {
        AbiTriple { a, b, i }
    }

    pub fn len(&self) -> usize {
        self.a + self.b + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for AbiTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w({},{},{})", self.a, self.b, self.i)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AbiDecomposition {
    Identity,
    Triple(AbiTriple),
}

/// `w(a,b,i) = cw_{j_R,a} (j+1) ws_{i_R,b}` where `ws_{i_R,b} = ws_{j_L,b}`
/// (and `j + 1 = i` when `b = 0`). For `n = 2` this is the alternating word of
/// length `a + 1` ending in `i` and `b` must be zero.
pub fn abi_word(t: AbiTriple, n: usize) -> Result<Word> {
    match n {
        2 => {
            if t.b != 0 {
                return Err(Error::Invalid("n = 2 uses b = 0".into()));
            }
            Ok(cyclic_word(t.i as i64, t.a + 1, Direction::Clockwise, Anchor::Right, 2))
        }
        3 => {
            let i = t.i as i64;
            let j = if t.b == 0 { i - 1 } else { i + t.b as i64 - 1 };
            let mut w = if t.a > 0 {
                cyclic_word(j, t.a, Direction::Clockwise, Anchor::Right, 3)
            } else {
                Word::empty()
            };
            w.0.push((j + 1).rem_euclid(3) as u8);
            if t.b > 0 {
                w = w.concat(&cyclic_word(i, t.b, Direction::Widdershins, Anchor::Right, 3));
            }
            Ok(w)
        }
        _ => Err(Error::Invalid(format!(
            "the (a,b,i) parametrization is defined for n = 2, 3 only (got n = {n})"
        ))),
    }
}

/// All triples naming elements of length `d >= 1`: `3d` of them for `n = 3`
/// (ordered by `a`, then `i`), two for `n = 2`.
pub fn abi_triples(d: usize, n: usize) -> Vec<AbiTriple> {
    assert!(d >= 1);
    match n {
        2 => (0..2).map(|i| AbiTriple::new(d - 1, 0, i)).collect(),
        3 => (0..d)
            .flat_map(|a| (0..3u8).map(move |i| AbiTriple::new(a, d - 1 - a, i)))
            .collect(),
        _ => panic!("abi parametrization needs n in {{2, 3}}"),
    }
}

/// Inverse of [`abi_word`]. Peels the maximal terminal widdershins run ending
/// at a right descent `i`; what remains must be a clockwise word ending at the
/// letter before the run's start.
pub fn abi_decompose(g: &AffinePerm) -> Result<AbiDecomposition> {
    let n = g.n();
    if g.is_identity() {
        return Ok(AbiDecomposition::Identity);
    }
    let len = g.length();
    match n {
        2 => {
            let i = g.right_descents()[0];
            Ok(AbiDecomposition::Triple(AbiTriple::new(len - 1, 0, i)))
        }
        3 => {
            for i in g.right_descents() {
                let mut h = g.clone();
                let mut run = 0usize;
                let mut letter = i as i64;
                loop {
                    let l = letter.rem_euclid(3) as u8;
                    let next = h.mul_simple(l);
                    if next.length() + 1 != h.length() {
                        break;
                    }
                    h = next;
                    run += 1;
                    letter += 1;
                }
                // The remainder h should be cw_{j_R, a} with j = i + run - 2.
                let a = len - run;
                let b = run - 1;
                let t = AbiTriple::new(a, b, i);
                if word_to_perm(&abi_word(t, 3)?, 3) == *g {
                    return Ok(AbiDecomposition::Triple(t));
                }
                // A shorter widdershins run can still finish the element when the
                // remainder absorbs the last peeled letter into its clockwise run.
                for r in (1..run).rev() {
                    let t = AbiTriple::new(len - r, r - 1, i);
                    if word_to_perm(&abi_word(t, 3)?, 3) == *g {
                        return Ok(AbiDecomposition::Triple(t));
                    }
                }
            }
            Err(Error::Invalid(format!("no (a,b,i) expression for window {:?}", g.window())))
        }
        _ => Err(Error::Invalid(format!(
            "the (a,b,i) parametrization is defined for n = 2, 3 only (got n = {n})"
        ))),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    Sigma,
    Tau,
    Reverse,
}

/// `sigma: i -> i+1`, `tau: i -> -i`, or reversal of the letter order.
pub fn word_symmetry(w: &Word, which: Symmetry, n: usize) -> Word {
    let n8 = n as u8;
    match which {
        Symmetry::Sigma => Word(w.0.iter().map(|l| (l + 1) % n8).collect()),
        Symmetry::Tau => Word(w.0.iter().map(|l| (n8 - l) % n8).collect()),
        Symmetry::Reverse => Word(w.0.iter().rev().copied().collect()),
    }
}

/// Elements of length `0..=max_len`, grouped by length, each with one reduced
/// word found by breadth-first search (letters tried in increasing order).
pub fn enumerate_elements(n: usize, max_len: usize) -> Vec<Vec<(AffinePerm, Word)>> {
    let mut layers = vec![vec![(AffinePerm::identity(n), Word::empty())]];
    for d in 1..=max_len {
        let mut seen: HashMap<AffinePerm, usize> = HashMap::new();
        let mut layer = vec![];
        for (g, w) in &layers[d - 1] {
            for i in 0..n as u8 {
                let h = g.mul_simple(i);
                if h.length() == d && !seen.contains_key(&h) {
                    seen.insert(h.clone(), layer.len());
                    let mut wl = w.clone();
                    wl.0.push(i);
                    layer.push((h, wl));
                }
            }
        }
        layers.push(layer);
    }
    layers
}

/// Every reduced word of `g`.
pub fn reduced_words(g: &AffinePerm) -> Vec<Word> {
    if g.is_identity() {
        return vec![Word::empty()];
    }
    let mut out = vec![];
    for i in g.right_descents() {
        for mut w in reduced_words(&g.mul_simple(i)) {
            w.0.push(i);
            out.push(w);
        }
    }
    out.sort();
    out
}
