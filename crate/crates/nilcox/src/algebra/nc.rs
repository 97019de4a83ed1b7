//! Graded dimensions of `NC(m,m,n)`, relation kernels, the count of new
//! relations per degree, and the roundabout-only algebra.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::{Engine, GradedOperator};
use crate::affine::{
    abi_decompose, abi_triples, abi_word, enumerate_elements, is_reduced, word_to_perm, AbiDecomposition,
    AbiTriple, Direction, Word,
};
use crate::demazure::{theta, OperatorExpr};
use crate::error::{Error, Result};
use crate::exactnum::{Field, ResidueField};
use crate::linalg::{kernel, EchelonBasis, Matrix};
use crate::refrep::braid_scalar_exponent;

/// Default cap on word evaluations for relation closure computations.
pub const DEFAULT_WORD_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDims {
    pub n: usize,
    pub m: usize,
    pub dims: Vec<usize>,
}

impl GradedDims {
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn to_json(&self) -> Value {
        json!({ "n": self.n, "m": self.m, "dims": self.dims })
    }

    pub fn is_palindromic(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }
}

/// One spanning word per group element of length `d`, with its operator.
/// For `n <= 3` these are the words `w(a,b,i)` in [`abi_triples`] order; for
/// larger `n` they come from breadth-first search.
struct Layer<E> {
    words: Vec<Word>,
    ops: Vec<GradedOperator<E>>,
}

fn uses_abi(n: usize) -> bool {
    n == 2 || n == 3
}

/// Visits layers `0..=max_d`, building each operator from one in the
/// previous layer by a single letter multiplication.
fn for_each_layer<F: Field, V>(engine: &Engine<F>, max_d: usize, mut visit: V) -> Result<()>
where
    V: FnMut(usize, &Layer<F::Elem>) -> Result<()>,
{
    let n = engine.n();
    let mut prev = Layer {
        words: vec![Word::empty()],
        ops: vec![engine.identity_operator()],
    };
    visit(0, &prev)?;
    if uses_abi(n) {
        let mut prev_index: HashMap<AbiTriple, usize> = HashMap::new();
        for d in 1..=max_d {
            let triples = abi_triples(d, n);
            let mut layer = Layer {
                words: vec![],
                ops: vec![],
            };
            let mut index = HashMap::new();
            for t in triples {
                let w = abi_word(t, n)?;
                let op = if d == 1 {
                    engine.letter(t.i).clone()
                } else {
                    let tail = if t.a >= 1 {
                        AbiTriple::new(t.a - 1, t.b, t.i)
                    } else {
                        AbiTriple::new(0, t.b - 1, t.i)
                    };
                    debug_assert_eq!(abi_word(tail, n)?.letters(), &w.letters()[1..]);
                    engine.compose(engine.letter(w.letters()[0]), &prev.ops[prev_index[&tail]])
                };
                index.insert(t, layer.ops.len());
                layer.words.push(w);
                layer.ops.push(op);
            }
            visit(d, &layer)?;
            prev = layer;
            prev_index = index;
        }
    } else {
        let elements = enumerate_elements(n, max_d);
        for d in 1..=max_d {
            let prev_index: HashMap<&Word, usize> =
                prev.words.iter().enumerate().map(|(k, w)| (w, k)).collect();
            let mut layer = Layer {
                words: vec![],
                ops: vec![],
            };
            for (_, w) in &elements[d] {
                let (parent, last) = w.letters().split_at(d - 1);
                let parent = Word(parent.to_vec());
                let op = engine.compose(&prev.ops[prev_index[&parent]], engine.letter(last[0]));
                layer.words.push(w.clone());
                layer.ops.push(op);
            }
            visit(d, &layer)?;
            prev = layer;
        }
    }
    Ok(())
}

pub(crate) fn span_rank<F: Field>(engine: &Engine<F>, ops: &[GradedOperator<F::Elem>]) -> usize {
    let Some(first) = ops.first() else { return 0 };
    let mut basis = EchelonBasis::new(engine.field().clone(), first.flat_len());
    for op in ops {
        basis.insert(&op.flatten());
    }
    basis.dim()
}

/// Coefficient vectors `c` with `sum_j c_j op_j = 0`.
pub(crate) fn relations_among<F: Field>(engine: &Engine<F>, ops: &[GradedOperator<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let flats: Vec<Vec<F::Elem>> = ops.iter().map(GradedOperator::flatten).collect();
    column_kernel(engine.field(), &flats)
}

/// Kernel of the matrix whose columns are `cols`.
pub(crate) fn column_kernel<F: Field>(f: &F, cols: &[Vec<F::Elem>]) -> Vec<Vec<F::Elem>> {
    let Some(first) = cols.first() else { return vec![] };
    // Keep only coordinates where some column is nonzero.
    let live: Vec<usize> = (0..first.len())
        .filter(|&r| cols.iter().any(|v| !f.is_zero(&v[r])))
        .collect();
    let mut a = Matrix::filled(live.len(), cols.len(), f.zero());
    for (j, v) in cols.iter().enumerate() {
        for (i, &r) in live.iter().enumerate() {
            a.set(i, j, v[r].clone());
        }
    }
    kernel(f, &a)
}

/// Graded dimension of the span of word operators, degree by degree.
pub fn nc_graded_dims<F: Field>(engine: &Engine<F>) -> Result<GradedDims> {
    let mut dims = vec![];
    for_each_layer(engine, engine.top(), |_, layer| {
        dims.push(span_rank(engine, &layer.ops));
        Ok(())
    })?;
    Ok(GradedDims {
        n: engine.n(),
        m: engine.m(),
        dims,
    })
}

/// [`nc_graded_dims`] over `primes` residue fields `F_p` with `p = 1 mod 2nm`.
///
/// All operator entries lie in `Z[xi]`, so each modular rank is at most the
/// rank over `Q(xi)`. The results must agree across primes.
pub fn nc_graded_dims_modular(n: usize, m: usize, primes: usize) -> Result<GradedDims> {
    let mut result: Option<GradedDims> = None;
    for k in 0..primes.max(1) {
        let field = ResidueField::new((2 * n * m) as u32, k);
        let engine = Engine::new(field, n, m)?;
        let dims = nc_graded_dims(&engine)?;
        if let Some(prev) = &result {
            if *prev != dims {
                return Err(Error::Invalid(format!(
                    "modular ranks disagree between primes: {:?} vs {:?}",
                    prev.dims, dims.dims
                )));
            }
        }
        result = Some(dims);
    }
    Ok(result.expect("at least one prime"))
}

/// Linear relations among the spanning operators of length `d`.
#[derive(Clone, Debug)]
pub struct RelationSet<E> {
    pub degree: usize,
    pub words: Vec<Word>,
    pub kernel_basis: Vec<OperatorExpr<E>>,
}

impl<E: Clone> RelationSet<E> {
    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }
}

fn to_exprs<F: Field>(f: &F, words: &[Word], vecs: &[Vec<F::Elem>]) -> Vec<OperatorExpr<F::Elem>> {
    vecs.iter()
        .map(|v| OperatorExpr {
            terms: v
                .iter()
                .zip(words)
                .filter(|(c, _)| !f.is_zero(c))
                .map(|(c, w)| (c.clone(), w.clone()))
                .collect(),
        })
        .collect()
}

pub fn relation_kernel<F: Field>(engine: &Engine<F>, d: usize) -> Result<RelationSet<F::Elem>> {
    let mut out = None;
    for_each_layer(engine, d, |k, layer| {
        if k == d {
            let vecs = relations_among(engine, &layer.ops);
            out = Some(RelationSet {
                degree: d,
                words: layer.words.clone(),
                kernel_basis: to_exprs(engine.field(), &layer.words, &vecs),
            });
        }
        Ok(())
    })?;
    Ok(out.expect("layer d visited"))
}

/// The algebra generated by `d_0, ..., d_{n-1}` modulo the nil-quadratic and
/// (scaled) braid relations, at `z = zeta`, with basis the words `w(a,b,i)`.
#[derive(Clone, Debug)]
pub struct NAlgebra<F: Field> {
    pub field: F,
    pub n: usize,
}

impl<F: Field> NAlgebra<F> {
    pub fn new(field: F, n: usize) -> Result<Self> {
        if !uses_abi(n) {
            return Err(Error::Invalid(format!("the word basis needs n = 2 or 3, got {n}")));
        }
        Ok(NAlgebra { field, n })
    }

    pub fn layer_size(&self, d: usize) -> usize {
        if d == 0 {
            1
        } else {
            abi_triples(d, self.n).len()
        }
    }

    /// Position of a triple in [`abi_triples`] order.
    pub fn index_of(&self, t: AbiTriple) -> usize {
        if self.n == 2 {
            t.i as usize
        } else {
            3 * t.a + t.i as usize
        }
    }

    /// `d_w = c d_{w(a,b,i)}`, or `None` when `w` is not reduced (so `d_w = 0`).
    pub fn express(&self, w: &Word) -> Result<Option<(usize, F::Elem)>> {
        if !is_reduced(w, self.n) {
            return Ok(None);
        }
        match abi_decompose(&word_to_perm(w, self.n))? {
            AbiDecomposition::Identity => Ok(Some((0, self.field.one()))),
            AbiDecomposition::Triple(t) => {
                let canon = abi_word(t, self.n)?;
                let e = braid_scalar_exponent(w, &canon, self.n)?;
                Ok(Some((self.index_of(t), self.field.z_pow(e))))
            }
        }
    }

    fn basis_word(&self, d: usize, k: usize) -> Result<Word> {
        if d == 0 {
            return Ok(Word::empty());
        }
        abi_word(abi_triples(d, self.n)[k], self.n)
    }

    /// `l v` (`left = true`) or `v l` for a vector `v` in degree `d`.
    pub fn mul_letter(&self, l: u8, v: &[F::Elem], d: usize, left: bool) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.layer_size(d + 1)];
        for (k, c) in v.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let w = self.basis_word(d, k)?;
            let lw = if left {
                Word(vec![l]).concat(&w)
            } else {
                w.concat(&Word(vec![l]))
            };
            if let Some((idx, s)) = self.express(&lw)? {
                f.mul_add_assign(&mut out[idx], c, &s);
            }
        }
        Ok(out)
    }

    /// Coordinates of a combination of words of length `d`.
    pub fn expr_vector(&self, e: &OperatorExpr<F::Elem>, d: usize) -> Result<Vec<F::Elem>> {
        let f = &self.field;
        let mut out = vec![f.zero(); self.layer_size(d)];
        for (c, w) in &e.terms {
            if w.len() != d {
                return Err(Error::Invalid(format!("word {w} does not have length {d}")));
            }
            if let Some((idx, s)) = self.express(w)? {
                f.mul_add_assign(&mut out[idx], c, &s);
            }
        }
        Ok(out)
    }

    /// Span of `l v` and `v l` over letters `l` and `v` in `basis` (degree `d`),
    /// inside degree `d + 1`.
    pub fn two_sided_step(&self, basis: &EchelonBasis<F>, d: usize) -> Result<EchelonBasis<F>> {
        let mut out = EchelonBasis::new(self.field.clone(), self.layer_size(d + 1));
        for v in basis.vectors() {
            for l in 0..self.n as u8 {
                for left in [true, false] {
                    out.insert(&self.mul_letter(l, v, d, left)?);
                }
            }
        }
        Ok(out)
    }
}

/// One row of the graded-dimension table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableRow {
    pub degree: usize,
    pub dim: usize,
    pub new_relations: usize,
}

fn check_budget(n: usize, max_d: usize, budget: usize) -> Result<()> {
    // operators built, plus letter products in the closure step
    let words: usize = (1..=max_d).map(|d| abi_triples(d, n).len()).sum();
    let last = abi_triples(max_d.max(1), n).len();
    let cost = words + 2 * n * last * last;
    if cost > budget {
        return Err(Error::Capacity(format!(
            "degree {max_d} needs about {cost} word evaluations, budget is {budget}"
        )));
    }
    Ok(())
}

/// Dimension and number of new relations in each degree `0..=max_d`.
///
/// The new relations in degree `d` are `dim K_d - dim(sum_l (l K_{d-1} + K_{d-1} l))`,
/// where `K_d` is the kernel of the evaluation map on the span of the words
/// `w(a,b,i)` of length `d`, and products are taken in [`NAlgebra`].
pub fn nc_table<F: Field>(engine: &Engine<F>, max_d: usize, budget: usize) -> Result<Vec<TableRow>> {
    let n = engine.n();
    let alg = NAlgebra::new(engine.field().clone(), n)?;
    check_budget(n, max_d, budget)?;
    let mut rows = vec![];
    let mut prev_kernel: Option<EchelonBasis<F>> = None;
    for_each_layer(engine, max_d, |d, layer| {
        let dim = span_rank(engine, &layer.ops);
        let mut kern = EchelonBasis::new(engine.field().clone(), layer.ops.len());
        for v in relations_among(engine, &layer.ops) {
            kern.insert(&v);
        }
        let generated = match &prev_kernel {
            Some(pk) if d >= 1 => alg.two_sided_step(pk, d - 1)?.dim(),
            _ => 0,
        };
        rows.push(TableRow {
            degree: d,
            dim,
            new_relations: kern.dim() - generated,
        });
        prev_kernel = Some(kern);
        Ok(())
    })?;
    Ok(rows)
}

pub fn new_relation_count<F: Field>(engine: &Engine<F>, d: usize, budget: usize) -> Result<usize> {
    Ok(nc_table(engine, d, budget)?[d].new_relations)
}

/// Graded dimensions of the algebra on `d_1, d_2, d_0` with the quadratic,
/// braid and both roundabout relations, through degree `4m + 1` (trailing
/// zeros dropped). `n = 3`.
pub fn conjecture_a_dims<F: Field>(field: F, m: usize, budget: usize) -> Result<GradedDims> {
    let n = 3;
    let alg = NAlgebra::new(field.clone(), n)?;
    let max_d = 4 * m + 1;
    check_budget(n, max_d, budget)?;
    let start = m * (n - 1);
    let mut dims = vec![];
    let mut ideal: Option<EchelonBasis<F>> = None;
    for d in 0..=max_d {
        let size = alg.layer_size(d);
        let idim = if d < start {
            0
        } else {
            let next = if d == start {
                let mut b = EchelonBasis::new(field.clone(), size);
                for i in 0..n as i64 {
                    for dir in [Direction::Clockwise, Direction::Widdershins] {
                        b.insert(&alg.expr_vector(&theta(&field, n, i, m, dir), d)?);
                    }
                }
                b
            } else {
                alg.two_sided_step(ideal.as_ref().expect("ideal started"), d - 1)?
            };
            let k = next.dim();
            ideal = Some(next);
            k
        };
        dims.push(size - idim);
    }
    while dims.len() > 1 && dims.last() == Some(&0) {
        dims.pop();
    }
    Ok(GradedDims { n, m, dims })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::CyclotomicField;

    #[test]
    fn dims_m2() {
        let eng = Engine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let g = nc_graded_dims(&eng).unwrap();
        assert_eq!(g.dims, vec![1, 3, 6, 9, 10, 6, 1]);
        assert_eq!(g.total(), 36);
    }

    #[test]
    fn relation_counts_m2() {
        let eng = Engine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let t = nc_table(&eng, 6, DEFAULT_WORD_BUDGET).unwrap();
        let rel: Vec<usize> = t.iter().map(|r| r.new_relations).collect();
        assert_eq!(rel[4], 2);
        assert_eq!(rel[5], 3);
        assert_eq!(relation_kernel(&eng, 1).unwrap().dim(), 0);
    }

    #[test]
    fn conjecture_a_m2() {
        let g = conjecture_a_dims(CyclotomicField::new(3, 2), 2, DEFAULT_WORD_BUDGET).unwrap();
        assert_eq!(g.dims, vec![1, 3, 6, 9, 10, 9, 6, 3, 1]);
    }

    #[test]
    fn bfs_path_matches_abi_path() {
        let eng = Engine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let mut dims = vec![];
        let elements = enumerate_elements(3, eng.top());
        for layer in &elements {
            let ops: Vec<_> = layer.iter().map(|(_, w)| eng.word_operator(w)).collect();
            dims.push(span_rank(&eng, &ops));
        }
        assert_eq!(dims, nc_graded_dims(&eng).unwrap().dims);
    }
}
