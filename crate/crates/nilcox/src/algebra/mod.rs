//! The exotic nilCoxeter algebra `NC(m,m,n)` realized as block matrices on
//! the coinvariant algebra `C`.
//!
//! An R^W-linear operator on `R` is determined by its action on `C`, so each
//! element is stored as one matrix per source degree.

mod gamma;
mod nc;

pub use gamma::{frobenius_trace_classifier, gamma_checks, gamma_expr, GammaReport, TraceRow};
pub use nc::{
    conjecture_a_dims, nc_graded_dims, nc_graded_dims_modular, nc_table, new_relation_count, relation_kernel,
    GradedDims, NAlgebra, RelationSet, TableRow, DEFAULT_WORD_BUDGET,
};

use crate::affine::Word;
use crate::coinv::Coinvariant;
use crate::demazure::{demazure_apply, expr_apply, OperatorExpr};
use crate::error::Result;
use crate::exactnum::Field;
use crate::linalg::{identity, is_zero_matrix, matmul, Matrix};

/// An operator of degree `-deg`, as blocks `C_e -> C_{e - deg}` indexed by
/// the source degree `e = 0..=top`. Blocks with `e < deg` have no rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedOperator<E> {
    pub deg: usize,
    pub blocks: Vec<Matrix<E>>,
}

impl<E: Clone> GradedOperator<E> {
    /// Entries in ascending source degree, each block row-major.
    pub fn flatten(&self) -> Vec<E> {
        self.blocks.iter().flat_map(|b| b.data.iter().cloned()).collect()
    }

    pub fn flat_len(&self) -> usize {
        self.blocks.iter().map(|b| b.data.len()).sum()
    }
}

/// Demazure operators on `C`, with one matrix per letter and degree.
#[derive(Clone, Debug)]
pub struct Engine<F: Field> {
    pub coinv: Coinvariant<F>,
    letters: Vec<GradedOperator<F::Elem>>,
}

impl<F: Field> Engine<F> {
    pub fn new(field: F, n: usize, m: usize) -> Result<Self> {
        let coinv = Coinvariant::new(field, n, m)?;
        let mut letters = vec![];
        for i in 0..n as u8 {
            let mut blocks = vec![];
            for e in 0..=coinv.top {
                if e == 0 {
                    blocks.push(Matrix::filled(0, 1, coinv.field().zero()));
                    continue;
                }
                let cols = coinv.dim(e);
                let rows = coinv.dim(e - 1);
                let mut mat = Matrix::filled(rows, cols, coinv.field().zero());
                for (j, mono) in coinv.basis(e).iter().enumerate() {
                    let f = coinv.pr.term(mono.clone(), coinv.field().one());
                    let g = demazure_apply(&coinv.pr, i, &f)?;
                    for (r, c) in coinv.coords(&g, e - 1).into_iter().enumerate() {
                        mat.set(r, j, c);
                    }
                }
                blocks.push(mat);
            }
            letters.push(GradedOperator { deg: 1, blocks });
        }
        Ok(Engine { coinv, letters })
    }

    pub fn field(&self) -> &F {
        self.coinv.field()
    }

    pub fn n(&self) -> usize {
        self.coinv.n()
    }

    pub fn m(&self) -> usize {
        self.coinv.m
    }

    pub fn top(&self) -> usize {
        self.coinv.top
    }

    pub fn zero_operator(&self, deg: usize) -> GradedOperator<F::Elem> {
        let z = self.field().zero();
        let blocks = (0..=self.top())
            .map(|e| {
                let rows = if e >= deg { self.coinv.dim(e - deg) } else { 0 };
                Matrix::filled(rows, self.coinv.dim(e), z.clone())
            })
            .collect();
        GradedOperator { deg, blocks }
    }

    pub fn identity_operator(&self) -> GradedOperator<F::Elem> {
        GradedOperator {
            deg: 0,
            blocks: (0..=self.top()).map(|e| identity(self.field(), self.coinv.dim(e))).collect(),
        }
    }

    pub fn letter(&self, i: u8) -> &GradedOperator<F::Elem> {
        &self.letters[i as usize % self.n()]
    }

    /// `a o b`.
    pub fn compose(&self, a: &GradedOperator<F::Elem>, b: &GradedOperator<F::Elem>) -> GradedOperator<F::Elem> {
        let deg = a.deg + b.deg;
        if deg > self.top() {
            return self.zero_operator(deg);
        }
        let blocks = (0..=self.top())
            .map(|e| {
                if e < deg {
                    Matrix::filled(0, self.coinv.dim(e), self.field().zero())
                } else {
                    matmul(self.field(), &a.blocks[e - b.deg], &b.blocks[e])
                }
            })
            .collect();
        GradedOperator { deg, blocks }
    }

    pub fn word_operator(&self, w: &Word) -> GradedOperator<F::Elem> {
        w.letters()
            .iter()
            .rev()
            .fold(self.identity_operator(), |acc, &i| self.compose(self.letter(i), &acc))
    }

    /// `sum c a` over operators of equal degree.
    pub fn combine(&self, terms: &[(F::Elem, &GradedOperator<F::Elem>)], deg: usize) -> GradedOperator<F::Elem> {
        let f = self.field();
        let mut out = self.zero_operator(deg);
        for (c, op) in terms {
            assert_eq!(op.deg, deg);
            if f.is_zero(c) {
                continue;
            }
            for (ob, b) in out.blocks.iter_mut().zip(&op.blocks) {
                for (x, y) in ob.data.iter_mut().zip(&b.data) {
                    if !f.is_zero(y) {
                        f.mul_add_assign(x, c, y);
                    }
                }
            }
        }
        out
    }

    /// The operator of a formal combination of words of a common length, by
    /// multiplying letter matrices.
    pub fn expr_operator(&self, e: &OperatorExpr<F::Elem>) -> GradedOperator<F::Elem> {
        let deg = e.terms.first().map(|(_, w)| w.len()).unwrap_or(0);
        let ops: Vec<_> = e.terms.iter().map(|(c, w)| (c.clone(), self.word_operator(w))).collect();
        let refs: Vec<_> = ops.iter().map(|(c, o)| (c.clone(), o)).collect();
        self.combine(&refs, deg)
    }

    /// The operator of `e` computed by applying it to every standard monomial
    /// as a polynomial and reducing to normal form.
    pub fn operator_matrix(&self, e: &OperatorExpr<F::Elem>) -> Result<GradedOperator<F::Elem>> {
        let deg = e.terms.first().map(|(_, w)| w.len()).unwrap_or(0);
        let mut op = self.zero_operator(deg);
        let pr = &self.coinv.pr;
        for src in deg..=self.top() {
            for (j, mono) in self.coinv.basis(src).iter().enumerate() {
                let f = pr.term(mono.clone(), self.field().one());
                let g = expr_apply(pr, e, &f)?;
                for (r, c) in self.coinv.coords(&g, src - deg).into_iter().enumerate() {
                    op.blocks[src].set(r, j, c);
                }
            }
        }
        Ok(op)
    }

    pub fn is_zero(&self, op: &GradedOperator<F::Elem>) -> bool {
        op.blocks.iter().all(|b| is_zero_matrix(self.field(), b))
    }
}
