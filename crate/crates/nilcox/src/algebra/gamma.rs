//! The degree-2 element `gamma` of `NC(2,2,3)` and the classification of
//! top-degree operators as Frobenius traces.

use super::nc::{column_kernel, span_rank};
use super::{Engine, GradedOperator};
use crate::affine::{abi_triples, abi_word, AbiTriple, Word};
use crate::coinv::pi_m;
use crate::demazure::{expr_apply, xi_closed_formula, OperatorExpr};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, CyclotomicField, Field, Ring};
use crate::linalg::EchelonBasis;
use crate::poly::monomials_of_degree;

/// `gamma = d_ts - z d_ut + z^2 d_su - z^2 d_us + z d_tu - d_st` at `z = zeta`.
pub fn gamma_expr<F: Field>(field: &F) -> OperatorExpr<F::Elem> {
    let terms: [(u8, u8, i64, bool); 6] = [
        (2, 1, 0, false),
        (0, 2, 1, true),
        (1, 0, 2, false),
        (0, 1, 2, true),
        (2, 0, 1, false),
        (1, 2, 0, true),
    ];
    let mut e = OperatorExpr::zero();
    for (a, b, k, negative) in terms {
        let c = field.z_pow(k);
        let c = if negative { field.neg(&c) } else { c };
        e.push(c, Word(vec![a, b]));
    }
    e
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaReport {
    /// Every length-4 word operator kills `gamma` on both sides.
    pub annihilated: bool,
    /// Dimension of the degree-2 elements killed on both sides by degree 4.
    pub annihilator_dim: usize,
    /// `gamma` kills every degree-2 polynomial.
    pub kills_degree_two: bool,
    /// `gamma(x_1^4 x_2^2)` lies in `(R^W_+)`.
    pub staircase_in_ideal: bool,
    /// `gamma` is not the zero operator.
    pub nonzero: bool,
    /// Graded dimension of `NC / NC gamma`.
    pub quotient_dims: Vec<usize>,
    /// Graded dimension of the coinvariant algebra, for comparison.
    pub expected_dims: Vec<usize>,
}

impl GammaReport {
    pub fn passed(&self) -> bool {
        self.annihilated
            && self.annihilator_dim == 1
            && self.kills_degree_two
            && self.staircase_in_ideal
            && self.nonzero
            && self.quotient_dims == self.expected_dims
    }
}

fn layer_operators<F: Field>(engine: &Engine<F>, d: usize) -> Result<Vec<GradedOperator<F::Elem>>> {
    if d == 0 {
        return Ok(vec![engine.identity_operator()]);
    }
    abi_triples(d, engine.n())
        .into_iter()
        .map(|t| Ok(engine.word_operator(&abi_word(t, engine.n())?)))
        .collect()
}

pub fn gamma_checks<F: Field>(engine: &Engine<F>) -> Result<GammaReport> {
    if engine.n() != 3 || engine.m() != 2 {
        return Err(Error::Invalid(format!(
            "gamma lives in NC(2,2,3), got n = {}, m = {}",
            engine.n(),
            engine.m()
        )));
    }
    let f = engine.field();
    let pr = &engine.coinv.pr;
    let expr = gamma_expr(f);
    let gamma = engine.expr_operator(&expr);
    let deg4 = layer_operators(engine, 4)?;

    let annihilated = deg4
        .iter()
        .all(|x| engine.is_zero(&engine.compose(x, &gamma)) && engine.is_zero(&engine.compose(&gamma, x)));

    let deg2 = layer_operators(engine, 2)?;
    let cols: Vec<Vec<F::Elem>> = deg2
        .iter()
        .map(|y| {
            deg4.iter()
                .flat_map(|x| {
                    let mut v = engine.compose(x, y).flatten();
                    v.extend(engine.compose(y, x).flatten());
                    v
                })
                .collect()
        })
        .collect();
    let annihilator_dim = column_kernel(f, &cols).len();

    let mut kills_degree_two = true;
    for mono in monomials_of_degree(3, 2) {
        let g = expr_apply(pr, &expr, &pr.term(mono, f.one()))?;
        kills_degree_two &= g.is_zero();
    }

    let staircase = pr.monomial(&[4, 2, 0]);
    let staircase_in_ideal = engine.coinv.in_ideal(&expr_apply(pr, &expr, &staircase)?);

    let mut quotient_dims = vec![];
    for d in 0..=engine.top() {
        let all = layer_operators(engine, d)?;
        let full = span_rank(engine, &all);
        let ideal = if d < 2 {
            0
        } else {
            let mut b = EchelonBasis::new(f.clone(), all[0].flat_len());
            for x in layer_operators(engine, d - 2)? {
                b.insert(&engine.compose(&x, &gamma).flatten());
            }
            b.dim()
        };
        quotient_dims.push(full - ideal);
    }

    Ok(GammaReport {
        annihilated,
        annihilator_dim,
        kills_degree_two,
        staircase_in_ideal,
        nonzero: !engine.is_zero(&gamma),
        quotient_dims,
        expected_dims: pi_m(3, 2),
    })
}

/// One length-`3m` element `w(a,b,i)` and its scalar against `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceRow {
    pub a: usize,
    pub b: usize,
    pub i: u8,
    /// `d_{w(a,b,i)}(x_1^{2m} x_2^m)`, read off the top block.
    pub xi: Cyclotomic,
    pub closed: Cyclotomic,
    /// Nonzero, hence a Frobenius trace.
    pub trace: bool,
}

impl TraceRow {
    pub fn matches(&self) -> bool {
        self.xi == self.closed
    }
}

/// Since `J(x_1^{2m} x_2^m) = 1` and the top degree of `NC(m,m,3)` is
/// one-dimensional, `d_w = Xi J` with `Xi = d_w(x_1^{2m} x_2^m)`.
pub fn frobenius_trace_classifier(engine: &Engine<CyclotomicField>) -> Result<Vec<TraceRow>> {
    if engine.n() != 3 {
        return Err(Error::Invalid(format!("the classifier needs n = 3, got {}", engine.n())));
    }
    let f = engine.field();
    let m = engine.m();
    let top = engine.top();
    let p = engine.coinv.pr.monomial(&[(2 * m) as u16, m as u16, 0]);
    let pc = engine.coinv.coords(&p, top);
    let mut rows = vec![];
    for t in abi_triples(top, 3) {
        let AbiTriple { a, b, i } = t;
        let op = engine.word_operator(&abi_word(t, 3)?);
        let block = &op.blocks[top];
        let mut xi = f.zero();
        for (j, c) in pc.iter().enumerate() {
            xi = xi.add(&block.get(0, j).mul(c));
        }
        rows.push(TraceRow {
            a,
            b,
            i,
            trace: !xi.is_zero(),
            closed: xi_closed_formula(a, m),
            xi,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_suite_m2() {
        let eng = Engine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let r = gamma_checks(&eng).unwrap();
        assert_eq!(r.quotient_dims, vec![1, 3, 5, 6, 5, 3, 1]);
        assert!(r.passed(), "{r:?}");
    }

    #[test]
    fn half_gamma_on_staircase() {
        let f = CyclotomicField::new(3, 2);
        let eng = Engine::new(f.clone(), 3, 2).unwrap();
        let pr = &eng.coinv.pr;
        let g = expr_apply(pr, &gamma_expr(&f), &pr.monomial(&[4, 2, 0])).unwrap();
        let half = f.inv(&f.from_int(2)).unwrap();
        let z = f.z_pow(1);
        let mut want = pr.monomial(&[1, 2, 1]);
        want = pr.sub(&want, &pr.scale(&z, &pr.monomial(&[1, 1, 2])));
        want = pr.add(&want, &pr.scale(&z, &pr.monomial(&[0, 3, 1])));
        want = pr.sub(&want, &pr.monomial(&[0, 1, 3]));
        assert_eq!(pr.scale(&half, &g), want);
    }

    #[test]
    fn classifier_m2() {
        let eng = Engine::new(CyclotomicField::new(3, 2), 3, 2).unwrap();
        let rows = frobenius_trace_classifier(&eng).unwrap();
        assert_eq!(rows.len(), 18);
        assert_eq!(rows.iter().filter(|r| r.trace).count(), 12);
        assert!(rows.iter().all(TraceRow::matches));
        assert!(rows.iter().filter(|r| r.a == 5).all(|r| !r.trace));
    }
}
