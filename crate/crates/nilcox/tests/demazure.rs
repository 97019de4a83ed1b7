use nilcox::affine::{abi_triples, abi_word, cyclic_word, is_reduced, Anchor, Direction, Word};
use nilcox::demazure::{
    demazure_apply, expr_apply, s_apply, theta, theta_right, word_apply, xi_bruteforce, xi_closed_formula,
    xi_formal_case_check, FormalCaseStatus, OperatorExpr,
};
use nilcox::exactnum::{rat, Cyclotomic, CyclotomicField, FormalRing, FormalScalar, Ring};
use nilcox::poly::{monomials_of_degree, Monomial, Poly, PolyRing};
use nilcox::refrep::{sigma_poly, tau_poly};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

const CW: Direction = Direction::Clockwise;
const WS: Direction = Direction::Widdershins;

fn config(seed: u64) -> Config {
    Config {
        cases: 1000,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn fz(k: i64) -> FormalScalar {
    FormalScalar::z_pow(k)
}

fn monomials_up_to(n: usize, d: usize) -> impl Iterator<Item = Monomial> {
    (0..=d).flat_map(move |k| monomials_of_degree(n, k))
}

/// `e1` and `e2` agree on every monomial of degree at most `max_deg`.
fn same_operator<R: Ring>(
    pr: &PolyRing<R>,
    e1: &OperatorExpr<R::Elem>,
    e2: &OperatorExpr<R::Elem>,
    degrees: std::ops::RangeInclusive<usize>,
) -> bool {
    degrees.flat_map(|d| monomials_of_degree(pr.n, d)).all(|mono| {
        let f = pr.term(mono, pr.ring.one());
        expr_apply(pr, e1, &f).unwrap() == expr_apply(pr, e2, &f).unwrap()
    })
}

fn poly_from_terms(pr: &PolyRing<FormalRing>, terms: &[(Vec<u16>, i64, i64)]) -> Poly<FormalScalar> {
    let mut f = pr.zero();
    for (exps, c, k) in terms {
        pr.add_term(&mut f, Monomial::from_exps(exps), &FormalScalar::monomial(rat(*c, 1), *k));
    }
    f
}

fn arb_poly(n: usize, max_exp: u16) -> impl Strategy<Value = Vec<(Vec<u16>, i64, i64)>> {
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -3i64..=3, -4i64..=4), 1..5)
}

#[test]
fn single_operator_examples() {
    let pr = PolyRing::new(FormalRing, 3);
    for i in 0..3u8 {
        let (a, b) = nilcox::refrep::reflection_vars(i, 3);
        assert_eq!(demazure_apply(&pr, i, &pr.var(a)).unwrap(), pr.one());
        assert_eq!(demazure_apply(&pr, i, &pr.var(b)).unwrap(), pr.constant(fz(-1).neg()));
        assert!(demazure_apply(&pr, i, &pr.mul(&pr.var(a), &pr.var(b))).unwrap().is_zero());
        let cube = pr.pow(&pr.var(a), 3);
        let want = pr.sum(&[
            pr.pow(&pr.var(a), 2),
            pr.scale(&fz(1), &pr.mul(&pr.var(a), &pr.var(b))),
            pr.scale(&fz(2), &pr.pow(&pr.var(b), 2)),
        ]);
        assert_eq!(demazure_apply(&pr, i, &cube).unwrap(), want);
        // d_i(x_{i+1}^3) = -z^{-3} d_i(x_i^3)
        assert_eq!(
            demazure_apply(&pr, i, &pr.pow(&pr.var(b), 3)).unwrap(),
            pr.scale(&fz(-3).neg(), &want)
        );
    }
}

#[test]
fn hexagon_example() {
    let pr = PolyRing::new(FormalRing, 3);
    let f = pr.monomial(&[2, 1, 0]);
    assert_eq!(word_apply(&pr, &Word(vec![1, 2, 1]), &f).unwrap(), pr.one());
    assert_eq!(word_apply(&pr, &Word(vec![2, 1, 2]), &f).unwrap(), pr.constant(fz(1)));
    assert!(expr_apply(&pr, &OperatorExpr::zero(), &f).unwrap().is_zero());
}

#[test]
fn nil_quadratic_and_unbalanced_braid_on_monomials() {
    for n in [3usize, 4] {
        let pr = PolyRing::new(FormalRing, n);
        let max = if n == 3 { 8 } else { 6 };
        for mono in monomials_up_to(n, max) {
            let f = pr.term(mono, FormalScalar::one());
            for i in 0..n as u8 {
                let j = (i + 1) % n as u8;
                assert!(word_apply(&pr, &Word(vec![i, i]), &f).unwrap().is_zero());
                let lhs = pr.scale(&fz(1), &word_apply(&pr, &Word(vec![i, j, i]), &f).unwrap());
                assert_eq!(lhs, word_apply(&pr, &Word(vec![j, i, j]), &f).unwrap());
            }
        }
    }
}

#[test]
fn distant_letters_commute() {
    let pr = PolyRing::new(FormalRing, 4);
    for mono in monomials_up_to(4, 5) {
        let f = pr.term(mono, FormalScalar::one());
        for (i, j) in [(0u8, 2u8), (1, 3)] {
            assert_eq!(
                word_apply(&pr, &Word(vec![i, j]), &f).unwrap(),
                word_apply(&pr, &Word(vec![j, i]), &f).unwrap()
            );
        }
    }
}

#[test]
fn theta_examples() {
    let r = FormalRing;
    let t1 = theta(&r, 3, 1, 1, CW);
    assert_eq!(
        t1.terms,
        vec![(fz(0), Word(vec![1, 2])), (fz(-1), Word(vec![0, 1])), (fz(-2), Word(vec![2, 0]))]
    );
    assert_eq!(theta_right(&r, 3, 2, 1, CW), t1);
    let t2 = theta(&r, 3, 1, 2, CW);
    let words: Vec<Word> = t2.terms.iter().map(|(_, w)| w.clone()).collect();
    assert_eq!(
        words,
        vec![
            Word::from_ints(&[1, 2, 3, 1], 3),
            Word::from_ints(&[3, 1, 2, 3], 3),
            Word::from_ints(&[2, 3, 1, 2], 3)
        ]
    );
    assert_eq!(t2.terms.iter().map(|(c, _)| c.clone()).collect::<Vec<_>>(), vec![fz(0), fz(-2), fz(-4)]);
    let tb = theta(&r, 3, 1, 3, WS);
    assert_eq!(
        tb.terms,
        vec![
            (fz(0), Word::from_ints(&[1, 3, 2, 1, 3, 2], 3)),
            (fz(3), Word::from_ints(&[2, 1, 3, 2, 1, 3], 3)),
            (fz(6), Word::from_ints(&[3, 2, 1, 3, 2, 1], 3)),
        ]
    );
}

#[test]
fn roundabout_vanishes_on_low_degree_monomials() {
    for (n, m) in [(3usize, 2usize), (3, 3), (4, 2)] {
        let f = CyclotomicField::new(n, m);
        let pr = PolyRing::new(f.clone(), n);
        let d = m * (n - 1);
        let top = if n == 3 { d + 3 } else { d + 1 };
        for i in 0..n as i64 {
            for dir in [CW, WS] {
                let t = theta(&f, n, i, m, dir);
                for mono in (d..=top).flat_map(|k| monomials_of_degree(n, k)) {
                    let g = expr_apply(&pr, &t, &pr.term(mono.clone(), f.one())).unwrap();
                    assert!(g.is_zero(), "n = {n}, m = {m}, i = {i}, {dir:?}, {mono:?}");
                }
            }
        }
    }
}

#[test]
fn the_six_cyclic_words_of_length_six_vanish_at_m2() {
    let f = CyclotomicField::new(3, 2);
    let pr = PolyRing::new(f.clone(), 3);
    for s in ["stustu", "sutsut", "tsutsu", "tustus", "ustust", "utsuts"] {
        let w = Word::parse(s, 3).unwrap();
        for mono in monomials_of_degree(3, 6) {
            assert!(word_apply(&pr, &w, &pr.term(mono, f.one())).unwrap().is_zero(), "{s}");
        }
    }
}

#[test]
fn long_cyclic_words_vanish() {
    for (n, m) in [(3usize, 3usize), (4, 2)] {
        let f = CyclotomicField::new(n, m);
        let pr = PolyRing::new(f.clone(), n);
        let len = (m + 1) * (n - 1);
        let monos = monomials_of_degree(n, len);
        for i in 0..n as i64 {
            for dir in [CW, WS] {
                let w = cyclic_word(i, len, dir, Anchor::Left, n);
                for mono in monos.iter().step_by(if n == 4 { 5 } else { 1 }) {
                    let g = word_apply(&pr, &w, &pr.term(mono.clone(), f.one())).unwrap();
                    assert!(g.is_zero(), "n = {n}, m = {m}, {w}");
                }
            }
        }
    }
}

#[test]
fn theta_composition_on_monomials() {
    let r = FormalRing;
    for (n, k, l, slack) in [(3usize, 1usize, 1usize, 3usize), (3, 1, 2, 2), (3, 2, 1, 2), (4, 1, 1, 1)] {
        let pr = PolyRing::new(r, n);
        for i in 0..n as i64 {
            let j = i + (k * (n - 1)) as i64 - 1;
            let lhs = theta(&r, n, i, k, CW).compose(&r, &theta(&r, n, j + 1, l, CW));
            let rhs = theta(&r, n, i, k + l, CW);
            let d = (k + l) * (n - 1);
            assert!(same_operator(&pr, &lhs, &rhs, d..=d + slack), "n = {n}, k = {k}, l = {l}, i = {i}");
        }
    }
}

#[test]
fn formal_case_edges() {
    let rep = xi_formal_case_check(2, 1, 1, 0).unwrap();
    assert_eq!(rep.status, FormalCaseStatus::OutOfScope);
    assert!(xi_formal_case_check(2, 1, 1, 2).unwrap().passed());
    for a in [2usize, 4] {
        for b in [1usize, 3] {
            for k in 1..=a + b {
                let rep = xi_formal_case_check(a, b, 0, k).unwrap();
                assert!(rep.passed(), "({a},{b},{k}): {:?}", rep.status);
                if let FormalCaseStatus::Unit { sign, .. } = rep.status {
                    assert!(sign == 1 || sign == -1);
                }
            }
        }
    }
}

#[test]
fn xi_support_and_independence_of_i() {
    for m in 2..=4usize {
        let f = CyclotomicField::new(3, m);
        let pr = PolyRing::new(f.clone(), 3);
        for a in 0..3 * m {
            let b = 3 * m - 1 - a;
            let vals: Vec<Cyclotomic> = (0..3u8).map(|i| xi_bruteforce(&pr, a, b, i, 2 * m).unwrap()).collect();
            assert!(vals.iter().all(|v| *v == vals[0]), "m = {m}, a = {a}");
            let inside = a + 1 >= m && a <= 2 * m;
            assert_eq!(!vals[0].is_zero(), inside, "m = {m}, a = {a}");
            assert_eq!(vals[0], xi_closed_formula(a, m));
        }
    }
    let pr = PolyRing::new(FormalRing, 3);
    assert!(xi_bruteforce(&pr, 1, 1, 0, 4).is_err());
}

#[test]
fn operator_json_round_trip() {
    let r = FormalRing;
    let t = theta(&r, 3, 2, 2, WS);
    let v = t.to_json(|c| c.to_json());
    let back = OperatorExpr::from_json(&v, 3, FormalScalar::from_json).unwrap();
    assert_eq!(back, t);
}

proptest! {
    #![proptest_config(config(0x5eed_0004))]

    #[test]
    fn invariant_factor_passes_through(t in 0usize..12, g in arb_poly(3, 3)) {
        // d_w(x1 x2 x3 g) = x1 x2 x3 d_w(g)
        let pr = PolyRing::new(FormalRing, 3);
        let triples: Vec<_> = (1..=4).flat_map(|d| abi_triples(d, 3)).collect();
        let w = abi_word(triples[t % triples.len()], 3).unwrap();
        let g = poly_from_terms(&pr, &g);
        let a = pr.monomial(&[1, 1, 1]);
        let lhs = word_apply(&pr, &w, &pr.mul(&a, &g)).unwrap();
        prop_assert_eq!(&lhs, &pr.mul(&a, &word_apply(&pr, &w, &g).unwrap()));
        if g.degree().unwrap_or(0) < w.len() && g.is_homogeneous() {
            prop_assert!(word_apply(&pr, &w, &g).unwrap().is_zero());
        }
    }

    #[test]
    fn theta_rotation_example(f in arb_poly(3, 2)) {
        // Theta_{2_R}(x_3 f) = x_1 Theta_{1_R}(f)
        let r = FormalRing;
        let pr = PolyRing::new(r, 3);
        let f = poly_from_terms(&pr, &f);
        let lhs = expr_apply(&pr, &theta_right(&r, 3, 2, 1, CW), &pr.mul(&pr.var(2), &f)).unwrap();
        let rhs = pr.mul(&pr.var(0), &expr_apply(&pr, &theta_right(&r, 3, 1, 1, CW), &f).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn rotation_covariance_at_root_of_unity(m in 2usize..=3, j in 0i64..3, k in 0usize..3, seed in arb_poly(3, 3)) {
        // Theta^{(m)}_{j_R}(x_k f) = zeta^m x_{k+m} Theta^{(m)}_{j_R}(f)
        let field = CyclotomicField::new(3, m);
        let pr = PolyRing::new(field.clone(), 3);
        let mut f = pr.zero();
        for (exps, c, e) in &seed {
            let coeff = field.mul(&field.from_int(*c), &field.zeta_pow(*e));
            pr.add_term(&mut f, Monomial::from_exps(exps), &coeff);
        }
        let t = theta_right(&field, 3, j, m, CW);
        let lhs = expr_apply(&pr, &t, &pr.mul(&pr.var(k), &f)).unwrap();
        let omega_xk = pr.scale(&field.zeta_pow(m as i64), &pr.var((k + m) % 3));
        prop_assert_eq!(lhs, pr.mul(&omega_xk, &expr_apply(&pr, &t, &f).unwrap()));
    }

    #[test]
    fn sigma_and_tau_intertwine(i in 0u8..3, f in arb_poly(3, 3)) {
        let r = FormalRing;
        let pr = PolyRing::new(r, 3);
        let f = poly_from_terms(&pr, &f);
        let d = demazure_apply(&pr, i, &f).unwrap();
        prop_assert_eq!(sigma_poly(&pr, &d), demazure_apply(&pr, (i + 1) % 3, &sigma_poly(&pr, &f)).unwrap());
        let mi = (3 - i) % 3;
        let rhs = pr.scale(&fz(1).neg(), &demazure_apply(&pr, mi, &tau_poly(&pr, &f)).unwrap());
        prop_assert_eq!(tau_poly(&pr, &d), rhs);
    }

    #[test]
    fn twisted_leibniz(i in 0u8..3, f in arb_poly(3, 2), g in arb_poly(3, 2)) {
        let pr = PolyRing::new(FormalRing, 3);
        let (f, g) = (poly_from_terms(&pr, &f), poly_from_terms(&pr, &g));
        let lhs = demazure_apply(&pr, i, &pr.mul(&f, &g)).unwrap();
        let rhs = pr.add(
            &pr.mul(&demazure_apply(&pr, i, &f).unwrap(), &g),
            &pr.mul(&s_apply(&pr, i, &f), &demazure_apply(&pr, i, &g).unwrap()),
        );
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn images_are_s_invariant(i in 0u8..3, f in arb_poly(3, 4)) {
        let pr = PolyRing::new(FormalRing, 3);
        let d = demazure_apply(&pr, i, &poly_from_terms(&pr, &f)).unwrap();
        prop_assert_eq!(s_apply(&pr, i, &d), d);
    }

    #[test]
    fn non_reduced_words_act_by_zero(w in prop::collection::vec(0u8..3, 2..7), f in arb_poly(3, 3)) {
        let w = Word(w);
        prop_assume!(!is_reduced(&w, 3));
        let pr = PolyRing::new(FormalRing, 3);
        prop_assert!(word_apply(&pr, &w, &poly_from_terms(&pr, &f)).unwrap().is_zero());
    }
}
