use nilcox::exactnum::{
    cyclotomic_arith, quantum_binomial, quantum_factorial, quantum_int, rat, specialize, CycloOp, CycloResult,
    Cyclotomic, CyclotomicField, Field, FormalRing, FormalScalar, Rational, Ring,
};
use nilcox::Error;
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(0x5eed_0001),
        failure_persistence: None,
        ..Config::default()
    }
}

fn cyclo(conductor: u32, coeffs: &[i64]) -> Cyclotomic {
    let r: Vec<Rational> = coeffs.iter().map(|&c| rat(c, 1)).collect();
    Cyclotomic::from_rationals(conductor, &r)
}

fn arb_cyclo(conductor: u32) -> impl Strategy<Value = Cyclotomic> {
    let len = CyclotomicField::with_conductor(conductor).degree();
    (prop::collection::vec(-5i64..=5, len), 1i64..=4).prop_map(move |(c, d)| {
        let r: Vec<Rational> = c.iter().map(|&x| rat(x, d)).collect();
        Cyclotomic::from_rationals(conductor, &r)
    })
}

fn arb_formal() -> impl Strategy<Value = FormalScalar> {
    prop::collection::vec((-12i64..=12, -4i64..=4), 0..5).prop_map(|terms| {
        terms
            .into_iter()
            .fold(FormalScalar::zero(), |acc, (k, c)| acc.add(&FormalScalar::monomial(rat(c, 1), k)))
    })
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

#[test]
fn xi_has_order_conductor() {
    for conductor in [4u32, 12, 18, 24, 30] {
        let f = CyclotomicField::with_conductor(conductor);
        assert_eq!(f.xi().pow(conductor as u64), f.one());
        for k in 1..conductor {
            assert_ne!(f.xi().pow(k as u64), f.one(), "N = {conductor}, k = {k}");
        }
    }
}

#[test]
fn cyclotomic_polynomial_vanishes_at_xi() {
    // Phi_12(x) = x^4 - x^2 + 1
    assert!(cyclo(12, &[1, 0, -1, 0, 1]).is_zero());
    // Phi_18(x) = x^6 - x^3 + 1
    assert!(cyclo(18, &[1, 0, 0, -1, 0, 0, 1]).is_zero());
}

#[test]
fn zeta_at_n3_m2() {
    let f = CyclotomicField::new(3, 2);
    assert_eq!(f.zeta_pow(1), f.xi().pow(2));
    assert_eq!(f.zeta_pow(6), f.one());
    assert_eq!(f.zeta_pow(3), f.from_int(-1));
    assert_eq!(f.z_pow(1), f.zeta_pow(1));
}

#[test]
fn division_by_zero_and_conductor_mismatch() {
    let f = CyclotomicField::new(3, 2);
    assert!(f.inv(&f.zero()).is_none());
    let a = f.one();
    assert!(matches!(
        cyclotomic_arith(&Cyclotomic::zero(12), &a, CycloOp::Inv),
        Err(Error::DivisionByZero)
    ));
    assert!(matches!(
        cyclotomic_arith(&a, &Cyclotomic::one(18), CycloOp::Add),
        Err(Error::ConductorMismatch(12, 18))
    ));
    assert!(matches!(
        cyclotomic_arith(&a, &a, CycloOp::Mul),
        Ok(CycloResult::Value(_))
    ));
}

#[test]
fn specialization_examples() {
    let f = CyclotomicField::new(3, 2);
    assert_eq!(specialize(&FormalScalar::one(), 3, 2), f.one());
    assert_eq!(specialize(&FormalScalar::z_pow(6), 3, 2), f.one());
    let s = FormalScalar::one().add(&FormalScalar::z_pow(3)).add(&FormalScalar::z_pow(6));
    // zeta^3 = -1, so 1 - 1 + 1
    assert_eq!(specialize(&s, 3, 2), f.one());
}

#[test]
fn quantum_examples() {
    let r = FormalRing;
    for k in 0..6 {
        assert_eq!(quantum_binomial(&r, 3, k, 0), r.one());
    }
    assert_eq!(quantum_binomial(&r, 3, 2, 1), FormalScalar::p_pow(-3).add(&FormalScalar::p_pow(3)));
    assert_eq!(quantum_int(&r, 3, 2), quantum_binomial(&r, 3, 2, 1));
    assert_eq!(quantum_int(&r, 3, -2), quantum_int(&r, 3, 2).neg());
    assert_eq!(quantum_binomial(&r, 3, 4, 5), r.zero());
    assert_eq!(quantum_factorial(&r, 3, 0), r.one());
}

#[test]
fn quantum_two_at_m3_is_one() {
    // [2] = p^3 + p^{-3} = 2 cos(pi/3) after p -> xi_18
    let two = quantum_int(&FormalRing, 3, 2);
    assert_eq!(specialize(&two, 3, 3), CyclotomicField::new(3, 3).one());
}

#[test]
fn display_and_json_roundtrip() {
    let f = CyclotomicField::new(3, 2);
    let a = f.add(&f.xi(), &f.from_rational(&rat(-3, 7)));
    assert_eq!(Cyclotomic::from_json(&a.to_json()).unwrap(), a);
    assert!(!a.to_string().is_empty());
    let s = FormalScalar::monomial(rat(5, 3), -4).add(&FormalScalar::p_pow(2));
    assert_eq!(FormalScalar::from_json(&s.to_json()).unwrap(), s);
}

proptest! {
    #![proptest_config(config(1000))]

    #[test]
    fn field_axioms(a in arb_cyclo(12), b in arb_cyclo(12), c in arb_cyclo(12)) {
        let f = CyclotomicField::new(3, 2);
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.add(&f.add(&a, &b), &c), f.add(&a, &f.add(&b, &c)));
        prop_assert_eq!(f.mul(&f.mul(&a, &b), &c), f.mul(&a, &f.mul(&b, &c)));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert_eq!(f.sub(&a, &a), f.zero());
        prop_assert_eq!(f.mul(&a, &f.one()), a.clone());
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn conjugation_is_a_ring_automorphism(a in arb_cyclo(18), b in arb_cyclo(18)) {
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.conj().conj(), a.clone());
        // |a|^2 is real
        let n = a.mul(&a.conj());
        prop_assert_eq!(n.conj(), n);
    }

    #[test]
    fn specialize_is_a_homomorphism(a in arb_formal(), b in arb_formal(), m in 2usize..=5) {
        let f = CyclotomicField::new(3, m);
        prop_assert_eq!(specialize(&a.add(&b), 3, m), f.add(&specialize(&a, 3, m), &specialize(&b, 3, m)));
        prop_assert_eq!(specialize(&a.mul(&b), 3, m), f.mul(&specialize(&a, 3, m), &specialize(&b, 3, m)));
        prop_assert_eq!(specialize(&a.conj(), 3, m), specialize(&a, 3, m).conj());
    }
}

proptest! {
    #![proptest_config(config(200))]

    #[test]
    fn binomial_at_p_one_is_ordinary(k in 0i64..=10, c in 0i64..=10, n in 2usize..=4) {
        let q = quantum_binomial(&FormalRing, n, k, c).eval_at_one();
        let want = if c > k { BigInt::from(0) } else { binomial(k as u64, c as u64) };
        prop_assert_eq!(q, Rational::from_integer(want));
    }

    #[test]
    fn q_chu_vandermonde(mm in 0i64..=6, nn in 0i64..=6, beta in 0i64..=6) {
        // [M+N choose beta] = sum_j q^{Mj - N(beta-j)} [M choose beta-j] [N choose j]
        let r = FormalRing;
        let n = 3;
        let mut sum = r.zero();
        for j in 0..=beta {
            let t = r.mul(&quantum_binomial(&r, n, mm, beta - j), &quantum_binomial(&r, n, nn, j));
            r.add_assign(&mut sum, &r.mul(&r.q_pow(n, mm * j - nn * (beta - j)), &t));
        }
        prop_assert_eq!(sum, quantum_binomial(&r, n, mm + nn, beta));
    }
}

#[test]
fn factorial_product_is_m_times_a_fourth_root_of_unity() {
    // (q - q^{-1})^{m-1} [m-1]! = prod_{k<m} (q^k - q^{-k}), with q a primitive 2m-th root
    let r = FormalRing;
    for m in 2..=8usize {
        for n in [2usize, 3, 4] {
            let diff = r.sub(&r.q_pow(n, 1), &r.q_pow(n, -1));
            let lhs = r.mul(&r.pow(&diff, m as u64 - 1), &quantum_factorial(&r, n, m as u32 - 1));
            let f = CyclotomicField::new(n, m);
            let v = specialize(&lhs, n, m);
            let unit = f.div(&v, &f.from_int(m as i64)).unwrap();
            assert_eq!(unit.pow(4), f.one(), "n = {n}, m = {m}");
        }
    }
}
