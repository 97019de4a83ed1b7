//! Named verification suites shared by the command line and the test
//! targets. Each suite returns a report of individual checks; randomized
//! checks draw from a ChaCha generator seeded by the caller, so a seed
//! reproduces the exact sequence of cases.

use std::fmt::Display;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::affine::{
    coxeter_length, cyclic_word, enumerate_elements, reduced_words, word_to_perm, Anchor, Direction,
    Word,
};
use crate::algebra::{frobenius_trace_classifier, gamma_checks, Engine};
use crate::coinv::{frobenius_pairing, staircase, AntisymVariant, TraceEngine};
use crate::demazure::{demazure_apply, expr_apply, s_apply, theta, theta_right, word_apply, xi_bruteforce, xi_closed_formula};
use crate::error::Result;
use crate::exactnum::{Cyclotomic, CyclotomicField, FormalRing, Ring};
use crate::linalg::determinant;
use crate::poly::{Monomial, Poly, PolyRing};
use crate::refrep::{
    apply_matrix, braid_scalar_exponent, delta, root_counting_length, sigma_poly, simple_reflection_matrix, tau_poly,
    word_matrix,
};

pub const DEFAULT_SEED: u64 = 20_240_229;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    /// Empty on success; otherwise the first counterexample.
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn new(suite: &str) -> Self {
        SuiteReport {
            suite: suite.to_string(),
            checks: vec![],
        }
    }

    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail: if passed { String::new() } else { detail.into() },
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite,
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "name": c.name, "passed": c.passed, "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{mark} {}: {}", self.suite, c.name));
            if !c.passed {
                out.push_str(&format!(" -- {}", c.detail));
            }
            out.push('\n');
        }
        out
    }
}

/// Records the first failing case of a randomized check.
struct Tally {
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { failure: None }
    }

    fn record(&mut self, ok: bool, case: impl FnOnce() -> String) {
        if !ok && self.failure.is_none() {
            self.failure = Some(case());
        }
    }

    fn finish(self, report: &mut SuiteReport, name: &str) {
        let passed = self.failure.is_none();
        report.push(name, passed, self.failure.unwrap_or_default());
    }
}

fn show<R: Ring>(pr: &PolyRing<R>, f: &Poly<R::Elem>) -> String
where
    R::Elem: Display,
{
    pr.render(f, |c| c.to_string())
}

fn random_monomial(rng: &mut ChaCha8Rng, n: usize, d: usize) -> Monomial {
    let mut e = vec![0u16; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exps(&e)
}

/// A sum of `1..=max_terms` terms of degrees in `lo..=hi`, with coefficients
/// `+-c z^k`, `1 <= c <= 3`, `|k| <= 2`.
fn random_poly<R: Ring>(pr: &PolyRing<R>, rng: &mut ChaCha8Rng, lo: usize, hi: usize, max_terms: usize) -> Poly<R::Elem> {
    let ring = &pr.ring;
    let mut f = pr.zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let d = rng.gen_range(lo..=hi);
        let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        let c = ring.mul(&ring.from_int(c), &ring.z_pow(rng.gen_range(-2..=2)));
        pr.add_term(&mut f, random_monomial(rng, pr.n, d), &c);
    }
    f
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| rng.gen_range(0..n as u8)).collect())
}

fn dir_name(dir: Direction) -> &'static str {
    match dir {
        Direction::Clockwise => "clockwise",
        Direction::Widdershins => "widdershins",
    }
}

const DIRECTIONS: [Direction; 2] = [Direction::Clockwise, Direction::Widdershins];

/// `Theta^{(m)}` and `bar-Theta^{(m)}` vanish at the root of unity, as block
/// matrices on the coinvariant algebra and on random polynomials; cyclic
/// words of length `(m+1)(n-1)` vanish as well.
pub fn roundabout_suite(n: usize, m: usize, samples: usize, seed: u64) -> Result<SuiteReport> {
    let field = CyclotomicField::new(n, m);
    let engine = Engine::new(field.clone(), n, m)?;
    let pr = &engine.coinv.pr;
    let mut report = SuiteReport::new("roundabout");
    let d = m * (n - 1);

    let mut bad = vec![];
    for i in 0..n as i64 {
        for dir in DIRECTIONS {
            if !engine.is_zero(&engine.expr_operator(&theta(&field, n, i, m, dir))) {
                bad.push(format!("i = {i} {}", dir_name(dir)));
            }
        }
    }
    report.push(
        format!("Theta^({m}) is the zero operator on C (n = {n})"),
        bad.is_empty(),
        bad.join(", "),
    );

    let long = (m + 1) * (n - 1);
    if long <= engine.top() {
        let mut bad = vec![];
        for i in 0..n as i64 {
            for dir in DIRECTIONS {
                let w = cyclic_word(i, long, dir, Anchor::Left, n);
                if !engine.is_zero(&engine.word_operator(&w)) {
                    bad.push(w.to_string());
                }
            }
        }
        report.push(format!("cyclic words of length {long} vanish"), bad.is_empty(), bad.join("; "));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tally = Tally::new();
    for _ in 0..samples {
        let i = rng.gen_range(0..n as i64);
        let dir = DIRECTIONS[rng.gen_range(0..2)];
        let f = random_poly(pr, &mut rng, d, d + 3, 2);
        let g = expr_apply(pr, &theta(&field, n, i, m, dir), &f)?;
        tally.record(g.is_zero(), || format!("i = {i} {} f = {}", dir_name(dir), show(pr, &f)));
    }
    tally.finish(&mut report, &format!("Theta^({m}) kills {samples} random polynomials"));
    Ok(report)
}

/// `J(P) = 1` for the staircase `P`, and the pairing of the two monomial
/// bases has nonzero determinant.
pub fn frobenius_suite(n: usize, m: usize) -> Result<SuiteReport> {
    let engine = TraceEngine::new(CyclotomicField::new(n, m), n, m)?;
    let pr = &engine.pr;
    let mut report = SuiteReport::new("frobenius");
    let p = pr.term(staircase(n, m), pr.ring.one());
    let jp = engine.j_operator(&p)?;
    report.push("J(P) = 1", jp == pr.one(), format!("J(P) = {}", show(pr, &jp)));
    let fp = frobenius_pairing(&engine)?;
    let det = determinant(&pr.ring, &fp.matrix);
    report.push(
        format!("pairing determinant is nonzero ({}x{})", fp.matrix.rows, fp.matrix.cols),
        !det.is_zero(),
        "determinant is zero",
    );
    Ok(report)
}

/// The closed formula for `Xi_m(a, i)` against direct evaluation of
/// `d_{w(a,b,i)}(x_1^{2m} x_2^m)` for every `a` and `i`, and the support
/// `m - 1 <= a <= 2m`.
pub fn xi_suite(m: usize) -> Result<SuiteReport> {
    let field = CyclotomicField::new(3, m);
    let pr = PolyRing::new(field, 3);
    let mut report = SuiteReport::new("xi");
    let mut mismatches = vec![];
    let mut support = vec![];
    for a in 0..3 * m {
        let b = 3 * m - 1 - a;
        let closed = xi_closed_formula(a, m);
        for i in 0..3u8 {
            let brute = xi_bruteforce(&pr, a, b, i, 2 * m)?;
            if brute != closed {
                mismatches.push(format!("(a, i) = ({a}, {i}): brute {brute}, closed {closed}"));
            }
            let inside = a + 1 >= m && a <= 2 * m;
            if brute.is_zero() == inside {
                support.push(format!("(a, i) = ({a}, {i})"));
            }
        }
    }
    report.push(format!("closed formula equals brute force (m = {m})"), mismatches.is_empty(), mismatches.join("; "));
    report.push("nonzero exactly when a, b <= 2m", support.is_empty(), support.join("; "));
    Ok(report)
}

/// The five properties of `gamma` in `NC(2,2,3)`.
pub fn gamma_suite() -> Result<SuiteReport> {
    let engine = Engine::new(CyclotomicField::new(3, 2), 3, 2)?;
    let r = gamma_checks(&engine)?;
    let mut report = SuiteReport::new("gamma");
    report.push("killed on both sides by degree 4", r.annihilated, "some product is nonzero");
    report.push(
        "unique up to scalar",
        r.annihilator_dim == 1,
        format!("annihilator dimension {}", r.annihilator_dim),
    );
    report.push("kills degree-2 polynomials", r.kills_degree_two, "nonzero on a degree-2 monomial");
    report.push("gamma(x1^4 x2^2) in (R^W_+)", r.staircase_in_ideal, "not in the ideal");
    report.push("gamma is nonzero", r.nonzero, "gamma vanishes");
    report.push(
        "NC / NC gamma has the graded dimension of C",
        r.quotient_dims == r.expected_dims,
        format!("{:?} vs {:?}", r.quotient_dims, r.expected_dims),
    );
    Ok(report)
}

/// For every element of length at most `max_len`, each reduced word gives
/// the operator of a fixed reduced word times the predicted power of `z`.
pub fn braid_suite(n: usize, m: usize, max_len: usize) -> Result<SuiteReport> {
    let field = CyclotomicField::new(n, m);
    let engine = Engine::new(field.clone(), n, m)?;
    let mut report = SuiteReport::new("braid");
    let mut bad = vec![];
    let mut compared = 0;
    for layer in enumerate_elements(n, max_len.min(engine.top())) {
        for (g, w0) in layer {
            let base = engine.word_operator(&w0);
            for w in reduced_words(&g) {
                if w == w0 {
                    continue;
                }
                let e = braid_scalar_exponent(&w, &w0, n)?;
                let predicted = engine.combine(&[(field.z_pow(e), &base)], base.deg);
                compared += 1;
                if engine.word_operator(&w) != predicted {
                    bad.push(format!("{w} vs {w0}"));
                }
            }
        }
    }
    report.push(
        format!("{compared} reduced-word pairs agree up to z^e (length <= {max_len})"),
        bad.is_empty(),
        bad.join("; "),
    );
    Ok(report)
}

/// `|x|^2 = x conj(x)`, exactly.
fn abs2(x: &Cyclotomic) -> Cyclotomic {
    x.mul(&x.conj())
}

/// Top-degree scalars `Xi_m(a, i)` at `n = 3`: agreement with the closed
/// formula, independence of `i`, vanishing at `a = 2m + 1`, and the ratios of
/// squared magnitudes, which must be exactly `{1, |[2]|^2}` with
/// `[2] = 1 + zeta^m` (up to a unit) when `m = 3`.
pub fn trace_pattern_suite(m: usize) -> Result<SuiteReport> {
    let field = CyclotomicField::new(3, m);
    let engine = Engine::new(field.clone(), 3, m)?;
    let rows = frobenius_trace_classifier(&engine)?;
    let mut report = SuiteReport::new("trace-pattern");

    let bad: Vec<String> = rows
        .iter()
        .filter(|r| !r.matches())
        .map(|r| format!("w({},{},{})", r.a, r.b, r.i))
        .collect();
    report.push("operator scalars equal the closed formula", bad.is_empty(), bad.join(", "));

    let mut varying = vec![];
    for a in 0..3 * m {
        let vals: Vec<_> = rows.iter().filter(|r| r.a == a).map(|r| &r.xi).collect();
        if vals.windows(2).any(|p| p[0] != p[1]) {
            varying.push(a.to_string());
        }
    }
    report.push("scalars are independent of i", varying.is_empty(), format!("a = {}", varying.join(", ")));

    let edge = rows.iter().filter(|r| r.a == 2 * m + 1).all(|r| !r.trace);
    report.push(format!("a = {} gives no trace", 2 * m + 1), edge, "nonzero scalar");

    if m == 3 {
        let mags: Vec<Cyclotomic> = rows.iter().filter(|r| r.trace).map(|r| abs2(&r.xi)).collect();
        let target = {
            let two = field.one().add(&field.zeta_pow(3));
            let mut t = vec![field.one(), abs2(&two)];
            t.dedup();
            t
        };
        let realized = mags.iter().any(|s0| {
            let inv = s0.inv().expect("nonzero");
            let mut ratios: Vec<Cyclotomic> = mags.iter().map(|s| s.mul(&inv)).collect();
            ratios.sort_by_key(|c| c.to_string());
            ratios.dedup();
            let mut t = target.clone();
            t.sort_by_key(|c| c.to_string());
            ratios == t
        });
        report.push(
            format!("{} traces with |Xi|^2 ratios exactly {{1, |1+zeta^3|^2}}", mags.len()),
            realized,
            "ratio set differs",
        );
    }
    Ok(report)
}

/// Identities of Demazure operators in the generic ring, and of `Delta`,
/// antisymmetrization and root counting at roots of unity, each over
/// `samples` seeded random cases.
pub fn identity_suite(samples: usize, seed: u64) -> Result<SuiteReport> {
    let mut report = SuiteReport::new("identities");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ring = FormalRing;
    let prs = [PolyRing::new(ring, 3), PolyRing::new(ring, 4)];
    let pick = |rng: &mut ChaCha8Rng| &prs[rng.gen_range(0..2)];

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let i = rng.gen_range(0..pr.n as u8);
        let f = random_poly(pr, &mut rng, 0, 6, 3);
        let g = demazure_apply(pr, i, &demazure_apply(pr, i, &f)?)?;
        t.record(g.is_zero(), || format!("n = {} i = {i} f = {}", pr.n, show(pr, &f)));
    }
    t.finish(&mut report, "nil-quadratic d_i d_i = 0");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let i = rng.gen_range(0..pr.n as u8);
        let f = random_poly(pr, &mut rng, 0, 4, 3);
        let g = random_poly(pr, &mut rng, 0, 4, 3);
        let lhs = demazure_apply(pr, i, &pr.mul(&f, &g))?;
        let rhs = pr.add(
            &pr.mul(&demazure_apply(pr, i, &f)?, &g),
            &pr.mul(&s_apply(pr, i, &f), &demazure_apply(pr, i, &g)?),
        );
        t.record(lhs == rhs, || format!("n = {} i = {i} f = {} g = {}", pr.n, show(pr, &f), show(pr, &g)));
    }
    t.finish(&mut report, "twisted Leibniz d_i(fg) = d_i(f) g + s_i(f) d_i(g)");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let n = pr.n as u8;
        let i = rng.gen_range(0..n);
        let j = (i + 1) % n;
        let f = random_poly(pr, &mut rng, 3, 8, 3);
        let lhs = pr.scale(&ring.z_pow(1), &word_apply(pr, &Word(vec![i, j, i]), &f)?);
        let rhs = word_apply(pr, &Word(vec![j, i, j]), &f)?;
        t.record(lhs == rhs, || format!("n = {n} i = {i} f = {}", show(pr, &f)));
    }
    t.finish(&mut report, "unbalanced braid z d_i d_{i+1} d_i = d_{i+1} d_i d_{i+1}");

    let mut t = Tally::new();
    let pr4 = &prs[1];
    for _ in 0..samples {
        let i = rng.gen_range(0..4u8);
        let j = (i + 2) % 4;
        let f = random_poly(pr4, &mut rng, 2, 6, 3);
        let lhs = word_apply(pr4, &Word(vec![i, j]), &f)?;
        let rhs = word_apply(pr4, &Word(vec![j, i]), &f)?;
        t.record(lhs == rhs, || format!("i = {i} f = {}", show(pr4, &f)));
    }
    t.finish(&mut report, "distant commutation (n = 4)");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let n = pr.n;
        let k = if n == 3 { rng.gen_range(1..=2) } else { 1 };
        let d = k * (n - 1);
        let j = rng.gen_range(0..n as i64);
        let i = j - d as i64 + 1;
        let var = |t: i64| (t - 1).rem_euclid(n as i64) as usize;
        let f = random_poly(pr, &mut rng, d.saturating_sub(1), d + 2, 2);
        let lhs = expr_apply(pr, &theta_right(&ring, n, j, k, Direction::Clockwise), &pr.mul(&pr.var(var(j + 1)), &f))?;
        let rhs = pr.mul(
            &pr.var(var(i)),
            &expr_apply(pr, &theta_right(&ring, n, j - 1, k, Direction::Clockwise), &f)?,
        );
        t.record(lhs == rhs, || format!("n = {n} k = {k} j = {j} f = {}", show(pr, &f)));
    }
    t.finish(&mut report, "Theta rotation Theta_{j_R}(x_{j+1} f) = x_i Theta_{(j-1)_R}(f)");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let n = pr.n;
        let (k, l) = if n == 3 { (rng.gen_range(1..=2), 1) } else { (1, 1) };
        let i = rng.gen_range(0..n as i64);
        let j = i + (k * (n - 1)) as i64 - 1;
        let lhs = theta_right(&ring, n, j, k, Direction::Clockwise).compose(&ring, &theta(&ring, n, j + 1, l, Direction::Clockwise));
        let rhs = theta(&ring, n, i, k + l, Direction::Clockwise);
        let d = (k + l) * (n - 1);
        let f = random_poly(pr, &mut rng, d, d + 3, 2);
        let ok = expr_apply(pr, &lhs, &f)? == expr_apply(pr, &rhs, &f)?;
        t.record(ok, || format!("n = {n} k = {k} l = {l} i = {i} f = {}", show(pr, &f)));
    }
    t.finish(&mut report, "Theta composition Theta^(k)_{j_R} Theta^(l)_{(j+1)_L} = Theta^(k+l)_{i_L}");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let n = pr.n as u8;
        let i = rng.gen_range(0..n);
        let f = random_poly(pr, &mut rng, 0, 6, 3);
        let lhs = sigma_poly(pr, &demazure_apply(pr, i, &f)?);
        let rhs = demazure_apply(pr, (i + 1) % n, &sigma_poly(pr, &f))?;
        t.record(lhs == rhs, || format!("n = {n} i = {i} f = {}", show(pr, &f)));
    }
    t.finish(&mut report, "sigma d_i = d_{i+1} sigma");

    let mut t = Tally::new();
    for _ in 0..samples {
        let pr = pick(&mut rng);
        let n = pr.n as u8;
        let i = rng.gen_range(0..n);
        let f = random_poly(pr, &mut rng, 0, 6, 3);
        let lhs = tau_poly(pr, &demazure_apply(pr, i, &f)?);
        let mz = ring.neg(&ring.z_pow(1));
        let rhs = pr.scale(&mz, &demazure_apply(pr, (n - i) % n, &tau_poly(pr, &f))?);
        t.record(lhs == rhs, || format!("n = {n} i = {i} f = {}", show(pr, &f)));
    }
    t.finish(&mut report, "tau d_i = (-z) d_{-i} tau");

    delta_checks(&mut report, &mut rng, samples)?;
    antisymmetrization_checks(&mut report, &mut rng, samples)?;
    root_counting_checks(&mut report, &mut rng, samples);
    Ok(report)
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}

fn delta_checks(report: &mut SuiteReport, rng: &mut ChaCha8Rng, samples: usize) -> Result<()> {
    let cases = [(2usize, 2usize), (3, 2), (3, 3), (4, 2)];
    let mut sym = vec![];
    for (n, m) in cases {
        let field = CyclotomicField::new(n, m);
        let pr = PolyRing::new(field.clone(), n);
        let d = delta(&pr, m);
        if sigma_poly(&pr, &d) != d {
            sym.push(format!("sigma, (n, m) = ({n}, {m})"));
        }
        let sign = if binom(n, 2) % 2 == 0 { 1 } else { -1 };
        let c = field.mul(&field.from_int(sign), &field.zeta_pow(-((m * binom(n + 1, 3)) as i64)));
        if tau_poly(&pr, &d) != pr.scale(&c, &d) {
            sym.push(format!("tau, (n, m) = ({n}, {m})"));
        }
    }
    report.push("sigma(Delta) = Delta, tau(Delta) = (-1)^C(n,2) zeta^(-m C(n+1,3)) Delta", sym.is_empty(), sym.join("; "));

    let mut t = Tally::new();
    let deltas: Vec<_> = cases
        .iter()
        .map(|&(n, m)| {
            let pr = PolyRing::new(CyclotomicField::new(n, m), n);
            let d = delta(&pr, m);
            (pr, d)
        })
        .collect();
    for _ in 0..samples {
        let (pr, d) = &deltas[rng.gen_range(0..deltas.len())];
        let w = random_word(rng, pr.n, 10);
        let g = word_matrix(&pr.ring, pr.n, &w);
        let wd = apply_matrix(pr, &g, d);
        let want = if w.len() % 2 == 0 { d.clone() } else { pr.neg(d) };
        t.record(wd == want, || format!("n = {} word {w}", pr.n));
    }
    t.finish(report, "w(Delta) = (-1)^l(w) Delta on random words");
    Ok(())
}

fn antisymmetrization_checks(report: &mut SuiteReport, rng: &mut ChaCha8Rng, samples: usize) -> Result<()> {
    let engines = [
        TraceEngine::new(CyclotomicField::new(3, 2), 3, 2)?,
        TraceEngine::new(CyclotomicField::new(3, 3), 3, 3)?,
    ];
    let mut t = Tally::new();
    for _ in 0..samples {
        let e = &engines[rng.gen_range(0..2)];
        let (n, m) = (e.n(), e.m);
        let r = rng.gen_range(0..m) as u16;
        let exps: Vec<u16> = (0..n).map(|_| r + (m as u16) * rng.gen_range(0..3)).collect();
        let f = e.pr.monomial(&exps);
        let full = e.antisymmetrize(&f, AntisymVariant::Full);
        let fin = e.antisymmetrize(&f, AntisymVariant::Finite);
        let scale = e.pr.ring.from_int(m.pow(n as u32 - 1) as i64);
        t.record(full == e.pr.scale(&scale, &fin), || format!("m = {m} exps {exps:?}"));
    }
    t.finish(report, "A(b) = m^(n-1) A'(b) for exponents congruent mod m");

    let mut t = Tally::new();
    for _ in 0..samples {
        let e = &engines[rng.gen_range(0..2)];
        let f = random_poly(&e.pr, rng, 0, 3 * e.m + 2, 2);
        let a = e.antisymmetrize(&f, AntisymVariant::Full);
        let i = rng.gen_range(0..3u8);
        let sa = apply_matrix(&e.pr, &simple_reflection_matrix(&e.pr.ring, 3, i), &a);
        let ok = sa == e.pr.neg(&a) && sigma_poly(&e.pr, &a) == e.antisymmetrize(&sigma_poly(&e.pr, &f), AntisymVariant::Full);
        t.record(ok, || format!("m = {} i = {i} f = {}", e.m, show(&e.pr, &f)));
    }
    t.finish(report, "s_i A(f) = -A(f) and sigma A(f) = A(sigma f)");
    Ok(())
}

fn root_counting_checks(report: &mut SuiteReport, rng: &mut ChaCha8Rng, samples: usize) {
    let mut bad = None;
    let mut count = 0;
    for n in 2..=4usize {
        for len in 0..=7u32 {
            for code in 0..(n as u64).pow(len) {
                let mut c = code;
                let w = Word(
                    (0..len)
                        .map(|_| {
                            let l = (c % n as u64) as u8;
                            c /= n as u64;
                            l
                        })
                        .collect(),
                );
                let g = word_to_perm(&w, n);
                if coxeter_length(&g) != w.len() {
                    continue;
                }
                count += 1;
                if root_counting_length(&w, n) != w.len() && bad.is_none() {
                    bad = Some(format!("n = {n} word {w}"));
                }
            }
        }
    }
    report.push(
        format!("root-counting length equals length on all {count} reduced words of length <= 7"),
        bad.is_none(),
        bad.unwrap_or_default(),
    );

    let mut t = Tally::new();
    for _ in 0..samples {
        let n = rng.gen_range(2..=4);
        let w = random_word(rng, n, 12);
        let g = word_to_perm(&w, n);
        let rc = root_counting_length(&w, n);
        t.record(rc == coxeter_length(&g), || format!("n = {n} word {w}"));
    }
    t.finish(report, "root-counting length equals length on random words");
}
