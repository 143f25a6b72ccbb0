//! Acceptance criteria. Prints one line per criterion and exits nonzero if
//! any criterion fails. All comparisons are exact.

use std::collections::HashMap;
use std::process::ExitCode;

use hyperquat::fibonacci::{complex_fib_quaternion, equation_matrices, fib_quaternion};
use hyperquat::identities::{check_all, check_identity, DEFAULT_BOUND, DEFAULT_SEED};
use hyperquat::repr::{gamma, lambda, rho, theta, vec_biquat};
use hyperquat::solver::{self, system_matrix, Term};
use hyperquat::{constants, Biquaternion, LinearEquation, Matrix, Quaternion, Rational, SolveKind, SolveResult};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    notes: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { pass: true, notes: Vec::new() }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(what.into());
        }
    }

    fn note(&mut self, what: impl Into<String>) {
        self.notes.push(what.into());
    }

    fn identity(&mut self, id: &str, trials: usize, expect_holds: bool) {
        let report = check_identity(id, trials, DEFAULT_SEED, DEFAULT_BOUND).expect("registered id");
        let failures = report.counterexamples.len();
        let ok = report.holds() == expect_holds;
        self.require(ok, format!("{id}: {failures}/{trials} trials failed"));
    }
}

/// Fibonacci numbers by plain u128 iteration.
fn fib_u128(n: u32) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

fn big(v: u128) -> Rational {
    v.to_string().parse().expect("integer literal")
}

fn random_biquat(rng: &mut ChaCha8Rng, bound: i64) -> Biquaternion {
    let mut q = || {
        Quaternion::new(
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        )
    };
    let re = q();
    Biquaternion::new(re, q())
}

fn in_span(basis: &[Biquaternion], w: &Biquaternion) -> bool {
    let m = Matrix::from_fn(8, basis.len(), |i, j| vec_biquat(&basis[j]).get(i, 0).clone());
    !matches!(m.solve(&vec_biquat(w)).expect("conformable"), SolveResult::Inconsistent { .. })
}

fn criterion_1() -> Outcome {
    let mut o = Outcome::new();
    for id in [
        "prop_1_1_lambda_multiplicative",
        "prop_1_1_rho_antimultiplicative",
        "prop_2_3_gamma_multiplicative",
        "prop_2_8_theta_antimultiplicative",
    ] {
        o.identity(id, 100, true);
    }
    o
}

fn criterion_2() -> Outcome {
    let mut o = Outcome::new();
    o.identity("prop_1_2_det", 50, true);
    o.identity("prop_2_12_det", 50, true);
    o.identity("prop_2_12_det_equal", 50, true);
    o
}

fn criterion_3() -> Outcome {
    let mut o = Outcome::new();
    for id in ["prop_1_2_vec_left", "prop_1_2_vec_right", "prop_1_2_vec_both", "prop_1_2_vec_commute", "prop_2_5", "prop_2_9"] {
        o.identity(id, 100, true);
    }
    o
}

fn criterion_4() -> Outcome {
    let mut o = Outcome::new();
    let c = constants();
    o.require(&c.alpha * &c.alpha == Matrix::identity(4), "α² ≠ I₄");
    let gram = (&c.m8.transpose() * &c.m8).get(0, 0).clone();
    let quarter = gram.scale(&Rational::new(-1, 4).unwrap());
    o.require(quarter == Quaternion::one(), format!("-1/4·M8ᵗM8 = {quarter}"));
    o.identity("thm_2_10", 50, true);
    o
}

fn criterion_5() -> Outcome {
    let mut o = Outcome::new();
    for id in ["thm_2_7_i", "thm_2_7_ii", "remark_2_11"] {
        o.identity(id, 50, true);
    }
    let witness = Biquaternion::new(Quaternion::one(), Quaternion::e1());
    o.require(witness.collapse().is_zero(), "collapse(1 + i·e1) ≠ 0");
    o
}

fn criterion_6() -> Outcome {
    let mut o = Outcome::new();
    for n in 0..=20 {
        let expected = big(3 * fib_u128(2 * n + 3));
        o.require(fib_quaternion(n).norm() == expected, format!("n(F_{n}) ≠ 3f_(2n+3)"));
    }
    for n in 0..=12 {
        let f = fib_u128(2 * n + 3);
        let expected = big(9 * f * f);
        let q = fib_quaternion(n);
        let ok = lambda(&q).det().unwrap() == expected && rho(&q).det().unwrap() == expected;
        o.require(ok, format!("det λ(F_{n}) ≠ 9f²_(2n+3)"));
    }
    for n in 0..=10 {
        let q = complex_fib_quaternion(n);
        o.require(gamma(&q).det().unwrap() == theta(&q).det().unwrap(), format!("det Γ(Q_{n}) ≠ det Θ(Q_{n})"));
    }
    let direct = gamma(&complex_fib_quaternion(1)).det().unwrap();
    let printed = big(25 * 58 * 58 * 10 * 10);
    let verdict = if direct == printed { "match" } else { "MISMATCH" };
    o.note(format!("det Γ(Q_1) direct {direct}, printed {printed}: {verdict}"));
    o
}

fn criterion_7() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    for n in 0..=10 {
        let m = equation_matrices(n);
        o.require(m.b.det().unwrap().is_zero(), format!("det B ≠ 0 at n = {n}"));
        o.require(m.b.rank() == 4, format!("rank B = {} at n = {n}", m.b.rank()));
        o.require(!m.d.det().unwrap().is_zero(), format!("det D = 0 at n = {n}"));

        let q = complex_fib_quaternion(n);
        for _ in 0..20 {
            let a = random_biquat(&mut rng, DEFAULT_BOUND as i64);
            let eq = LinearEquation::commutator(&q, true, a);
            match solver::solve(&eq) {
                Ok(out) if out.kind == SolveKind::Unique => {
                    let x = out.solution.expect("unique has a solution");
                    o.require(eq.residual(&x).is_zero(), format!("nonzero residual at n = {n}"));
                }
                other => o.require(false, format!("Q_nX + XQ_n = A not unique at n = {n}: {other:?}")),
            }
        }

        let homogeneous = LinearEquation::commutator(&q, false, Biquaternion::zero());
        match solver::solve(&homogeneous) {
            Ok(out) if out.kind == SolveKind::Affine => {
                o.require(out.nullspace.len() == 4, format!("nullspace dimension {} at n = {n}", out.nullspace.len()));
                o.require(in_span(&out.nullspace, &Biquaternion::one()), format!("1 not in nullspace at n = {n}"));
                o.require(in_span(&out.nullspace, &q), format!("Q_{n} not in nullspace"));
            }
            other => o.require(false, format!("Q_nX - XQ_n = 0 not affine at n = {n}: {other:?}")),
        }
    }
    o
}

fn criterion_8() -> Outcome {
    let mut o = Outcome::new();
    for n in 0..=10 {
        o.require(!equation_matrices(n).delta.det().unwrap().is_zero(), format!("det δ(Q_{n}) = 0"));
    }
    let direct = equation_matrices(1).delta.det().unwrap();
    let printed = big(256 * 3u128.pow(4) * 7u128.pow(4));
    let verdict = if direct == printed { "match" } else { "MISMATCH" };
    o.note(format!("det δ(Q_1) direct {direct}, printed {printed}: {verdict}"));
    o
}

fn criterion_9() -> Outcome {
    let mut o = Outcome::new();
    let report = check_identity("remark_3_4_paper_product_fails", 100, DEFAULT_SEED, DEFAULT_BOUND).unwrap();
    o.require(!report.holds(), "no witness of ε failing the twisted product");
    if let Some(cx) = report.counterexamples.first() {
        o.note(format!("witness X = {}, A = {}", cx.inputs.get("X").unwrap(), cx.inputs.get("A").unwrap()));
    }
    o.identity("epsilon_classical_multiplicative", 100, true);
    o
}

/// Determinant by Laplace expansion along the first row, minors keyed by
/// the bitmask of remaining columns.
fn laplace(m: &[[i128; 8]; 8], row: usize, cols: u16, memo: &mut HashMap<(usize, u16), i128>) -> i128 {
    if row == 8 {
        return 1;
    }
    if let Some(&v) = memo.get(&(row, cols)) {
        return v;
    }
    let mut sum = 0i128;
    let mut sign = 1i128;
    for j in 0..8 {
        if cols & (1 << j) == 0 {
            continue;
        }
        if m[row][j] != 0 {
            sum += sign * m[row][j] * laplace(m, row + 1, cols & !(1 << j), memo);
        }
        sign = -sign;
    }
    memo.insert((row, cols), sum);
    sum
}

fn det_i128(m: &[[i128; 8]; 8]) -> i128 {
    laplace(m, 0, 0xff, &mut HashMap::new())
}

/// Cramer's rule over i128; returns `(numerators, denominator)`.
fn cramer(a: &[[i128; 8]; 8], b: &[i128; 8]) -> Option<([i128; 8], i128)> {
    let d = det_i128(a);
    if d == 0 {
        return None;
    }
    let mut nums = [0i128; 8];
    for (k, num) in nums.iter_mut().enumerate() {
        let mut ak = *a;
        for i in 0..8 {
            ak[i][k] = b[i];
        }
        *num = det_i128(&ak);
    }
    Some((nums, d))
}

fn to_i128(r: &Rational) -> i128 {
    assert!(r.is_integer());
    r.to_string().parse().unwrap()
}

fn criterion_10() -> Outcome {
    let mut o = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED ^ 10);
    let mut solved = 0;
    while solved < 20 {
        let eq = LinearEquation::new(
            vec![
                Term::new(random_biquat(&mut rng, 4), random_biquat(&mut rng, 4)),
                Term::new(random_biquat(&mut rng, 4), Biquaternion::one()),
            ],
            random_biquat(&mut rng, 9),
        )
        .unwrap();
        let sys = system_matrix(&eq);
        let rhs = vec_biquat(eq.rhs());
        let a: [[i128; 8]; 8] = std::array::from_fn(|i| std::array::from_fn(|j| to_i128(sys.get(i, j))));
        let b: [i128; 8] = std::array::from_fn(|i| to_i128(rhs.get(i, 0)));
        let Some((nums, den)) = cramer(&a, &b) else {
            continue;
        };
        solved += 1;
        let expected: Vec<Rational> = nums.iter().map(|&n| Rational::new(n, den).unwrap()).collect();
        match solver::solve(&eq) {
            Ok(out) if out.kind == SolveKind::Unique => {
                let got = vec_biquat(&out.solution.unwrap()).into_entries();
                o.require(got == expected, format!("solve and Cramer disagree on system {solved}"));
            }
            other => o.require(false, format!("nonsingular system {solved} not unique: {other:?}")),
        }
    }
    o
}

fn criterion_11() -> Outcome {
    let mut o = Outcome::new();
    let first = serde_json::to_string(&check_all(100, DEFAULT_SEED, DEFAULT_BOUND)).unwrap();
    let second = serde_json::to_string(&check_all(100, DEFAULT_SEED, DEFAULT_BOUND)).unwrap();
    o.require(first == second, "reports differ between runs");
    o.note(format!("{} bytes", first.len()));
    o
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("representation homomorphisms", criterion_1),
        ("determinant identities", criterion_2),
        ("vectorization laws", criterion_3),
        ("constant-matrix facts", criterion_4),
        ("reconstruction", criterion_5),
        ("Fibonacci norms and determinants", criterion_6),
        ("equation analysis", criterion_7),
        ("invertibility of δ", criterion_8),
        ("pseudo-representation", criterion_9),
        ("solver oracle equivalence", criterion_10),
        ("reproducibility", criterion_11),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let outcome = run();
        let verdict = if outcome.pass { "PASS" } else { "FAIL" };
        if !outcome.pass {
            failed += 1;
        }
        let detail = if outcome.notes.is_empty() { String::new() } else { format!(" ({})", outcome.notes.join("; ")) };
        println!("criterion {}: {verdict} {name}{detail}", k + 1);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
