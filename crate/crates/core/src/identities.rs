//! Named identity catalog checked on seeded random exact inputs.
//!
//! Trial `t` of a check draws its inputs from a ChaCha8 generator seeded with
//! `seed` on stream `t`, so trials are independent of evaluation order and a
//! parallel run produces the same report as a sequential one.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::SerializeMap;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{constants, Matrix};
use crate::quaternion::{Biquaternion, Quaternion};
use crate::repr::{
    epsilon, gamma, gamma_adjoint, lambda, reconstruct_gamma, reconstruct_gamma_untransposed, reconstruct_theta,
    reconstruct_theta_literal, rho, theta, vec_biquat, vec_quat,
};
use crate::scalar::Rational;

pub const DEFAULT_TRIALS: usize = 100;
pub const DEFAULT_SEED: u64 = 61632;
pub const DEFAULT_BOUND: u32 = 9;

/// What the catalog records about an identity before it is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    /// Documented finding or existence check: a counterexample is expected.
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Fails,
}

/// A value on either side of a checked equation.
#[derive(Debug, Clone, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Scalar(Rational),
    Quat(Quaternion),
    Biquat(Biquaternion),
    Real(Matrix<Rational>),
    Quats(Matrix<Quaternion>),
}

impl Serialize for Value {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Value::Scalar(v) => v.serialize(s),
            Value::Quat(v) => v.serialize(s),
            Value::Biquat(v) => v.serialize(s),
            Value::Real(v) => v.serialize(s),
            Value::Quats(v) => v.serialize(s),
        }
    }
}

macro_rules! value_from {
    ($($ty:ty => $variant:ident),*) => {
        $(impl From<$ty> for Value {
            fn from(v: $ty) -> Self {
                Value::$variant(v)
            }
        })*
    };
}

value_from!(Rational => Scalar, Quaternion => Quat, Biquaternion => Biquat,
    Matrix<Rational> => Real, Matrix<Quaternion> => Quats);

/// Named inputs of one trial, serialized as a JSON object in draw order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Inputs(Vec<(&'static str, String)>);

impl Inputs {
    fn push(&mut self, name: &'static str, value: impl ToString) {
        self.0.push((name, value.to_string()));
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.0.iter().find(|(n, _)| *n == name).map(|(_, v)| v.as_str())
    }
}

impl Serialize for Inputs {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Inputs,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub trials: usize,
    pub seed: u64,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.status == Status::Holds
    }
}

/// Per-trial input source. Every draw is recorded under its name.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
    inputs: Inputs,
}

impl Sampler {
    fn new(seed: u64, trial: usize, bound: u32) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        Sampler { rng, bound: i64::from(bound), inputs: Inputs::default() }
    }

    fn coeff(&mut self) -> Rational {
        Rational::from(self.rng.gen_range(-self.bound..=self.bound))
    }

    fn scalar(&mut self, name: &'static str) -> Rational {
        let r = self.coeff();
        self.inputs.push(name, &r);
        r
    }

    fn raw_quat(&mut self) -> Quaternion {
        Quaternion::new(self.coeff(), self.coeff(), self.coeff(), self.coeff())
    }

    fn quat(&mut self, name: &'static str) -> Quaternion {
        let q = self.raw_quat();
        self.inputs.push(name, &q);
        q
    }

    /// A quaternion that is never zero; a zero draw is replaced by 1.
    fn nonzero_quat(&mut self, name: &'static str) -> Quaternion {
        let mut q = self.raw_quat();
        if q.is_zero() {
            q = Quaternion::one();
        }
        self.inputs.push(name, &q);
        q
    }

    fn biquat(&mut self, name: &'static str) -> Biquaternion {
        let q = Biquaternion::new(self.raw_quat(), self.raw_quat());
        self.inputs.push(name, &q);
        q
    }
}

/// Outcome of one trial: `None` when every part held.
type Trial = Option<Counterexample>;

/// Accumulates the parts of a trial, keeping the first failing one.
struct Check {
    inputs: Inputs,
    failure: Option<(Value, Value)>,
}

impl Check {
    fn from(sampler: Sampler) -> Self {
        Check { inputs: sampler.inputs, failure: None }
    }

    fn eq<T: PartialEq + Into<Value>>(mut self, lhs: T, rhs: T) -> Self {
        if self.failure.is_none() && lhs != rhs {
            self.failure = Some((lhs.into(), rhs.into()));
        }
        self
    }

    fn finish(self) -> Trial {
        self.failure.map(|(lhs, rhs)| Counterexample { inputs: self.inputs, lhs, rhs })
    }
}

pub struct IdentitySpec {
    pub id: &'static str,
    pub expectation: Expectation,
    pub statement: &'static str,
    run: fn(Sampler) -> Trial,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("expectation", &self.expectation)
            .finish()
    }
}

macro_rules! identity {
    ($id:literal, $exp:ident, $statement:literal, $run:expr) => {
        IdentitySpec { id: $id, expectation: Expectation::$exp, statement: $statement, run: $run }
    };
}

fn quarter(q: Quaternion) -> Quaternion {
    q.scale(&Rational::new(-1, 4).expect("nonzero"))
}

fn first_column(m: &Matrix<Rational>) -> Matrix<Rational> {
    m.col(0)
}

fn p_conj(m: &Matrix<Rational>) -> Matrix<Rational> {
    let p = &constants().p;
    &(p * m) * p
}

fn det(m: &Matrix<Rational>) -> Rational {
    m.det().expect("square")
}

static CATALOG: &[IdentitySpec] = &[
    identity!("prop_1_1_lambda_additive", Holds, "λ(x+y) = λ(x)+λ(y)", |mut s| {
        let (x, y) = (s.quat("x"), s.quat("y"));
        Check::from(s).eq(lambda(&x.add(&y)), &lambda(&x) + &lambda(&y)).finish()
    }),
    identity!("prop_1_1_lambda_multiplicative", Holds, "λ(xy) = λ(x)λ(y)", |mut s| {
        let (x, y) = (s.quat("x"), s.quat("y"));
        Check::from(s).eq(lambda(&x.mul(&y)), &lambda(&x) * &lambda(&y)).finish()
    }),
    identity!("prop_1_1_lambda_scalar", Holds, "λ(rx) = rλ(x)", |mut s| {
        let (r, x) = (s.scalar("r"), s.quat("x"));
        Check::from(s).eq(lambda(&x.scale(&r)), lambda(&x).scale(&r)).finish()
    }),
    identity!("prop_1_1_lambda_unit", Holds, "λ(1) = I₄", |s| {
        Check::from(s).eq(lambda(&Quaternion::one()), Matrix::identity(4)).finish()
    }),
    identity!("prop_1_1_rho_additive", Holds, "ρ(x+y) = ρ(x)+ρ(y)", |mut s| {
        let (x, y) = (s.quat("x"), s.quat("y"));
        Check::from(s).eq(rho(&x.add(&y)), &rho(&x) + &rho(&y)).finish()
    }),
    identity!("prop_1_1_rho_antimultiplicative", Holds, "ρ(xy) = ρ(y)ρ(x)", |mut s| {
        let (x, y) = (s.quat("x"), s.quat("y"));
        Check::from(s).eq(rho(&x.mul(&y)), &rho(&y) * &rho(&x)).finish()
    }),
    identity!("prop_1_1_rho_scalar", Holds, "ρ(rx) = rρ(x)", |mut s| {
        let (r, x) = (s.scalar("r"), s.quat("x"));
        Check::from(s).eq(rho(&x.scale(&r)), rho(&x).scale(&r)).finish()
    }),
    identity!("prop_1_1_rho_unit", Holds, "ρ(1) = I₄", |s| {
        Check::from(s).eq(rho(&Quaternion::one()), Matrix::identity(4)).finish()
    }),
    identity!("prop_1_1_inverses", Holds, "λ(x⁻¹) = λ(x)⁻¹ and ρ(x⁻¹) = ρ(x)⁻¹ for x ≠ 0", |mut s| {
        let x = s.nonzero_quat("x");
        let inv = x.inverse().expect("nonzero");
        let id = Matrix::identity(4);
        Check::from(s)
            .eq(&lambda(&x) * &lambda(&inv), id.clone())
            .eq(&lambda(&inv) * &lambda(&x), id.clone())
            .eq(&rho(&x) * &rho(&inv), id.clone())
            .eq(&rho(&inv) * &rho(&x), id)
            .finish()
    }),
    identity!("prop_1_2_vec_left", Holds, "vec(ax) = λ(a)vec(x)", |mut s| {
        let (a, x) = (s.quat("a"), s.quat("x"));
        Check::from(s).eq(vec_quat(&a.mul(&x)), &lambda(&a) * &vec_quat(&x)).finish()
    }),
    identity!("prop_1_2_vec_right", Holds, "vec(xb) = ρ(b)vec(x)", |mut s| {
        let (x, b) = (s.quat("x"), s.quat("b"));
        Check::from(s).eq(vec_quat(&x.mul(&b)), &rho(&b) * &vec_quat(&x)).finish()
    }),
    identity!("prop_1_2_vec_both", Holds, "vec(axb) = λ(a)ρ(b)vec(x)", |mut s| {
        let (a, x, b) = (s.quat("a"), s.quat("x"), s.quat("b"));
        let rhs = &(&lambda(&a) * &rho(&b)) * &vec_quat(&x);
        Check::from(s).eq(vec_quat(&a.mul(&x).mul(&b)), rhs).finish()
    }),
    identity!("prop_1_2_vec_commute", Holds, "ρ(b)λ(a) = λ(a)ρ(b)", |mut s| {
        let (a, b) = (s.quat("a"), s.quat("b"));
        Check::from(s).eq(&rho(&b) * &lambda(&a), &lambda(&a) * &rho(&b)).finish()
    }),
    identity!("prop_1_2_det", Holds, "det λ(x) = det ρ(x) = n(x)²", |mut s| {
        let x = s.quat("x");
        let n2 = x.norm().square();
        Check::from(s).eq(det(&lambda(&x)), n2.clone()).eq(det(&rho(&x)), n2).finish()
    }),
    identity!("prop_2_1_M", Holds, "λ(a)M = M·a, θM = M·e1, λ(e1a) = θλ(a), λ(ae1) = λ(a)θ", |mut s| {
        let a = s.quat("a");
        let c = constants();
        let e1 = Quaternion::e1();
        Check::from(s)
            .eq(&lambda(&a) * &c.m, c.m.right_mul_entries(&a))
            .eq(&c.theta * &c.m, c.m.right_mul_entries(&e1))
            .eq(lambda(&e1.mul(&a)), &c.theta * &lambda(&a))
            .eq(lambda(&a.mul(&e1)), &lambda(&a) * &c.theta)
            .finish()
    }),
    identity!("prop_2_2_star", Holds, "(xa)* = x*a*, (a+b)* = a*+b*, a*e1 = e1a, ae1 = e1a*, -a* = e1ae1", |mut s| {
        let (x, a, b) = (s.quat("x"), s.quat("a"), s.quat("b"));
        let e1 = Quaternion::e1();
        Check::from(s)
            .eq(x.mul(&a).star(), x.star().mul(&a.star()))
            .eq(a.add(&b).star(), a.star().add(&b.star()))
            .eq(a.star().mul(&e1), e1.mul(&a))
            .eq(a.mul(&e1), e1.mul(&a.star()))
            .eq(a.star().neg(), e1.mul(&a).mul(&e1))
            .finish()
    }),
    identity!("prop_2_3_gamma_multiplicative", Holds, "Γ(XA) = Γ(X)Γ(A)", |mut s| {
        let (x, a) = (s.biquat("X"), s.biquat("A"));
        Check::from(s).eq(gamma(&x.mul(&a)), &gamma(&x) * &gamma(&a)).finish()
    }),
    identity!("prop_2_5", Holds, "vec(X) = Γ(X)e₁, vec(AX) = Γ(A)vec(X), α·vec(y*) = vec(y), α² = I₄", |mut s| {
        let (x, a) = (s.biquat("X"), s.biquat("A"));
        let alpha = &constants().alpha;
        Check::from(s)
            .eq(vec_biquat(&x), first_column(&gamma(&x)))
            .eq(vec_biquat(&a.mul(&x)), &gamma(&a) * &vec_biquat(&x))
            .eq(alpha * &vec_quat(&x.im.star()), vec_quat(&x.im))
            .eq(alpha * alpha, Matrix::identity(4))
            .finish()
    }),
    identity!("prop_2_6_M8", Holds, "-1/4·M8ᵗM8 = 1", |s| {
        let m8 = &constants().m8;
        let gram = (&m8.transpose() * m8).get(0, 0).clone();
        Check::from(s).eq(quarter(gram), Quaternion::one()).finish()
    }),
    identity!("thm_2_7_i", Holds, "Γ(conj Q*)ᵗ·M8 = M8·κ(Q)", |mut s| {
        let q = s.biquat("Q");
        let m8 = &constants().m8;
        Check::from(s).eq(&gamma_adjoint(&q.star()) * m8, m8.right_mul_entries(&q.collapse())).finish()
    }),
    identity!("thm_2_7_ii", Holds, "-1/4·M8ᵗ·Γ(conj Q*)ᵗ·M8 = κ(Q)", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(reconstruct_gamma(&q), q.collapse()).finish()
    }),
    identity!("prop_2_8_theta_antimultiplicative", Holds, "Θ(XA) = Θ(A)Θ(X)", |mut s| {
        let (x, a) = (s.biquat("X"), s.biquat("A"));
        Check::from(s).eq(theta(&x.mul(&a)), &theta(&a) * &theta(&x)).finish()
    }),
    identity!("prop_2_9", Holds, "vec(X) = PΘ(X)P·e₁, vec(XA) = PΘ(A)P·vec(X), Γ(A)·PΘ(B)P = PΘ(B)P·Γ(A)", |mut s| {
        let (x, a, b) = (s.biquat("X"), s.biquat("A"), s.biquat("B"));
        let ptb = p_conj(&theta(&b));
        Check::from(s)
            .eq(vec_biquat(&x), first_column(&p_conj(&theta(&x))))
            .eq(vec_biquat(&x.mul(&a)), &p_conj(&theta(&a)) * &vec_biquat(&x))
            .eq(&gamma(&a) * &ptb, &ptb * &gamma(&a))
            .finish()
    }),
    identity!("thm_2_10", Holds, "A1ρ(a)A2 = λ(a)ᵗ, Γ(X)ᵗ = M1Θ(X)M2", |mut s| {
        let (a, x) = (s.quat("a"), s.biquat("X"));
        let c = constants();
        Check::from(s)
            .eq(&(&c.a1 * &rho(&a)) * &c.a2, lambda(&a).transpose())
            .eq(gamma(&x).transpose(), &(&c.m1 * &theta(&x)) * &c.m2)
            .finish()
    }),
    identity!("remark_2_11", Holds, "-1/4·N1·Θ(conj Q*)·N2 = κ(Q), N1 = M8ᵗM2ᵗ, N2 = M1ᵗM8", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(reconstruct_theta(&q), q.collapse()).finish()
    }),
    identity!("prop_2_12_det", Holds, "det Γ(Q) = det Θ(Q) = n(xx*+y*y)² = n(x*x+y*y)²", |mut s| {
        let q = s.biquat("Q");
        let (x, y) = (&q.re, &q.im);
        let g = det(&gamma(&q));
        let first = x.mul(&x.star()).add(&y.star().mul(y)).norm().square();
        let second = x.star().mul(x).add(&y.star().mul(y)).norm().square();
        Check::from(s)
            .eq(g.clone(), det(&theta(&q)))
            .eq(g, first.clone())
            .eq(first, second)
            .finish()
    }),
    identity!("prop_2_12_det_equal", Holds, "det Γ(Q) = det Θ(Q)", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(det(&gamma(&q)), det(&theta(&q))).finish()
    }),
    identity!("remark_3_4_paper_product_fails", Fails, "ε(XA) ≠ ε(X)ε(A) and ε(XA) ≠ ε(A)ε(X) for some X, A", |mut s| {
        let (x, a) = (s.biquat("X"), s.biquat("A"));
        let lhs = epsilon(&x.mul(&a));
        let (ex, ea) = (epsilon(&x), epsilon(&a));
        let forward = &ex * &ea;
        // a trial witnesses the remark only when both orders fail
        if lhs == forward || lhs == &ea * &ex {
            return None;
        }
        Check::from(s).eq(lhs, forward).finish()
    }),
    identity!("epsilon_classical_multiplicative", Holds, "ε(X⊙A) = ε(X)ε(A), classical product", |mut s| {
        let (x, a) = (s.biquat("X"), s.biquat("A"));
        Check::from(s).eq(epsilon(&x.mul_classical(&a)), &epsilon(&x) * &epsilon(&a)).finish()
    }),
    identity!("thm_2_7_full_transpose", Fails, "Γ(Q*)ᵗ·M8 = M8·κ(Q) with the full 8×8 transpose", |mut s| {
        let q = s.biquat("Q");
        let m8 = &constants().m8;
        Check::from(s).eq(&gamma(&q.star()).transpose() * m8, m8.right_mul_entries(&q.collapse())).finish()
    }),
    identity!("thm_2_7_ii_statement_form", Fails, "-1/4·M8ᵗ·Γ(Q*)·M8 = κ(Q)", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(reconstruct_gamma_untransposed(&q), q.collapse()).finish()
    }),
    identity!("thm_2_7_recovers_q", Fails, "-1/4·M8ᵗ·Γ(conj Q*)ᵗ·M8 = Q", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(Biquaternion::real(reconstruct_gamma(&q)), q).finish()
    }),
    identity!("remark_2_11_literal", Fails, "-1/4·N1·Θ(Q*)ᵗ·N2 = κ(Q)", |mut s| {
        let q = s.biquat("Q");
        Check::from(s).eq(reconstruct_theta_literal(&q), q.collapse()).finish()
    }),
    identity!("prop_2_6_printed_M8", Fails, "printed M8 = (e1, -1, e3, e2, -1, e1, e2, e3)ᵗ equals (θM ; -M)", |s| {
        let printed = Matrix::column(
            ["e1", "-1", "e3", "e2", "-1", "e1", "e2", "e3"].map(|t| t.parse::<Quaternion>().expect("literal")).to_vec(),
        );
        Check::from(s).eq(printed, constants().m8.clone()).finish()
    }),
];

/// Every registered identity, in report order.
pub fn catalog() -> &'static [IdentitySpec] {
    CATALOG
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    CATALOG.iter().find(|s| s.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Checks `id` on `trials` seeded inputs with integer coefficients in `[-bound, bound]`.
pub fn check_identity(id: &str, trials: usize, seed: u64, bound: u32) -> Result<IdentityReport> {
    let spec = lookup(id)?;
    Ok(run(spec, trials, seed, bound))
}

pub fn run(spec: &IdentitySpec, trials: usize, seed: u64, bound: u32) -> IdentityReport {
    let counterexamples: Vec<Counterexample> = (0..trials)
        .into_par_iter()
        .filter_map(|t| (spec.run)(Sampler::new(seed, t, bound)))
        .collect();
    let status = if counterexamples.is_empty() { Status::Holds } else { Status::Fails };
    IdentityReport { identity: spec.id.to_string(), trials, seed, status, counterexamples }
}

/// Runs the whole catalog.
pub fn check_all(trials: usize, seed: u64, bound: u32) -> Vec<IdentityReport> {
    CATALOG.iter().map(|spec| run(spec, trials, seed, bound)).collect()
}
