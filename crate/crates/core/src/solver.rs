//! Linear equations `Σ Aₖ·X·Bₖ = C` over `H_C` with the twisted product.
//!
//! `vec(A·X·B) = Γ(A)·PΘ(B)P·vec(X)`, so the equation becomes an 8×8 real
//! system that is solved exactly and mapped back.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{constants, Matrix, SolveResult};
use crate::quaternion::Biquaternion;
use crate::repr::{biquat_from_vec, gamma, theta, vec_biquat};
use crate::scalar::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    #[serde(rename = "A")]
    pub a: Biquaternion,
    #[serde(rename = "B")]
    pub b: Biquaternion,
}

impl Term {
    pub fn new(a: Biquaternion, b: Biquaternion) -> Self {
        Term { a, b }
    }
}

/// `Σ terms[k].a · X · terms[k].b = rhs`, with at least one term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawEquation")]
pub struct LinearEquation {
    terms: Vec<Term>,
    rhs: Biquaternion,
}

#[derive(Deserialize)]
struct RawEquation {
    terms: Vec<Term>,
    rhs: Biquaternion,
}

impl TryFrom<RawEquation> for LinearEquation {
    type Error = Error;
    fn try_from(raw: RawEquation) -> Result<Self> {
        LinearEquation::new(raw.terms, raw.rhs)
    }
}

impl LinearEquation {
    pub fn new(terms: Vec<Term>, rhs: Biquaternion) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::Equation("at least one term is required".into()));
        }
        Ok(LinearEquation { terms, rhs })
    }

    /// `a·X·b = rhs`.
    pub fn single(a: Biquaternion, b: Biquaternion, rhs: Biquaternion) -> Self {
        LinearEquation { terms: vec![Term::new(a, b)], rhs }
    }

    /// `q·X ∓ X·q = rhs`; `plus` selects the sign.
    pub fn commutator(q: &Biquaternion, plus: bool, rhs: Biquaternion) -> Self {
        let right = if plus { Biquaternion::one() } else { Biquaternion::one().neg() };
        LinearEquation {
            terms: vec![Term::new(q.clone(), Biquaternion::one()), Term::new(right, q.clone())],
            rhs,
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn rhs(&self) -> &Biquaternion {
        &self.rhs
    }

    /// `Σ Aₖ·X·Bₖ` evaluated in the algebra.
    pub fn apply(&self, x: &Biquaternion) -> Biquaternion {
        self.terms
            .iter()
            .fold(Biquaternion::zero(), |acc, t| acc.add(&t.a.mul(x).mul(&t.b)))
    }

    /// `Σ Aₖ·X·Bₖ - C`.
    pub fn residual(&self, x: &Biquaternion) -> Biquaternion {
        self.apply(x).sub(&self.rhs)
    }
}

/// `Σ Γ(Aₖ)·P·Θ(Bₖ)·P`.
pub fn system_matrix(eq: &LinearEquation) -> Matrix<Rational> {
    let p = &constants().p;
    eq.terms.iter().fold(Matrix::zeros(8, 8), |acc, t| {
        let right = &(p * &theta(&t.b)) * p;
        &acc + &(&gamma(&t.a) * &right)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SolveKind {
    Unique,
    Affine,
    Inconsistent,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveOutcome {
    pub kind: SolveKind,
    pub solution: Option<Biquaternion>,
    pub nullspace: Vec<Biquaternion>,
    pub rank: usize,
}

/// Solves `eq` exactly.
///
/// Every returned element is substituted back with the twisted product; a
/// nonzero residual is reported as [`Error::InvariantBreach`].
pub fn solve(eq: &LinearEquation) -> Result<SolveOutcome> {
    let a = system_matrix(eq);
    let outcome = match a.solve(&vec_biquat(&eq.rhs))? {
        SolveResult::Unique(x) => SolveOutcome {
            kind: SolveKind::Unique,
            solution: Some(biquat_from_vec(&x)),
            nullspace: Vec::new(),
            rank: 8,
        },
        SolveResult::Affine { particular, nullspace, rank } => SolveOutcome {
            kind: SolveKind::Affine,
            solution: Some(biquat_from_vec(&particular)),
            nullspace: nullspace.iter().map(biquat_from_vec).collect(),
            rank,
        },
        SolveResult::Inconsistent { rank } => {
            SolveOutcome { kind: SolveKind::Inconsistent, solution: None, nullspace: Vec::new(), rank }
        }
    };
    validate(eq, &outcome)?;
    Ok(outcome)
}

fn validate(eq: &LinearEquation, outcome: &SolveOutcome) -> Result<()> {
    let Some(x0) = &outcome.solution else {
        return Ok(());
    };
    if !eq.residual(x0).is_zero() {
        return Err(Error::InvariantBreach(format!("residual of {x0} is nonzero")));
    }
    for v in &outcome.nullspace {
        let shifted = x0.add(v);
        if !eq.residual(&shifted).is_zero() {
            return Err(Error::InvariantBreach(format!("residual of {shifted} is nonzero")));
        }
    }
    if outcome.rank + outcome.nullspace.len() != 8 {
        return Err(Error::InvariantBreach("rank and nullity do not sum to 8".into()));
    }
    Ok(())
}
