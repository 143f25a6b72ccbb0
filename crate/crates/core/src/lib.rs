//! Exact real matrix representations of real quaternions `H` and complex
//! quaternions `H_C`.
//!
//! All arithmetic is over arbitrary-precision rationals. The crate provides
//! the 4×4 maps `λ`, `ρ`, the 8×8 maps `Γ`, `Θ`, `ε`, vectorization, a
//! randomized exact identity checker, Fibonacci quaternion families, and a
//! solver for `Σ Aₖ·X·Bₖ = C` over `H_C`.

pub mod error;
pub mod fibonacci;
pub mod identities;
pub mod linalg;
pub mod literal;
pub mod quaternion;
pub mod repr;
pub mod scalar;
pub mod solver;

pub use error::{Error, ParseError, Result};
pub use identities::{check_identity, IdentityReport, Status};
pub use linalg::{constants, ConstantMatrices, Matrix, SolveResult};
pub use quaternion::{Biquaternion, Quaternion};
pub use scalar::{ComplexScalar, Rational};
pub use solver::{LinearEquation, SolveKind, SolveOutcome};
