//! Exact rational and complex scalars.
//!
//! [`Rational`] is always kept in lowest terms with a positive denominator,
//! so `==` is structural equality of canonical forms.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, ParseError, Result};
use crate::linalg::Matrix;

/// Arbitrary-precision exact fraction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

/// Binary and unary operations accepted by [`Rational::arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// Negates `lhs`; `rhs` is ignored.
    Neg,
}

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// Builds `numer / denom`, reducing to canonical form.
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn square(&self) -> Self {
        Rational(&self.0 * &self.0)
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    pub fn recip(&self) -> Result<Self> {
        Rational::one().checked_div(self)
    }

    /// Applies `op` exactly. Division by zero is reported, never panics.
    pub fn arith(op: ArithOp, lhs: &Rational, rhs: &Rational) -> Result<Rational> {
        Ok(match op {
            ArithOp::Add => lhs + rhs,
            ArithOp::Sub => lhs - rhs,
            ArithOp::Mul => lhs * rhs,
            ArithOp::Div => lhs.checked_div(rhs)?,
            ArithOp::Neg => -lhs,
        })
    }

    /// Parses a literal starting at `start` and returns it with the number
    /// of bytes consumed. Accepts `-?digits` and `-?digits/digits`.
    pub(crate) fn parse_prefix(text: &str, start: usize) -> Result<(Rational, usize), ParseError> {
        let bytes = text.as_bytes();
        let mut pos = start;
        let negative = bytes.get(pos) == Some(&b'-');
        if negative {
            pos += 1;
        }
        let numer_start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if pos == numer_start {
            return Err(ParseError { offset: pos, expected: vec!["digit"] });
        }
        let mut numer: BigInt = text[numer_start..pos].parse().expect("ascii digits");
        if negative {
            numer = -numer;
        }
        let mut denom = BigInt::one();
        if bytes.get(pos) == Some(&b'/') {
            pos += 1;
            let denom_start = pos;
            while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
                pos += 1;
            }
            if pos == denom_start {
                return Err(ParseError { offset: pos, expected: vec!["digit"] });
            }
            denom = text[denom_start..pos].parse().expect("ascii digits");
            if denom.is_zero() {
                return Err(ParseError { offset: denom_start, expected: vec!["positive denominator"] });
            }
        }
        Ok((Rational(BigRational::new(numer, denom)), pos - start))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = ParseError;

    /// Strict form: decimal integer or `p/q` with `q > 0`, no whitespace.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let (value, used) = Rational::parse_prefix(s, 0)?;
        if used != s.len() {
            return Err(ParseError { offset: used, expected: vec!["'/'", "end of input"] });
        }
        Ok(value)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! from_int {
    ($($t:ty),*) => {$(
        impl From<$t> for Rational {
            fn from(n: $t) -> Self {
                Rational::from_integer(n)
            }
        }
    )*};
}
from_int!(i32, i64, i128, u32, u64, usize);

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
    };
}
binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// `re + im·i` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComplexScalar {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexScalar {
    pub fn new(re: impl Into<Rational>, im: impl Into<Rational>) -> Self {
        ComplexScalar { re: re.into(), im: im.into() }
    }

    pub fn i() -> Self {
        ComplexScalar::new(0, 1)
    }

    pub fn add(&self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    pub fn mul(&self, rhs: &ComplexScalar) -> ComplexScalar {
        ComplexScalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }

    /// The 2×2 real matrix `[[a, -b], [b, a]]` of `a + bi`.
    pub fn phi(&self) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![self.re.clone(), -&self.im],
            vec![self.im.clone(), self.re.clone()],
        ])
    }
}
