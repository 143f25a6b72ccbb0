//! Real quaternions `H` and complex quaternions `H_C`.
//!
//! The basis is `{1, e1, e2, e3}` with `e_n² = -1` and the cyclic table
//! `e1e2 = e3`, `e2e3 = e1`, `e3e1 = e2`. This is the table whose left
//! regular representation has the column layout used by [`crate::repr::lambda`].
//!
//! A complex quaternion `X = x + iy` is stored as the pair `(x, y)`. Its
//! product is the twisted rule `XA = xa - y*b + i(x*b + ya)`, under which the
//! complex unit does not commute with `e2` and `e3`. The ordinary product with
//! a central `i` is available as [`Biquaternion::mul_classical`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::scalar::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion(pub [Rational; 4]);

impl Quaternion {
    pub fn new(a0: impl Into<Rational>, a1: impl Into<Rational>, a2: impl Into<Rational>, a3: impl Into<Rational>) -> Self {
        Quaternion([a0.into(), a1.into(), a2.into(), a3.into()])
    }

    pub fn zero() -> Self {
        Quaternion::default()
    }

    pub fn one() -> Self {
        Quaternion::scalar(Rational::one())
    }

    pub fn scalar(r: Rational) -> Self {
        Quaternion([r, Rational::zero(), Rational::zero(), Rational::zero()])
    }

    /// Basis unit `e_n` for `n` in `1..=3`; `unit(0)` is `1`.
    pub fn unit(n: usize) -> Self {
        let mut q = Quaternion::zero();
        q.0[n] = Rational::one();
        q
    }

    pub fn e1() -> Self {
        Quaternion::unit(1)
    }

    pub fn e2() -> Self {
        Quaternion::unit(2)
    }

    pub fn e3() -> Self {
        Quaternion::unit(3)
    }

    pub fn coeffs(&self) -> &[Rational; 4] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    /// True when the `e1, e2, e3` parts vanish.
    pub fn is_scalar(&self) -> bool {
        self.0[1..].iter().all(Rational::is_zero)
    }

    pub fn mul(&self, rhs: &Quaternion) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &rhs.0;
        Quaternion([
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        ])
    }

    pub fn add(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|k| &self.0[k] + &rhs.0[k]))
    }

    pub fn sub(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion(std::array::from_fn(|k| &self.0[k] - &rhs.0[k]))
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion(std::array::from_fn(|k| -&self.0[k]))
    }

    pub fn scale(&self, r: &Rational) -> Quaternion {
        Quaternion(std::array::from_fn(|k| &self.0[k] * r))
    }

    /// `a0 - a1e1 - a2e2 - a3e3`.
    pub fn conj(&self) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        Quaternion([a0.clone(), -a1, -a2, -a3])
    }

    /// `a0 + a1e1 - a2e2 - a3e3`: flips the `e2` and `e3` parts only.
    pub fn star(&self) -> Quaternion {
        let [a0, a1, a2, a3] = &self.0;
        Quaternion([a0.clone(), a1.clone(), -a2, -a3])
    }

    /// Sum of squared coefficients, equal to the scalar `q·conj(q)`.
    pub fn norm(&self) -> Rational {
        self.0.iter().fold(Rational::zero(), |acc, c| acc + c.square())
    }

    /// `conj(q) / n(q)`.
    pub fn inverse(&self) -> Result<Quaternion> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv = n.recip()?;
        Ok(self.conj().scale(&inv))
    }
}

impl fmt::Display for Quaternion {
    /// Literal form accepted by [`crate::literal::parse_quaternion`], e.g. `1+2e1-3/2e3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if wrote {
                f.write_str("+")?;
            }
            if k == 0 {
                write!(f, "{magnitude}")?;
            } else {
                if !magnitude.is_one() {
                    write!(f, "{magnitude}")?;
                }
                write!(f, "e{k}")?;
            }
            wrote = true;
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quaternion({self})")
    }
}

impl FromStr for Quaternion {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        crate::literal::parse_quaternion(s)
    }
}

impl From<Rational> for Quaternion {
    fn from(r: Rational) -> Self {
        Quaternion::scalar(r)
    }
}

impl From<i64> for Quaternion {
    fn from(n: i64) -> Self {
        Quaternion::scalar(n.into())
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::add(self, rhs)
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::sub(self, rhs)
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::mul(self, rhs)
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::neg(self)
    }
}

/// Complex quaternion `x + iy` with real part `x` and imaginary part `y`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Biquaternion {
    pub re: Quaternion,
    pub im: Quaternion,
}

impl Biquaternion {
    pub fn new(re: Quaternion, im: Quaternion) -> Self {
        Biquaternion { re, im }
    }

    pub fn zero() -> Self {
        Biquaternion::default()
    }

    pub fn one() -> Self {
        Biquaternion::real(Quaternion::one())
    }

    /// The complex unit `i = 0 + i·1`.
    pub fn i() -> Self {
        Biquaternion::new(Quaternion::zero(), Quaternion::one())
    }

    pub fn real(q: Quaternion) -> Self {
        Biquaternion::new(q, Quaternion::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Twisted product `(x + iy)(a + ib) = xa - y*b + i(x*b + ya)`.
    ///
    /// This is the multiplication under which [`crate::repr::gamma`] is
    /// multiplicative and [`crate::repr::theta`] anti-multiplicative.
    pub fn mul(&self, rhs: &Biquaternion) -> Biquaternion {
        let (x, y) = (&self.re, &self.im);
        let (a, b) = (&rhs.re, &rhs.im);
        Biquaternion {
            re: x.mul(a).sub(&y.star().mul(b)),
            im: x.star().mul(b).add(&y.mul(a)),
        }
    }

    /// Complexified product with a central `i`: `xa - yb + i(xb + ya)`.
    pub fn mul_classical(&self, rhs: &Biquaternion) -> Biquaternion {
        let (x, y) = (&self.re, &self.im);
        let (a, b) = (&rhs.re, &rhs.im);
        Biquaternion {
            re: x.mul(a).sub(&y.mul(b)),
            im: x.mul(b).add(&y.mul(a)),
        }
    }

    pub fn add(&self, rhs: &Biquaternion) -> Biquaternion {
        Biquaternion { re: self.re.add(&rhs.re), im: self.im.add(&rhs.im) }
    }

    pub fn sub(&self, rhs: &Biquaternion) -> Biquaternion {
        Biquaternion { re: self.re.sub(&rhs.re), im: self.im.sub(&rhs.im) }
    }

    pub fn neg(&self) -> Biquaternion {
        Biquaternion { re: self.re.neg(), im: self.im.neg() }
    }

    pub fn scale(&self, r: &Rational) -> Biquaternion {
        Biquaternion { re: self.re.scale(r), im: self.im.scale(r) }
    }

    /// `conj(x) + i·conj(y)`: negates the `e1, e2, e3` parts of every
    /// complex coefficient.
    pub fn conj(&self) -> Biquaternion {
        Biquaternion { re: self.re.conj(), im: self.im.conj() }
    }

    /// `x* + iy`: the star acts on the real part only.
    pub fn star(&self) -> Biquaternion {
        Biquaternion { re: self.re.star(), im: self.im.clone() }
    }

    /// `x + e1·y`, the substitution `i ↦ e1`. Not injective: `1 + i·e1 ↦ 0`.
    pub fn collapse(&self) -> Quaternion {
        self.re.add(&Quaternion::e1().mul(&self.im))
    }
}

impl fmt::Display for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.re, self.im)
    }
}

impl fmt::Debug for Biquaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Biquaternion({self})")
    }
}

impl FromStr for Biquaternion {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        crate::literal::parse_biquaternion(s)
    }
}

impl From<Quaternion> for Biquaternion {
    fn from(q: Quaternion) -> Self {
        Biquaternion::real(q)
    }
}

/// Both literal types serialize as their literal strings.
macro_rules! literal_serde {
    ($ty:ty) => {
        impl serde::Serialize for $ty {
            fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                s.collect_str(self)
            }
        }

        impl<'de> serde::Deserialize<'de> for $ty {
            fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                let text = String::deserialize(d)?;
                text.parse().map_err(serde::de::Error::custom)
            }
        }
    };
}

literal_serde!(Quaternion);
literal_serde!(Biquaternion);
