//! Exact scalar arithmetic for the two concrete division rings: the
//! rationals (the field case) and rational-coefficient quaternions (a
//! noncommutative division ring). No floating point anywhere; equality
//! is structural on canonical forms.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Contract every scalar ring must satisfy: an associative ring with 1
/// in which every nonzero element has a two-sided inverse. Multiplication
/// is *not* assumed commutative.
pub trait DivisionRing: Clone + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn mul(&self, other: &Self) -> Self;
    /// Two-sided multiplicative inverse. Errors with
    /// [`Error::DivisionByZero`] on zero.
    fn inv(&self) -> Result<Self>;
    fn from_int(n: i64) -> Self;
}

/// An exact rational number in canonical form: denominator positive,
/// numerator and denominator coprime.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Normalizes `num/den` into canonical form. The sign is carried by
    /// the numerator.
    pub fn new<N, D>(num: N, den: D) -> Result<Self>
    where
        N: Into<BigInt>,
        D: Into<BigInt>,
    {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer<N: Into<BigInt>>(num: N) -> Self {
        Rational(BigRational::from_integer(num.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_negative(&self) -> bool {
        self.0.numer().is_negative()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
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

/// Parses `"p/q"` or `"p"` with optional leading sign; the result is
/// canonical.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse_int = |t: &str| {
            BigInt::from_str(t).map_err(|_| Error::MalformedScalar(s.to_owned()))
        };
        match s.split_once('/') {
            None => Ok(Rational::from_integer(parse_int(s)?)),
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
        }
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

rational_binop!(Add, add);
rational_binop!(Sub, sub);
rational_binop!(Mul, mul);

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

impl DivisionRing for Rational {
    fn zero() -> Self {
        Rational(BigRational::zero())
    }

    fn one() -> Self {
        Rational(BigRational::one())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Result<Self> {
        if self.0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    fn from_int(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// A quaternion with rational coefficients: `w + x·i + y·j + z·k`.
///
/// Every nonzero element is invertible because the norm
/// `w² + x² + y² + z²` is a positive rational, which makes this a
/// concrete noncommutative division ring.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(
            Rational::from_integer(w),
            Rational::from_integer(x),
            Rational::from_integer(y),
            Rational::from_integer(z),
        )
    }

    pub fn unit_i() -> Self {
        Quaternion::from_ints(0, 1, 0, 0)
    }

    pub fn unit_j() -> Self {
        Quaternion::from_ints(0, 0, 1, 0)
    }

    pub fn unit_k() -> Self {
        Quaternion::from_ints(0, 0, 0, 1)
    }

    pub fn conjugate(&self) -> Self {
        Quaternion::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// `w² + x² + y² + z²`; zero exactly when the quaternion is zero.
    pub fn norm_squared(&self) -> Rational {
        &(&self.w * &self.w) + &(&(&self.x * &self.x) + &(&(&self.y * &self.y) + &(&self.z * &self.z)))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if DivisionRing::is_zero(self) {
            return write!(f, "0");
        }
        let mut first = true;
        for (coeff, unit) in [
            (&self.w, ""),
            (&self.x, "i"),
            (&self.y, "j"),
            (&self.z, "k"),
        ] {
            if coeff.is_zero() {
                continue;
            }
            if first {
                write!(f, "{coeff}{unit}")?;
                first = false;
            } else if coeff.is_negative() {
                write!(f, "{coeff}{unit}")?;
            } else {
                write!(f, "+{coeff}{unit}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w + &rhs.w,
            &self.x + &rhs.x,
            &self.y + &rhs.y,
            &self.z + &rhs.z,
        )
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: &Quaternion) -> Quaternion {
        Quaternion::new(
            &self.w - &rhs.w,
            &self.x - &rhs.x,
            &self.y - &rhs.y,
            &self.z - &rhs.z,
        )
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-&self.w, -&self.x, -&self.y, -&self.z)
    }
}

/// Hamilton product. Bilinear over the rationals and anticommutative on
/// the imaginary units: ij = k, jk = i, ki = j.
impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: &Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f_, g, h) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            &(&(a * e) - &(b * f_)) - &(&(c * g) + &(d * h)),
            &(&(a * f_) + &(b * e)) + &(&(c * h) - &(d * g)),
            &(&(a * g) - &(b * h)) + &(&(c * e) + &(d * f_)),
            &(&(a * h) + &(b * g)) - &(&(c * f_) - &(d * e)),
        )
    }
}

impl DivisionRing for Quaternion {
    fn zero() -> Self {
        Quaternion::from_ints(0, 0, 0, 0)
    }

    fn one() -> Self {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn inv(&self) -> Result<Self> {
        if DivisionRing::is_zero(self) {
            return Err(Error::DivisionByZero);
        }
        let scale = self.norm_squared().inv()?;
        let c = self.conjugate();
        Ok(Quaternion::new(
            &c.w * &scale,
            &c.x * &scale,
            &c.y * &scale,
            &c.z * &scale,
        ))
    }

    fn from_int(n: i64) -> Self {
        Quaternion::from_ints(n, 0, 0, 0)
    }
}
