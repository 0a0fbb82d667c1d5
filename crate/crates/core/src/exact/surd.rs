use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

// trial division bound for square-free extraction
const TRIAL_LIMIT: u64 = 1 << 20;

/// `a + b*sqrt(d)` with rational `a`, `b` and square-free integer `d >= 0`.
///
/// Canonical form: `b == 0` exactly when `d == 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    a: BigRational,
    b: BigRational,
    d: BigInt,
}

/// Splits `n > 0` into `(s, r)` with `n = s^2 * r`.
fn square_part(n: &BigInt) -> (BigInt, BigInt) {
    let mut r = n.clone();
    let mut s = BigInt::one();
    let mut p: u64 = 2;
    while p < TRIAL_LIMIT {
        let pb = BigInt::from(p);
        if &pb * &pb > r {
            break;
        }
        let p2 = &pb * &pb;
        while (&r % &p2).is_zero() {
            r /= &p2;
            s *= &pb;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    let root = r.sqrt();
    if &root * &root == r {
        s *= root;
        r = BigInt::one();
    }
    (s, r)
}

impl QuadraticSurd {
    /// Builds `a + b*sqrt(d)`, pulling square factors out of `d`.
    pub fn new(a: BigRational, b: BigRational, d: BigInt) -> Result<Self> {
        if d.is_negative() {
            return Err(Error::NegativeRadicand(d.to_string()));
        }
        if b.is_zero() || d.is_zero() {
            return Ok(Self::from_rational(a));
        }
        let (s, r) = square_part(&d);
        let b = b * BigRational::from_integer(s);
        if r.is_one() {
            return Ok(Self::from_rational(a + b));
        }
        Ok(Self { a, b, d: r })
    }

    pub fn from_rational(a: BigRational) -> Self {
        Self {
            a,
            b: BigRational::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn from_integer<T: Into<BigInt>>(n: T) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// `sqrt(r)` for a non-negative rational `r`.
    pub fn sqrt_of(r: &BigRational) -> Result<Self> {
        let num = r.numer() * r.denom();
        let den = r.denom().clone();
        Self::new(
            BigRational::zero(),
            BigRational::new(BigInt::one(), den),
            num,
        )
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn surd_part(&self) -> &BigRational {
        &self.b
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        let f = |r: &BigRational| {
            r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
        };
        f(&self.a) + f(&self.b) * self.d.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Rewrites both operands over one radicand.
    fn unify(&self, other: &Self) -> Result<(Self, Self, BigInt)> {
        if self.b.is_zero() {
            let d = other.d.clone();
            let mut x = self.clone();
            x.d = d.clone();
            return Ok((x, other.clone(), d));
        }
        if other.b.is_zero() || self.d == other.d {
            let d = self.d.clone();
            let mut y = other.clone();
            y.d = d.clone();
            return Ok((self.clone(), y, d));
        }
        // sqrt(d2) = sqrt(d1*d2)/sqrt(d1) when d1*d2 is a square
        let prod = &self.d * &other.d;
        let root = prod.sqrt();
        if &root * &root == prod {
            let scale = BigRational::new(root, self.d.clone());
            let y = Self {
                a: other.a.clone(),
                b: &other.b * scale,
                d: self.d.clone(),
            };
            return Ok((self.clone(), y, self.d.clone()));
        }
        Err(Error::MixedRadicand(
            self.d.to_string(),
            other.d.to_string(),
        ))
    }

    fn canonical(a: BigRational, b: BigRational, d: BigInt) -> Self {
        if b.is_zero() || d.is_zero() {
            Self::from_rational(a)
        } else {
            Self { a, b, d }
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let (x, y, d) = self.unify(other)?;
        Ok(Self::canonical(x.a + y.a, x.b + y.b, d))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let (x, y, d) = self.unify(other)?;
        let dr = BigRational::from_integer(d.clone());
        let a = &x.a * &y.a + &x.b * &y.b * dr;
        let b = &x.a * &y.b + &x.b * &y.a;
        Ok(Self::canonical(a, b, d))
    }

    pub fn neg(&self) -> Self {
        Self {
            a: -self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// `a^2 - b^2 d`, the field norm.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(self.d.clone())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::canonical(
            &self.a / &n,
            -(&self.b / &n),
            self.d.clone(),
        ))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn signum(&self) -> Ordering {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal || sa == sb {
            return sb;
        }
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * BigRational::from_integer(self.d.clone());
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    /// Exact comparison; fails only on incompatible radicands.
    pub fn try_cmp(&self, other: &Self) -> Result<Ordering> {
        Ok(self.checked_sub(other)?.signum())
    }
}

fn sign_of(r: &BigRational) -> Ordering {
    match r.numer().sign() {
        Sign::Minus => Ordering::Less,
        Sign::NoSign => Ordering::Equal,
        Sign::Plus => Ordering::Greater,
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.try_cmp(other).ok()
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let mut b = self.b.clone();
        if !self.a.is_zero() {
            write!(f, "{}", self.a)?;
            if b.is_negative() {
                write!(f, " - ")?;
                b = -b;
            } else {
                write!(f, " + ")?;
            }
        } else if b.is_negative() {
            write!(f, "-")?;
            b = -b;
        }
        if b.numer().is_one() {
            write!(f, "sqrt({})", self.d)?;
        } else {
            write!(f, "{}*sqrt({})", b.numer(), self.d)?;
        }
        if !b.denom().is_one() {
            write!(f, "/{}", b.denom())?;
        }
        Ok(())
    }
}
