//! Exact rational numbers with a machine-word fast path.
//!
//! A [`Rational`] is always stored in lowest terms with a positive
//! denominator. Values whose numerator and denominator fit in an `i64` are
//! kept inline; everything else falls back to an arbitrary-precision
//! [`BigRational`]. The representation is canonical (a value that fits is
//! never stored as a big rational), so structural equality is value equality.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::field::Field;

#[derive(Clone, Debug)]
enum Repr {
    /// `(numerator, denominator)`, reduced, denominator > 0, numerator != i64::MIN.
    Small(i64, i64),
    Big(BigRational),
}

/// An exact rational number.
#[derive(Clone, Debug)]
pub struct Rational(Repr);

/// Error returned when a string is not of the form `p` or `p/q`.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {0:?}")]
pub struct ParseRationalError(pub String);

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Rational {
    /// The rational `n / 1`.
    pub fn from_int(n: i64) -> Self {
        Self::from_i128_pair(n as i128, 1)
    }

    /// The rational `n / d`; panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_i128_pair(n as i128, d as i128)
    }

    /// Builds a rational from big integers; panics if `d == 0`.
    pub fn from_bigints(n: BigInt, d: BigInt) -> Self {
        assert!(!d.is_zero(), "zero denominator");
        Self::from_big(BigRational::new(n, d))
    }

    fn from_i128_pair(mut n: i128, mut d: i128) -> Self {
        debug_assert!(d != 0);
        if d < 0 {
            n = -n;
            d = -d;
        }
        let g = gcd_i128(n, d);
        if g > 1 {
            n /= g;
            d /= g;
        }
        if n == 0 {
            return Rational(Repr::Small(0, 1));
        }
        match (i64::try_from(n), i64::try_from(d)) {
            (Ok(a), Ok(b)) if a != i64::MIN => Rational(Repr::Small(a, b)),
            _ => Rational(Repr::Big(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            ))),
        }
    }

    fn from_big(r: BigRational) -> Self {
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN {
                return Rational(Repr::Small(n, d));
            }
        }
        Rational(Repr::Big(r))
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(n, d) => BigRational::new_raw(BigInt::from(*n), BigInt::from(*d)),
            Repr::Big(r) => r.clone(),
        }
    }

    /// Numerator in lowest terms.
    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(n, _) => BigInt::from(*n),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    /// Positive denominator in lowest terms.
    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(_, d) => BigInt::from(*d),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    /// True when the denominator is 1.
    pub fn is_integer(&self) -> bool {
        match &self.0 {
            Repr::Small(_, d) => *d == 1,
            Repr::Big(r) => r.is_integer(),
        }
    }

    /// The value as an `i64` when it is an integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        match &self.0 {
            Repr::Small(n, 1) => Some(*n),
            _ => None,
        }
    }

    /// Sign: -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match &self.0 {
            Repr::Small(n, _) => n.signum() as i32,
            Repr::Big(r) => {
                if r.is_negative() {
                    -1
                } else if r.is_zero() {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// Absolute value.
    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Integer power (negative exponents invert; panics on `0^-k`).
    pub fn pow(&self, e: i32) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut acc = Rational::one();
        for _ in 0..e.unsigned_abs() {
            acc *= base.clone();
        }
        acc
    }

    /// Multiplicative inverse; panics on zero.
    pub fn recip(&self) -> Self {
        match &self.0 {
            Repr::Small(n, d) => {
                assert!(*n != 0, "division by zero");
                Self::from_i128_pair(*d as i128, *n as i128)
            }
            Repr::Big(r) => Self::from_big(r.recip()),
        }
    }

    /// Reduction modulo a prime `p`; `None` when `p` divides the denominator.
    pub fn mod_prime(&self, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let d = self.denom().mod_floor(&pb);
        if d.is_zero() {
            return None;
        }
        let n = self.numer().mod_floor(&pb);
        let dinv = d.modpow(&(pb.clone() - 2u32), &pb);
        ((n * dinv) % pb).to_u64()
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(Repr::Small(0, 1))
    }
    fn one() -> Self {
        Rational(Repr::Small(1, 1))
    }
    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small(0, _))
    }
    fn inv(&self) -> Self {
        self.recip()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl Rational {
    /// Zero.
    pub fn zero() -> Self {
        <Self as Field>::zero()
    }
    /// One.
    pub fn one() -> Self {
        <Self as Field>::one()
    }
    /// True for zero.
    pub fn is_zero(&self) -> bool {
        <Self as Field>::is_zero(self)
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::from_int(v)
    }
}

impl From<i32> for Rational {
    fn from(v: i32) -> Self {
        Rational::from_int(v as i64)
    }
}

impl From<BigInt> for Rational {
    fn from(v: BigInt) -> Self {
        Rational::from_big(BigRational::from_integer(v))
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
            if b == d {
                return Self::from_i128_pair(a + c, b);
            }
            if let Some(n) = (a * d).checked_add(c * b) {
                return Self::from_i128_pair(n, b * d);
            }
        }
        Self::from_big(self.to_big() + rhs.to_big())
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        self + (-rhs)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        if let (Repr::Small(a, b), Repr::Small(c, d)) = (&self.0, &rhs.0) {
            return Self::from_i128_pair(*a as i128 * *c as i128, *b as i128 * *d as i128);
        }
        Self::from_big(self.to_big() * rhs.to_big())
    }
}

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        self * rhs.recip()
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(n, d) => Rational(Repr::Small(-n, d)),
            Repr::Big(r) => Self::from_big(-r),
        }
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) + rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) - rhs;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        *self = std::mem::take(self) * rhs;
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small(n, d) => {
                0u8.hash(state);
                n.hash(state);
                d.hash(state);
            }
            Repr::Big(r) => {
                1u8.hash(state);
                r.hash(state);
            }
        }
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a, b), Repr::Small(c, d)) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    /// Canonical form `p/q` (the denominator is always written).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(n, d) => write!(f, "{n}/{d}"),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl FromStr for Rational {
    type Err = ParseRationalError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError(s.to_string());
        let t = s.trim();
        let (n, d) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let n: BigInt = n.parse().map_err(|_| err())?;
        let d: BigInt = d.parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        Ok(Rational::from_bigints(n, d))
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Lit {
            Str(String),
            Int(i64),
        }
        match Lit::deserialize(d)? {
            Lit::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Lit::Int(i) => Ok(Rational::from_int(i)),
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl One for Rational {
    fn one() -> Self {
        Rational::one()
    }
}

impl Zero for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizes_sign_and_gcd() {
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(0, -7), Rational::zero());
        assert_eq!(Rational::new(6, 3).to_string(), "2/1");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_int(i64::MAX);
        let sq = big.clone() * big.clone();
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq / big.clone();
        assert!(matches!(back.0, Repr::Small(_, _)));
        assert_eq!(back, big);
        let s = Rational::from_int(i64::MAX) + Rational::from_int(i64::MAX);
        assert_eq!(
            s - Rational::from_int(i64::MAX),
            Rational::from_int(i64::MAX)
        );
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["3/4", "-5/1", "0/1", "123456789012345678901234567891/2"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert_eq!("6/8".parse::<Rational>().unwrap(), Rational::new(3, 4));
        assert_eq!("7".parse::<Rational>().unwrap(), Rational::from_int(7));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn ordering_and_mod_prime() {
        assert!(Rational::new(1, 3) < Rational::new(1, 2));
        assert!(Rational::new(-1, 2) < Rational::zero());
        assert_eq!(Rational::new(1, 2).mod_prime(5), Some(3));
        assert_eq!(Rational::new(1, 5).mod_prime(5), None);
        assert_eq!(Rational::new(-1, 1).mod_prime(7), Some(6));
    }
}
