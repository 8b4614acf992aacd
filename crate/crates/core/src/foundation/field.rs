//! The scalar interface shared by the linear-algebra kernels, and prime fields.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
}

/// An element of the prime field F_P.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    /// Reduces an integer modulo `P`.
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }

    /// The canonical representative in `0..P`.
    pub fn value(self) -> u64 {
        self.0
    }

    /// Builds an element from a representative already in `0..P`.
    pub fn from_residue(v: u64) -> Self {
        Fp(v % P)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, r: Self) -> Self {
        Fp((self.0 + r.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, r: Self) -> Self {
        Fp((self.0 + P - r.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, r: Self) -> Self {
        Fp(((self.0 as u128 * r.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, r: Self) -> Self {
        self * r.inv()
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1 % P)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn inv(&self) -> Self {
        assert!(self.0 != 0, "division by zero in F_{P}");
        self.pow(P - 2)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses_in_f7() {
        for v in 1..7 {
            let x = Fp::<7>::new(v);
            assert_eq!(x * x.inv(), Fp::one());
        }
        assert_eq!(Fp::<7>::new(-1).value(), 6);
        assert_eq!(-Fp::<5>::new(0), Fp::zero());
    }
}
