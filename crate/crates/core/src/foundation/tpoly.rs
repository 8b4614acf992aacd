//! Polynomials in a formal parameter `t` with multivariate coefficients.
//!
//! These carry the entries of loop-group matrices such as
//! `g₂₁ = D t + E t²`, whose coefficients are themselves polynomials.

use std::fmt;

use super::laurent::LaurentPoly;

/// A Laurent polynomial in `t` with [`LaurentPoly`] coefficients.
///
/// `coeffs[k]` is the coefficient of `t^(low + k)`; the first and last
/// stored coefficients are nonzero unless the polynomial is zero (in which
/// case `coeffs` is empty).
#[derive(Clone, PartialEq, Eq)]
pub struct TPoly {
    low: i32,
    coeffs: Vec<LaurentPoly>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    /// Builds `Σ coeffs[k] t^(low + k)` and normalizes.
    pub fn new(low: i32, coeffs: Vec<LaurentPoly>) -> Self {
        let mut p = TPoly { low, coeffs };
        p.normalize();
        p
    }

    /// A constant (degree 0 in `t`).
    pub fn constant(c: LaurentPoly) -> Self {
        Self::new(0, vec![c])
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest power of `t` present (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest power of `t` present, if any.
    pub fn high(&self) -> Option<i32> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    /// Coefficient of `t^k` (zero when absent).
    pub fn coeff(&self, k: i32) -> LaurentPoly {
        let idx = k - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            LaurentPoly::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn add(&self, other: &TPoly) -> TPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().unwrap().max(other.high().unwrap());
        let coeffs = (low..=high)
            .map(|k| &self.coeff(k) + &other.coeff(k))
            .collect();
        TPoly::new(low, coeffs)
    }

    pub fn neg(&self) -> TPoly {
        TPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &TPoly) -> TPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &TPoly) -> TPoly {
        if self.is_zero() || other.is_zero() {
            return TPoly::zero();
        }
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut coeffs = vec![LaurentPoly::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        TPoly::new(self.low + other.low, coeffs)
    }
}

/// Returns the coefficient of `t^k` in `g`.
pub fn tpoly_coeff(g: &TPoly, k: i32) -> LaurentPoly {
    g.coeff(k)
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({c})*t^{}", self.low + k as i32))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> LaurentPoly {
        LaurentPoly::var(n)
    }

    #[test]
    fn coefficient_extraction() {
        let g21 = TPoly::new(0, vec![LaurentPoly::zero(), v("D"), v("E")]);
        assert_eq!(tpoly_coeff(&g21, 1), v("D"));
        assert_eq!(g21.low(), 1);
        let g22 = TPoly::new(0, vec![LaurentPoly::one(), v("F"), v("G")]);
        assert_eq!(tpoly_coeff(&g22, 0), LaurentPoly::one());
        let g12 = TPoly::new(0, vec![v("B"), v("C")]);
        assert!(tpoly_coeff(&g12, 2).is_zero());
    }

    #[test]
    fn product_of_linear_factors() {
        // (1 + a t)(1 - a t) = 1 - a^2 t^2
        let a = v("a");
        let p = TPoly::new(0, vec![LaurentPoly::one(), a.clone()]);
        let m = TPoly::new(0, vec![LaurentPoly::one(), -&a]);
        let r = p.mul(&m);
        assert_eq!(r.coeff(0), LaurentPoly::one());
        assert!(r.coeff(1).is_zero());
        assert!(r.coeff(2).same_value(&(-&a.pow(2))));
    }
}
