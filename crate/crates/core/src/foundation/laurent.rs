//! Multivariate Laurent polynomials with rational coefficients.
//!
//! Variables are named and kept in lexicographic order, so two polynomials
//! built from the same data serialize and hash identically. Binary
//! operations work on the union of the operands' variable lists.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;

/// Errors from Laurent polynomial arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaurentError {
    #[error("division is not exact")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable {0:?} has no value")]
    MissingValue(String),
    #[error("negative power of a non-monomial substitution for {0:?}")]
    NonInvertibleSubstitution(String),
    #[error("malformed polynomial: {0}")]
    Malformed(String),
}

/// A Laurent polynomial: a finite sum of coefficient × monomial with
/// integer (possibly negative) exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, Rational>,
}

impl LaurentPoly {
    /// The zero polynomial (no variables).
    pub fn zero() -> Self {
        LaurentPoly {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant.
    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        LaurentPoly {
            vars: Vec::new(),
            terms,
        }
    }

    /// The constant 1.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The integer constant `n`.
    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    /// The single variable `name`.
    pub fn var(name: &str) -> Self {
        Self::monomial(&[(name, 1)], Rational::one())
    }

    /// `coef · Π name^exp`.
    pub fn monomial(powers: &[(&str, i32)], coef: Rational) -> Self {
        let mut acc: BTreeMap<String, i32> = BTreeMap::new();
        for (n, e) in powers {
            *acc.entry((*n).to_string()).or_insert(0) += e;
        }
        let vars: Vec<String> = acc.keys().cloned().collect();
        let exp: Vec<i32> = acc.values().copied().collect();
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        LaurentPoly { vars, terms }
    }

    /// Builds a polynomial over `vars` (any order, no duplicates) from
    /// `(exponent vector, coefficient)` pairs; like terms are combined.
    pub fn from_terms<I>(vars: &[String], terms: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut order: Vec<usize> = (0..vars.len()).collect();
        order.sort_by(|&a, &b| vars[a].cmp(&vars[b]));
        let sorted: Vec<String> = order.iter().map(|&i| vars[i].clone()).collect();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(LaurentError::Malformed("duplicate variable".into()));
        }
        let mut out = LaurentPoly {
            vars: sorted,
            terms: BTreeMap::new(),
        };
        for (exp, c) in terms {
            if exp.len() != vars.len() {
                return Err(LaurentError::Malformed("exponent length mismatch".into()));
            }
            let e: Vec<i32> = order.iter().map(|&i| exp[i]).collect();
            out.add_term(e, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, exp: Vec<i32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for a single term (including constants).
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The constant value, when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next().unwrap();
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// True when no exponent is negative.
    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// Coefficient of the monomial with the given exponents (in `vars()` order).
    pub fn coeff(&self, exp: &[i32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Re-expresses the polynomial over a sorted superset of its variables.
    pub fn with_vars(&self, vars: &[String]) -> Self {
        if vars == self.vars.as_slice() {
            return self.clone();
        }
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .expect("variable list is not a superset")
            })
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (k, &p) in pos.iter().enumerate() {
                ne[p] = e[k];
            }
            terms.insert(ne, c.clone());
        }
        LaurentPoly {
            vars: vars.to_vec(),
            terms,
        }
    }

    /// Drops variables that occur with exponent zero in every term.
    pub fn trim_vars(&self) -> Self {
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&k| self.terms.keys().any(|e| e[k] != 0))
            .collect();
        if keep.len() == self.vars.len() {
            return self.clone();
        }
        let vars = keep.iter().map(|&k| self.vars[k].clone()).collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (keep.iter().map(|&k| e[k]).collect(), c.clone()))
            .collect();
        LaurentPoly { vars, terms }
    }

    /// Equality of values, ignoring unused variables in the variable lists.
    pub fn same_value(&self, other: &LaurentPoly) -> bool {
        self.trim_vars() == other.trim_vars()
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let s: BTreeSet<&String> = a.iter().chain(b).collect();
        s.into_iter().cloned().collect()
    }

    fn aligned(&self, other: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let u = Self::union_vars(&self.vars, &other.vars);
        (self.with_vars(&u), other.with_vars(&u))
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, v)| (e.clone(), v.clone() * c.clone()))
                .collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = LaurentPoly::one().with_vars(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (zero vector for zero).
    fn min_exponents(&self) -> Vec<i32> {
        let mut m = vec![i32::MAX; self.vars.len()];
        for e in self.terms.keys() {
            for (k, &x) in e.iter().enumerate() {
                m[k] = m[k].min(x);
            }
        }
        if self.terms.is_empty() {
            m.iter_mut().for_each(|x| *x = 0);
        }
        m
    }

    fn shift(&self, by: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact division `self / q`.
    ///
    /// Both operands are shifted by monomials to polynomials whose every
    /// variable occurs to power zero somewhere; the quotient of such
    /// polynomials, when it exists as a Laurent polynomial, is a polynomial
    /// and is found by lexicographic leading-term division.
    pub fn divide_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if q.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        let (p, q) = self.aligned(q);
        if p.is_zero() {
            return Ok(p);
        }
        let mp = p.min_exponents();
        let mq = q.min_exponents();
        let neg = |v: &[i32]| v.iter().map(|x| -x).collect::<Vec<_>>();
        let p0 = p.shift(&neg(&mp));
        let q0 = q.shift(&neg(&mq));
        let (lq_e, lq_c) = q0
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();
        let mut rem = p0;
        let mut quot = LaurentPoly {
            vars: p.vars.clone(),
            terms: BTreeMap::new(),
        };
        while let Some((e, c)) = rem
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            if e.iter().zip(&lq_e).any(|(a, b)| a < b) {
                return Err(LaurentError::NotDivisible);
            }
            let te: Vec<i32> = e.iter().zip(&lq_e).map(|(a, b)| a - b).collect();
            let tc = c / lq_c.clone();
            for (qe, qc) in &q0.terms {
                let ne: Vec<i32> = qe.iter().zip(&te).map(|(a, b)| a + b).collect();
                rem.add_term(ne, -(qc.clone() * tc.clone()));
            }
            quot.add_term(te, tc);
        }
        let shift: Vec<i32> = mp.iter().zip(&mq).map(|(a, b)| a - b).collect();
        Ok(quot.shift(&shift))
    }

    /// Evaluates at a point; every variable must be assigned.
    pub fn evaluate(&self, point: &BTreeMap<String, Rational>) -> Result<Rational, LaurentError> {
        let vals: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                point
                    .get(v)
                    .ok_or_else(|| LaurentError::MissingValue(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &x) in e.iter().enumerate() {
                if x != 0 {
                    if x < 0 && vals[k].is_zero() {
                        return Err(LaurentError::DivisionByZero);
                    }
                    t *= vals[k].pow(x);
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Substitutes polynomials for variables (unlisted variables stay).
    ///
    /// Negative powers are allowed only when the substituted value is a monomial.
    pub fn substitute(
        &self,
        subs: &BTreeMap<String, LaurentPoly>,
    ) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::zero();
        for (e, c) in &self.terms {
            let mut t = LaurentPoly::constant(c.clone());
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = &self.vars[k];
                let base = subs
                    .get(name)
                    .cloned()
                    .unwrap_or_else(|| LaurentPoly::var(name));
                let factor = if x > 0 {
                    base.pow(x as u32)
                } else {
                    if !base.is_monomial() {
                        return Err(LaurentError::NonInvertibleSubstitution(name.clone()));
                    }
                    let (be, bc) = base.terms.iter().next().unwrap();
                    let inv = LaurentPoly {
                        vars: base.vars.clone(),
                        terms: [(be.iter().map(|v| -v).collect(), bc.recip())]
                            .into_iter()
                            .collect(),
                    };
                    inv.pow((-x) as u32)
                };
                t = &t * &factor;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Partial derivative with respect to `var`.
    pub fn derivative(&self, var: &str) -> LaurentPoly {
        let Some(k) = self.vars.iter().position(|v| v == var) else {
            return LaurentPoly {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        };
        let mut out = LaurentPoly {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            if e[k] != 0 {
                let mut ne = e.clone();
                ne[k] -= 1;
                out.add_term(ne, c.clone() * Rational::from_int(e[k] as i64));
            }
        }
        out
    }

    /// Keeps only terms of total degree at most `cap`.
    pub fn truncate_total_degree(&self, cap: i32) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<i32>() <= cap)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            a.add_term(e, -c);
        }
        a
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = self.aligned(rhs);
        let mut out = LaurentPoly {
            vars: a.vars.clone(),
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Rational::from_int(-1))
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl fmt::Display for LaurentPoly {
    /// Compact sorted-monomial form, e.g. `x^2*y^-1 + 3/2*x - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(k, &x)| {
                    if x == 1 {
                        self.vars[k].clone()
                    } else {
                        format!("{}^{}", self.vars[k], x)
                    }
                })
                .collect();
            let neg = c.signum() < 0;
            let a = c.abs();
            let coef = if a.is_integer() {
                a.numer().to_string()
            } else {
                a.to_string()
            };
            let body = match (mono.is_empty(), a == Rational::one()) {
                (true, _) => coef,
                (false, true) => mono.join("*"),
                (false, false) => format!("{}*{}", coef, mono.join("*")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<i32>,
    coef: Rational,
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    vars: Vec<String>,
    terms: Vec<TermJson>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentJson {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: e.clone(),
                    coef: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = LaurentJson::deserialize(d)?;
        LaurentPoly::from_terms(&j.vars, j.terms.into_iter().map(|t| (t.exp, t.coef)))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> LaurentPoly {
        LaurentPoly::var("x")
    }
    fn y() -> LaurentPoly {
        LaurentPoly::var("y")
    }

    #[test]
    fn polynomial_division() {
        let p = &x().pow(2) - &LaurentPoly::one();
        let q = &x() - &LaurentPoly::one();
        assert_eq!(p.divide_exact(&q).unwrap(), &x() + &LaurentPoly::one());
    }

    #[test]
    fn monomial_division() {
        let p = &LaurentPoly::one() + &y();
        let r = p.divide_exact(&x()).unwrap();
        let xi = LaurentPoly::monomial(&[("x", -1)], Rational::one());
        let xiy = LaurentPoly::monomial(&[("x", -1), ("y", 1)], Rational::one());
        assert!(r.same_value(&(&xi + &xiy)));

        let p = &(&LaurentPoly::one() + &x()) + &y();
        let r = p.divide_exact(&(&x() * &y())).unwrap();
        let expect = &(&LaurentPoly::monomial(&[("x", -1), ("y", -1)], Rational::one())
            + &LaurentPoly::monomial(&[("y", -1)], Rational::one()))
            + &LaurentPoly::monomial(&[("x", -1)], Rational::one());
        assert_eq!(r, expect);
    }

    #[test]
    fn inexact_division_is_reported() {
        let p = &x() + &LaurentPoly::one();
        let q = &y() + &LaurentPoly::one();
        assert_eq!(p.divide_exact(&q), Err(LaurentError::NotDivisible));
        assert_eq!(
            p.divide_exact(&LaurentPoly::zero()),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn laurent_divisor_with_negative_exponents() {
        // (x/y + 1) * (x^-2 + y) divided by (x/y + 1).
        let a =
            &LaurentPoly::monomial(&[("x", 1), ("y", -1)], Rational::one()) + &LaurentPoly::one();
        let b = &LaurentPoly::monomial(&[("x", -2)], Rational::one()) + &y();
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&a).unwrap(), b.with_vars(prod.vars()));
    }

    #[test]
    fn display_and_json() {
        let p = &(&x().pow(2) * &LaurentPoly::monomial(&[("y", -1)], Rational::one()))
            - &LaurentPoly::constant(Rational::new(3, 2));
        assert_eq!(p.to_string(), "x^2*y^-1 - 3/2");
        let j = serde_json::to_string(&p).unwrap();
        assert_eq!(
            j,
            r#"{"vars":["x","y"],"terms":[{"exp":[0,0],"coef":"-3/2"},{"exp":[2,-1],"coef":"1/1"}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&j).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn variables_sorted_at_construction() {
        let p = LaurentPoly::from_terms(
            &["y".to_string(), "x".to_string()],
            vec![(vec![1, 2], Rational::one())],
        )
        .unwrap();
        assert_eq!(p.vars(), &["x".to_string(), "y".to_string()]);
        assert_eq!(p.coeff(&[2, 1]), Rational::one());
    }

    #[test]
    fn evaluate_substitute_derivative() {
        let p = &(&x() * &y()) + &x().pow(3);
        let pt: BTreeMap<String, Rational> = [
            ("x".to_string(), Rational::from_int(2)),
            ("y".to_string(), Rational::from_int(5)),
        ]
        .into();
        assert_eq!(p.evaluate(&pt).unwrap(), Rational::from_int(18));
        let subs: BTreeMap<String, LaurentPoly> =
            [("y".to_string(), &x() + &LaurentPoly::one())].into();
        let s = p.substitute(&subs).unwrap();
        assert!(s.same_value(&(&(&x().pow(3) + &x().pow(2)) + &x())));
        assert!(p
            .derivative("x")
            .same_value(&(&y() + &x().pow(2).scale(&Rational::from_int(3)))));
    }
}
