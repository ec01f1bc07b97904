//! Polynomials with nonnegative integer coefficients.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Coeff = u128;

/// A polynomial in `N[x]`, coefficient of `x^k` at index `k`.
///
/// Trailing zeros are always trimmed, so the zero polynomial has no
/// coefficients and equality is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FPoly {
    coeffs: Vec<Coeff>,
}

impl FPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> FPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FPoly { coeffs }
    }

    pub fn zero() -> FPoly {
        FPoly::default()
    }

    pub fn one() -> FPoly {
        FPoly::new(vec![1])
    }

    /// `c · x^k`
    pub fn monomial(c: Coeff, k: usize) -> FPoly {
        let mut v = vec![0; k + 1];
        v[k] = c;
        FPoly::new(v)
    }

    /// `(1 + x)^n`
    pub fn one_plus_x_pow(n: usize) -> FPoly {
        let base = FPoly::new(vec![1, 1]);
        (0..n).fold(FPoly::one(), |acc, _| &acc * &base)
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Sum of coefficients.
    pub fn at_one(&self) -> Coeff {
        self.coeffs.iter().sum()
    }

    /// Exact evaluation at an integer point.
    pub fn eval(&self, x: i128) -> i128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0i128, |acc, &c| acc * x + c as i128)
    }

    /// Multiplication by `x`.
    pub fn shift_up(&self) -> FPoly {
        if self.is_zero() {
            return FPoly::zero();
        }
        let mut v = Vec::with_capacity(self.coeffs.len() + 1);
        v.push(0);
        v.extend_from_slice(&self.coeffs);
        FPoly { coeffs: v }
    }

    /// Division by `x`; fails unless the constant term is zero.
    pub fn div_x(&self) -> Result<FPoly> {
        match self.coeffs.first() {
            None => Ok(FPoly::zero()),
            Some(0) => Ok(FPoly::new(self.coeffs[1..].to_vec())),
            Some(_) => Err(Error::ConstantTerm),
        }
    }

    /// Coefficientwise `self ≤ other`.
    pub fn leq(&self, other: &FPoly) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(k, &c)| c <= other.coeff(k))
    }

    /// `self − other` in `N[x]`; fails at the first degree where the result
    /// would be negative.
    pub fn checked_sub(&self, other: &FPoly) -> Result<FPoly> {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for k in 0..n {
            let (a, b) = (self.coeff(k), other.coeff(k));
            v.push(a.checked_sub(b).ok_or(Error::NegativeCoefficient(k))?);
        }
        Ok(FPoly::new(v))
    }

    /// Signed coefficientwise difference `other − self`, padded to the
    /// longer length.
    pub fn slack_to(&self, other: &FPoly) -> Vec<i128> {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| other.coeff(k) as i128 - self.coeff(k) as i128)
            .collect()
    }
}

impl Add for &FPoly {
    type Output = FPoly;

    fn add(self, rhs: &FPoly) -> FPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Add for FPoly {
    type Output = FPoly;

    fn add(self, rhs: FPoly) -> FPoly {
        &self + &rhs
    }
}

impl Mul for &FPoly {
    type Output = FPoly;

    fn mul(self, rhs: &FPoly) -> FPoly {
        if self.is_zero() || rhs.is_zero() {
            return FPoly::zero();
        }
        let mut v = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        FPoly::new(v)
    }
}

impl Mul for FPoly {
    type Output = FPoly;

    fn mul(self, rhs: FPoly) -> FPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for FPoly {
    fn sum<I: Iterator<Item = FPoly>>(iter: I) -> FPoly {
        iter.fold(FPoly::zero(), |a, b| &a + &b)
    }
}

impl<'a> std::iter::Sum<&'a FPoly> for FPoly {
    fn sum<I: Iterator<Item = &'a FPoly>>(iter: I) -> FPoly {
        iter.fold(FPoly::zero(), |a, b| &a + b)
    }
}

impl From<Vec<Coeff>> for FPoly {
    fn from(v: Vec<Coeff>) -> FPoly {
        FPoly::new(v)
    }
}

impl fmt::Display for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[Coeff]) -> FPoly {
        FPoly::new(v.to_vec())
    }

    #[test]
    fn add_and_mul() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, 1]), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 2, 1]) + &FPoly::zero(), p(&[1, 2, 1]));
        assert_eq!(&p(&[1, 2, 1]) * &p(&[1, 2, 1]), FPoly::one_plus_x_pow(4));
        assert_eq!(&p(&[1, 2]) * &FPoly::zero(), FPoly::zero());
    }

    #[test]
    fn div_x() {
        assert_eq!(p(&[0, 1, 1]).div_x().unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, 0, 0, 1]).div_x().unwrap(), p(&[0, 0, 1]));
        assert_eq!(p(&[1, 1]).div_x(), Err(Error::ConstantTerm));
        assert_eq!(p(&[0, 0, 1]).div_x().unwrap().shift_up(), p(&[0, 0, 1]));
    }

    #[test]
    fn leq() {
        assert!(p(&[1, 1]).leq(&p(&[1, 2])));
        assert!(!p(&[1, 2]).leq(&p(&[1, 1, 1])));
        assert!(p(&[3, 0, 2]).leq(&p(&[3, 0, 2])));
        assert!(FPoly::zero().leq(&p(&[0, 1])));
    }

    #[test]
    fn checked_sub() {
        assert_eq!(p(&[2, 3, 1]).checked_sub(&p(&[1, 3])).unwrap(), p(&[1, 0, 1]));
        assert_eq!(p(&[2, 3]).checked_sub(&p(&[1, 4])), Err(Error::NegativeCoefficient(1)));
    }

    #[test]
    fn trimming_and_display() {
        assert_eq!(p(&[1, 0, 0]), p(&[1]));
        assert_eq!(p(&[1, 3, 3, 1]).to_string(), "1 + 3x + 3x^2 + x^3");
        assert_eq!(p(&[0, 2]).to_string(), "2x");
        assert_eq!(FPoly::zero().to_string(), "0");
        assert_eq!(p(&[1, 4, 4, 1]).eval(-1), 0);
        assert_eq!(serde_json::to_string(&p(&[1, 2, 1])).unwrap(), "[1,2,1]");
    }
}
