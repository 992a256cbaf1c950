use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::multi::{MultiPoly, Vars};
use super::render::render;
use super::Coefficient;

/// Dense polynomial in `q` with big-integer coefficients, lowest degree first.
/// Trailing zeros are always stripped; the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub const fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UniPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        UniPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// `q^k`.
    pub fn q_pow(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        UniPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        UniPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: usize) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Embeds the polynomial into `vars`, reading `q` as the variable `name`.
    pub fn to_multi(&self, vars: Vars, name: &str) -> MultiPoly {
        let mut out = MultiPoly::zero(vars);
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out + MultiPoly::var_pow(vars, name, k as u32).scale(c);
            }
        }
        out
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<[u32; 1]> = (0..self.coeffs.len() as u32).map(|k| [k]).collect();
        let terms = exps.iter().zip(&self.coeffs).filter(|(_, c)| !c.is_zero()).map(|(e, c)| (&e[..], c));
        f.write_str(&render(&["q"], terms))
    }
}

impl Add<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&UniPoly> for UniPoly {
    fn add_assign(&mut self, rhs: &UniPoly) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl Add for UniPoly {
    type Output = UniPoly;

    fn add(mut self, rhs: UniPoly) -> UniPoly {
        self += &rhs;
        self
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul<&UniPoly> for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Mul for UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: UniPoly) -> UniPoly {
        &self * &rhs
    }
}

impl Coefficient for UniPoly {
    fn zero_like(&self) -> Self {
        UniPoly::zero()
    }

    fn one_like(&self) -> Self {
        UniPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }

    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_rendering() {
        assert_eq!(UniPoly::from_i64s(&[5, 3, 1, 0, 0]).to_string(), "5 + 3*q + q^2");
        assert_eq!(UniPoly::from_i64s(&[0, 0]), UniPoly::zero());
        assert_eq!(UniPoly::zero().to_string(), "0");
        assert_eq!(UniPoly::from_i64s(&[0, -1, 2]).to_string(), "-q + 2*q^2");
        assert_eq!(UniPoly::from_i64s(&[1, -3]).to_string(), "1 - 3*q");
        assert_eq!(UniPoly::q_pow(6).to_string(), "q^6");
    }

    #[test]
    fn arithmetic() {
        let a = UniPoly::from_i64s(&[1, 1]);
        let b = UniPoly::from_i64s(&[1, -1]);
        assert_eq!(&a * &b, UniPoly::from_i64s(&[1, 0, -1]));
        assert_eq!(&a - &a, UniPoly::zero());
        assert_eq!(a.shift(2), UniPoly::from_i64s(&[0, 0, 1, 1]));
        assert_eq!(a.eval(&BigInt::from(3)), BigInt::from(4));
        assert_eq!((&a * &a).eval_at_one(), BigInt::from(4));
        assert_eq!(UniPoly::zero().shift(3), UniPoly::zero());
        assert_eq!(UniPoly::q_pow(2).degree(), Some(2));
        assert_eq!(UniPoly::zero().degree(), None);
    }
}
