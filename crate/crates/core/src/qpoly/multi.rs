use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::render::render;
use super::Coefficient;

/// A fixed, ordered variable list.
pub type Vars = &'static [&'static str];

/// Sparse polynomial over a fixed variable list with big-integer coefficients.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: Vars,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultiPoly {
    pub const Q: Vars = &["q"];
    pub const YQ: Vars = &["y", "q"];
    pub const XYPQ: Vars = &["x", "y", "p", "q"];
    pub const ABCD: Vars = &["a", "b", "c", "d"];

    pub fn zero(vars: Vars) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vars) -> Self {
        MultiPoly::monomial(vars, &vec![0; vars.len()], BigInt::one())
    }

    pub fn monomial(vars: Vars, exps: &[u32], coeff: BigInt) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector does not match {vars:?}");
        let mut out = MultiPoly::zero(vars);
        if !coeff.is_zero() {
            out.terms.insert(exps.to_vec(), coeff);
        }
        out
    }

    /// `name^k`.
    ///
    /// # Panics
    /// If `name` is not in `vars`.
    pub fn var_pow(vars: Vars, name: &str, k: u32) -> Self {
        let idx = vars.iter().position(|v| *v == name).unwrap_or_else(|| panic!("variable {name} not in {vars:?}"));
        let mut exps = vec![0; vars.len()];
        exps[idx] = k;
        MultiPoly::monomial(vars, &exps, BigInt::one())
    }

    pub fn var(vars: Vars, name: &str) -> Self {
        MultiPoly::var_pow(vars, name, 1)
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coeff · monomial(exps)` in place.
    pub fn add_term(&mut self, exps: &[u32], coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_default();
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(exps);
        }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly { vars: self.vars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Substitutes an integer for one variable; the variable list is kept.
    pub fn specialize(&self, name: &str, value: &BigInt) -> MultiPoly {
        let idx = self.vars.iter().position(|v| *v == name).expect("variable present");
        let mut out = MultiPoly::zero(self.vars);
        for (exps, c) in &self.terms {
            let mut e = exps.clone();
            let k = std::mem::take(&mut e[idx]);
            out.add_term(&e, &(c * num_traits::pow(value.clone(), k as usize)));
        }
        out
    }

    /// Sum of all coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    fn check_vars(&self, rhs: &MultiPoly) {
        assert_eq!(self.vars, rhs.vars, "mixing polynomials over different variable lists");
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.vars, self.terms()))
    }
}

impl Add<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;

    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul<&MultiPoly> for &MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_vars(rhs);
        let mut out = MultiPoly::zero(self.vars);
        let mut exps = vec![0; self.vars.len()];
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                for (k, slot) in exps.iter_mut().enumerate() {
                    *slot = ea[k] + eb[k];
                }
                out.add_term(&exps, &(ca * cb));
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Coefficient for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.vars)
    }

    fn one_like(&self) -> Self {
        MultiPoly::one(self.vars)
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
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
