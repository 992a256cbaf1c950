use serde::Serialize;

use super::multi::MultiPoly;
use super::uni::UniPoly;
use super::Coefficient;

/// Power series in `t` truncated after `t^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> PowerSeries<C> {
    /// # Panics
    /// If `coeffs` is empty.
    pub fn new(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least its constant term");
        PowerSeries { coeffs }
    }

    /// `c` followed by zeros up to `t^order`.
    pub fn constant(c: C, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &C {
        &self.coeffs[n]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<C> = self.coeffs.iter().take(order + 1).cloned().collect();
        let zero = coeffs[0].zero_like();
        coeffs.resize(order + 1, zero);
        PowerSeries { coeffs }
    }

    pub fn plus(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=order).map(|k| self.coeffs[k].plus(&rhs.coeffs[k])).collect() }
    }

    pub fn minus(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        PowerSeries { coeffs: (0..=order).map(|k| self.coeffs[k].minus(&rhs.coeffs[k])).collect() }
    }

    /// Product truncated to `order`, which may exceed neither operand's order.
    pub fn times(&self, rhs: &Self, order: usize) -> Self {
        assert!(order <= self.order() && order <= rhs.order());
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        PowerSeries { coeffs }
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let order = self.order();
        let coeffs = (0..=order).map(|n| if n < k { zero.clone() } else { self.coeffs[n - k].clone() }).collect();
        PowerSeries { coeffs }
    }

    /// `1 / (1 - g)`; `g` must have zero constant term.
    pub fn geometric(g: &Self) -> Self {
        assert!(g.coeffs[0].is_zero(), "1/(1-g) needs g(0) = 0");
        let one = g.coeffs[0].one_like();
        let mut f: Vec<C> = Vec::with_capacity(g.coeffs.len());
        f.push(one);
        for n in 1..g.coeffs.len() {
            let mut acc = g.coeffs[0].zero_like();
            for i in 1..=n {
                if !g.coeffs[i].is_zero() {
                    acc = acc.plus(&g.coeffs[i].times(&f[n - i]));
                }
            }
            f.push(acc);
        }
        PowerSeries { coeffs: f }
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl PowerSeries<UniPoly> {
    /// `S(q; t) ↦ S(q; q^k t)`.
    pub fn substitute_q_t(&self, k: usize) -> Self {
        PowerSeries { coeffs: self.coeffs.iter().enumerate().map(|(n, c)| c.shift(k * n)).collect() }
    }
}

impl PowerSeries<MultiPoly> {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct SeriesJson<'a> {
            order: usize,
            vars: &'a [&'a str],
            coeffs: Vec<String>,
        }
        let doc = SeriesJson {
            order: self.order(),
            vars: self.coeffs[0].vars(),
            coeffs: self.coeffs.iter().map(|c| c.to_string()).collect(),
        };
        serde_json::to_string(&doc).expect("plain struct serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_series() {
        // 1/(1 - t - t^2) gives Fibonacci numbers.
        let one = UniPoly::one();
        let g = PowerSeries::new(vec![
            UniPoly::zero(),
            one.clone(),
            one.clone(),
            UniPoly::zero(),
            UniPoly::zero(),
            UniPoly::zero(),
        ]);
        let f = PowerSeries::geometric(&g);
        let values: Vec<String> = f.coeffs().iter().map(|c| c.to_string()).collect();
        assert_eq!(values, ["1", "1", "2", "3", "5", "8"]);
        let back = f.times(&PowerSeries::constant(one.clone(), 5).minus(&g), 5);
        assert_eq!(back, PowerSeries::constant(one, 5));
    }

    #[test]
    fn shifting_and_substitution() {
        let s = PowerSeries::new(vec![UniPoly::one(), UniPoly::one(), UniPoly::one()]);
        assert_eq!(s.shift(1).coeffs(), &[UniPoly::zero(), UniPoly::one(), UniPoly::one()]);
        assert_eq!(s.substitute_q_t(1).coeff(2), &UniPoly::q_pow(2));
        assert_eq!(s.truncate(4).order(), 4);
    }

    #[test]
    fn json_schema() {
        let s = PowerSeries::new(vec![MultiPoly::one(MultiPoly::Q), MultiPoly::var(MultiPoly::Q, "q")]);
        assert_eq!(s.to_json(), r#"{"order":1,"vars":["q"],"coeffs":["1","q"]}"#);
    }
}
