use std::sync::Arc;

use super::series::PowerSeries;
use super::Coefficient;

/// Level function of a continued fraction, indexed from 1.
pub type Level<C> = Arc<dyn Fn(usize) -> C + Send + Sync>;

/// Numerator of a nested level as `(linear, quadratic)`, i.e. `a·t + b·t²`.
pub type Numerator<C> = Arc<dyn Fn(usize) -> (C, C) + Send + Sync>;

/// The shape of a continued fraction in `t`.
#[derive(Clone)]
pub enum FractionSpec<C> {
    /// `1/(1 - α₁t - β₁t²/(1 - α₂t - β₂t²/(…)))`.
    Jacobi { alpha: Level<C>, beta: Level<C> },
    /// `1/(1 - c₁/(1 - c₂/(…)))` with `c_k = a_k·t + b_k·t²`.
    Nested { numerator: Numerator<C> },
}

impl<C: Coefficient + 'static> FractionSpec<C> {
    pub fn jacobi(
        alpha: impl Fn(usize) -> C + Send + Sync + 'static,
        beta: impl Fn(usize) -> C + Send + Sync + 'static,
    ) -> Self {
        FractionSpec::Jacobi { alpha: Arc::new(alpha), beta: Arc::new(beta) }
    }

    pub fn nested(numerator: impl Fn(usize) -> (C, C) + Send + Sync + 'static) -> Self {
        FractionSpec::Nested { numerator: Arc::new(numerator) }
    }

    /// Number of levels that can influence coefficients up to `t^order`.
    ///
    /// For a J-fraction, reaching level `k` costs `t^{2(k-1)}`, so
    /// `⌈order/2⌉ + 1` levels suffice. A nested level costs the t-valuation
    /// of its numerator.
    pub fn default_depth(&self, order: usize) -> usize {
        match self {
            FractionSpec::Jacobi { .. } => order.div_ceil(2) + 1,
            FractionSpec::Nested { numerator } => {
                let mut offset = 0;
                let mut k = 1;
                while offset <= order {
                    match valuation(&numerator(k)) {
                        Some(v) => offset += v,
                        None => return k,
                    }
                    k += 1;
                }
                k - 1
            }
        }
    }

    /// Truncated expansion up to `t^order`.
    pub fn expand(&self, order: usize) -> PowerSeries<C> {
        self.expand_with_depth(order, self.default_depth(order))
    }

    /// Expansion with the fraction cut after `depth` levels (the tail below
    /// the last level is replaced by 1).
    pub fn expand_with_depth(&self, order: usize, depth: usize) -> PowerSeries<C> {
        let depth = depth.max(1);
        match self {
            FractionSpec::Jacobi { alpha, beta } => {
                let one = alpha(1).one_like();
                let mut tail = PowerSeries::constant(one.clone(), 0);
                for k in (1..=depth).rev() {
                    // Level k only feeds coefficients from t^{2(k-1)} upwards.
                    let Some(local) = order.checked_sub(2 * (k - 1)) else {
                        tail = PowerSeries::constant(one.clone(), 0);
                        continue;
                    };
                    let (a, b) = (alpha(k), beta(k));
                    let mut g: Vec<C> = vec![one.zero_like(); local + 1];
                    if local >= 1 {
                        g[1] = a;
                    }
                    for n in 2..=local {
                        if let Some(c) = tail.coeffs().get(n - 2) {
                            g[n] = b.times(c);
                        }
                    }
                    tail = PowerSeries::geometric(&PowerSeries::new(g));
                }
                tail.truncate(order)
            }
            FractionSpec::Nested { numerator } => {
                let levels: Vec<(C, C)> = (1..=depth).map(|k| numerator(k)).collect();
                let one = levels[0].0.one_like();
                let mut offsets = Vec::with_capacity(depth);
                let mut offset = Some(0usize);
                for c in &levels {
                    offsets.push(offset);
                    offset = match (offset, valuation(c)) {
                        (Some(o), Some(v)) => Some(o + v),
                        _ => None,
                    };
                }
                let mut tail = PowerSeries::constant(one.clone(), 0);
                for k in (0..depth).rev() {
                    let local = match offsets[k] {
                        Some(o) if o <= order => order - o,
                        _ => {
                            tail = PowerSeries::constant(one.clone(), 0);
                            continue;
                        }
                    };
                    let (lin, quad) = &levels[k];
                    let mut g: Vec<C> = vec![one.zero_like(); local + 1];
                    for n in 1..=local {
                        let mut acc = one.zero_like();
                        if let Some(c) = tail.coeffs().get(n - 1) {
                            acc = acc.plus(&lin.times(c));
                        }
                        if n >= 2 {
                            if let Some(c) = tail.coeffs().get(n - 2) {
                                acc = acc.plus(&quad.times(c));
                            }
                        }
                        g[n] = acc;
                    }
                    tail = PowerSeries::geometric(&PowerSeries::new(g));
                }
                tail.truncate(order)
            }
        }
    }
}

fn valuation<C: Coefficient>((lin, quad): &(C, C)) -> Option<usize> {
    if !lin.is_zero() {
        Some(1)
    } else if !quad.is_zero() {
        Some(2)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qpoly::UniPoly;

    fn values(s: &PowerSeries<UniPoly>) -> Vec<String> {
        s.coeffs().iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn motzkin_fraction() {
        let f = FractionSpec::jacobi(|_| UniPoly::one(), |_| UniPoly::one());
        assert_eq!(values(&f.expand(5)), ["1", "1", "2", "4", "9", "21"]);
        assert_eq!(values(&f.expand(0)), ["1"]);
    }

    #[test]
    fn q_weighted_fraction() {
        let f = FractionSpec::jacobi(|k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(2 * (k - 1)));
        assert_eq!(f.expand(3).coeff(3).to_string(), "3 + q");
    }

    #[test]
    fn deeper_cut_changes_nothing() {
        let f = FractionSpec::jacobi(|k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(k - 1));
        for order in 0..12 {
            let d = f.default_depth(order);
            assert_eq!(f.expand_with_depth(order, d), f.expand_with_depth(order, d + 1));
            assert_eq!(f.expand_with_depth(order, d), f.expand_with_depth(order, d + 5));
        }
    }

    #[test]
    fn too_shallow_cut_is_visible() {
        // Cutting the Motzkin fraction after one level gives 1/(1 - t - t^2).
        let f = FractionSpec::jacobi(|_| UniPoly::one(), |_| UniPoly::one());
        assert_eq!(values(&f.expand_with_depth(4, 1)), ["1", "1", "2", "3", "5"]);
    }

    #[test]
    fn nested_matches_jacobi_for_motzkin() {
        // 1/(1 - (t + t^2)/(1 - t^2/(1 - (t + t^2)/…))) at q = 1 still gives Motzkin numbers.
        let f = FractionSpec::nested(|k| {
            if k % 2 == 1 {
                (UniPoly::one(), UniPoly::one())
            } else {
                (UniPoly::zero(), UniPoly::one())
            }
        });
        assert_eq!(values(&f.expand(6)), ["1", "1", "2", "4", "9", "21", "51"]);
        let d = f.default_depth(6);
        assert_eq!(f.expand_with_depth(6, d), f.expand_with_depth(6, d + 3));
    }

    #[test]
    fn zero_numerator_terminates() {
        let f = FractionSpec::nested(|k| {
            if k == 1 {
                (UniPoly::one(), UniPoly::zero())
            } else {
                (UniPoly::zero(), UniPoly::zero())
            }
        });
        assert_eq!(values(&f.expand(3)), ["1", "1", "1", "1"]);
    }
}
