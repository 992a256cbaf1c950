use super::uni::UniPoly;
use crate::{Error, Result};

/// Triangular table `h_{n,i}`, `0 ≤ i ≤ n ≤ n_max`, of
/// `h_{n,i} = β_i h_{n-1,i-1} + α_{i+1} h_{n-1,i} + h_{n-1,i+1}` with
/// `h_{0,0} = 1`. Entries outside the triangle read as zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StieltjesTableau {
    rows: Vec<Vec<UniPoly>>,
}

impl StieltjesTableau {
    pub fn n_max(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, i: usize) -> UniPoly {
        self.entry(n as isize, i as isize).clone()
    }

    pub fn row(&self, n: usize) -> &[UniPoly] {
        &self.rows[n]
    }

    /// The column `h_{0,0}, h_{1,0}, …`.
    pub fn first_column(&self) -> Vec<UniPoly> {
        self.rows.iter().map(|r| r[0].clone()).collect()
    }

    fn entry(&self, n: isize, i: isize) -> &UniPoly {
        static ZERO: UniPoly = UniPoly::zero();
        if n < 0 || i < 0 || i > n || n as usize >= self.rows.len() {
            &ZERO
        } else {
            &self.rows[n as usize][i as usize]
        }
    }
}

pub fn stieltjes_tableau(
    alpha: impl Fn(usize) -> UniPoly,
    beta: impl Fn(usize) -> UniPoly,
    n_max: usize,
) -> StieltjesTableau {
    // Index 0 is unused; levels run from 1.
    let alphas: Vec<UniPoly> = (0..=n_max + 1).map(|k| if k == 0 { UniPoly::zero() } else { alpha(k) }).collect();
    let betas: Vec<UniPoly> = (0..=n_max + 1).map(|k| if k == 0 { UniPoly::zero() } else { beta(k) }).collect();
    let mut table = StieltjesTableau { rows: vec![vec![UniPoly::one()]] };
    for n in 1..=n_max as isize {
        let row = (0..=n)
            .map(|i| {
                let mut v = table.entry(n - 1, i + 1).clone();
                v += &(&alphas[i as usize + 1] * table.entry(n - 1, i));
                if i >= 1 {
                    v += &(&betas[i as usize] * table.entry(n - 1, i - 1));
                }
                v
            })
            .collect();
        table.rows.push(row);
    }
    table
}

/// The q-tableau `H_{n,i}` with `α_i = β_i = q^{i-1}`.
pub fn h_tableau(n_max: usize) -> StieltjesTableau {
    stieltjes_tableau(|i| UniPoly::q_pow(i - 1), |i| UniPoly::q_pow(i - 1), n_max)
}

/// `q^{i-1} (H_{n-1,i-1} + Σ_{k=i-1}^{n-2} q^{1+k} H_{k,i-1} H_{n-1-k,0})`.
pub fn h_recursion_rhs(n: usize, i: usize, table: &StieltjesTableau) -> Result<UniPoly> {
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    if n > table.n_max() {
        return Err(Error::IndexOutOfRange { index: n, len: table.n_max() });
    }
    let mut inner = table.get(n - 1, i - 1);
    for k in (i - 1)..(n - 1) {
        inner += &(&table.get(k, i - 1) * &table.get(n - 1 - k, 0)).shift(1 + k);
    }
    Ok(inner.shift(i - 1))
}
