use std::sync::Mutex;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::uni::UniPoly;

static MOTZKIN_MEMO: Mutex<Vec<BigUint>> = Mutex::new(Vec::new());

/// `M_0 = 1`, `M_n = M_{n-1} + Σ_{k=0}^{n-2} M_k M_{n-2-k}`.
pub fn motzkin_number(n: usize) -> BigUint {
    motzkin_numbers(n).pop().expect("non-empty")
}

/// `M_0, …, M_{n_max}`. Values are memoised process-wide behind a mutex.
pub fn motzkin_numbers(n_max: usize) -> Vec<BigUint> {
    let mut memo = MOTZKIN_MEMO.lock().unwrap_or_else(|e| e.into_inner());
    while memo.len() <= n_max {
        let n = memo.len();
        let next = if n == 0 {
            BigUint::one()
        } else {
            let conv = (0..n.saturating_sub(1)).fold(BigUint::zero(), |acc, k| acc + &memo[k] * &memo[n - 2 - k]);
            &memo[n - 1] + conv
        };
        memo.push(next);
    }
    memo[..=n_max].to_vec()
}

/// `M_0(q), …, M_{n_max}(q)` with
/// `M_n(q) = M_{n-1}(q) + Σ_{k=0}^{n-2} q^k M_k(q) M_{n-2-k}(q)`.
pub fn q_motzkin_sequence(n_max: usize) -> Vec<UniPoly> {
    q_recurrence(n_max, |_, k| k)
}

/// `M̃_0(q), …, M̃_{n_max}(q)`: as [`q_motzkin_sequence`] but the k-th term
/// carries `q^{k+1-(n-1)δ_{k,n-2}}`, so the last term (k = n-2) has exponent 0.
pub fn q_motzkin_tilde_sequence(n_max: usize) -> Vec<UniPoly> {
    q_recurrence(n_max, |n, k| {
        let kronecker = usize::from(k + 2 == n);
        k + 1 - (n - 1) * kronecker
    })
}

pub fn q_motzkin(n: usize) -> UniPoly {
    q_motzkin_sequence(n).pop().expect("non-empty")
}

pub fn q_motzkin_tilde(n: usize) -> UniPoly {
    q_motzkin_tilde_sequence(n).pop().expect("non-empty")
}

fn q_recurrence(n_max: usize, exponent: impl Fn(usize, usize) -> usize) -> Vec<UniPoly> {
    let mut seq: Vec<UniPoly> = vec![UniPoly::one()];
    for n in 1..=n_max {
        let mut next = seq[n - 1].clone();
        for k in 0..n.saturating_sub(1) {
            next += &(&seq[k] * &seq[n - 2 - k]).shift(exponent(n, k));
        }
        seq.push(next);
    }
    seq
}
