use num_bigint::BigInt;
use num_traits::{One, Signed};

/// Canonical text form: terms ascending by total degree, ties broken by the
/// exponent vector in descending lexicographic order, so `x` precedes `y`.
/// Unit coefficients and unit exponents are suppressed.
pub(crate) fn render<'a>(vars: &[&str], terms: impl IntoIterator<Item = (&'a [u32], &'a BigInt)>) -> String {
    let mut terms: Vec<_> = terms.into_iter().collect();
    if terms.is_empty() {
        return "0".to_string();
    }
    terms.sort_by(|(a, _), (b, _)| {
        let da: u64 = a.iter().map(|&e| e as u64).sum();
        let db: u64 = b.iter().map(|&e| e as u64).sum();
        da.cmp(&db).then_with(|| b.cmp(a))
    });
    let mut out = String::new();
    for (k, (exps, coeff)) in terms.into_iter().enumerate() {
        let negative = coeff.is_negative();
        if k == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let magnitude = coeff.abs();
        let monomial: Vec<String> = vars
            .iter()
            .zip(exps)
            .filter(|(_, &e)| e > 0)
            .map(|(v, &e)| if e == 1 { v.to_string() } else { format!("{v}^{e}") })
            .collect();
        if monomial.is_empty() {
            out.push_str(&magnitude.to_string());
        } else {
            if !magnitude.is_one() {
                out.push_str(&magnitude.to_string());
                out.push('*');
            }
            out.push_str(&monomial.join("*"));
        }
    }
    out
}
