//! Cross-checking Motzkin numbers against a local OEIS b-file.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::qpoly::motzkin_numbers;
use crate::{Error, Result};

/// Parses the `n value` lines of a b-file. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_bfile(text: &str) -> Result<BTreeMap<usize, BigInt>> {
    let mut out = BTreeMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: String| Error::BFile { line: k + 1, reason };
        let mut fields = line.split_whitespace();
        let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(err(format!("expected 'n value', got '{line}'")));
        };
        let n: usize = n.parse().map_err(|_| err(format!("bad index '{n}'")))?;
        let v: BigInt = v.parse().map_err(|_| err(format!("bad value '{v}'")))?;
        if out.insert(n, v).is_some() {
            return Err(err(format!("index {n} repeated")));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub n: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OeisReport {
    pub max_n: usize,
    pub matched: Vec<usize>,
    /// Indices `≤ max_n` absent from the file.
    pub gaps: Vec<usize>,
    pub mismatch: Option<Mismatch>,
}

impl OeisReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Compares `M_0..=M_{max_n}` with the b-file entries; stops at the first mismatch.
pub fn oeis_check(entries: &BTreeMap<usize, BigInt>, max_n: usize) -> OeisReport {
    let expected: Vec<BigUint> = motzkin_numbers(max_n);
    let mut report = OeisReport { max_n, matched: Vec::new(), gaps: Vec::new(), mismatch: None };
    for (n, m) in expected.into_iter().enumerate() {
        match entries.get(&n) {
            None => report.gaps.push(n),
            Some(found) if *found == BigInt::from(m.clone()) => report.matched.push(n),
            Some(found) => {
                report.mismatch = Some(Mismatch { n, expected: m.to_string(), found: found.to_string() });
                break;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    const A001006: &str =
        "# A001006\n0 1\n1 1\n2 2\n3 4\n4 9\n5 21\n6 51\n7 127\n8 323\n9 835\n10 2188\n11 5798\n12 15511\n";

    #[test]
    fn matches_reference_values() {
        let entries = parse_bfile(A001006).unwrap();
        let report = oeis_check(&entries, 9);
        assert!(report.passed());
        assert_eq!(report.matched, (0..=9).collect::<Vec<_>>());
        assert!(report.gaps.is_empty());
        assert!(oeis_check(&entries, 12).passed());
    }

    #[test]
    fn empty_file_is_vacuous_pass() {
        let report = oeis_check(&parse_bfile("").unwrap(), 4);
        assert!(report.passed());
        assert_eq!(report.gaps, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn altered_entry_is_reported() {
        let text = A001006.replace("12 15511", "12 15512");
        let report = oeis_check(&parse_bfile(&text).unwrap(), 12);
        let m = report.mismatch.unwrap();
        assert_eq!((m.n, m.expected.as_str(), m.found.as_str()), (12, "15511", "15512"));
    }

    #[test]
    fn malformed_line_cites_line_number() {
        match parse_bfile("0 1\n1 one\n") {
            Err(Error::BFile { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_bfile("0 1 2\n").is_err());
        assert!(parse_bfile("0 1\n0 1\n").is_err());
    }
}
