//! Permutations, their statistics, pattern avoidance and the canonical
//! reduced decomposition.
//!
//! Positions and values are 1-based throughout the public API, matching the
//! one-line notation `σ(1) σ(2) … σ(n)`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Permutation {
    word: Vec<usize>,
}

/// Every statistic of a permutation that the rest of the crate consumes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatRecord {
    pub exc: usize,
    pub fp: usize,
    pub crs: usize,
    pub nes: usize,
    pub inv: usize,
    pub exc_set: Vec<usize>,
    pub des_set: Vec<usize>,
    pub is_involution: bool,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (pos, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!("value {v} at position {} is outside 1..={n}", pos + 1)));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!("value {v} appears twice")));
            }
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n).collect() }
    }

    /// Builds the involution with the given 2-cycles; every other point is fixed.
    pub fn from_transpositions(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut word: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n + 1];
        for &(i, j) in pairs {
            if i == j || i == 0 || j == 0 || i > n || j > n || touched[i] || touched[j] {
                return Err(Error::InvalidPermutation(format!(
                    "transposition ({i} {j}) is not disjoint from the others or out of range"
                )));
            }
            touched[i] = true;
            touched[j] = true;
            word[i - 1] = j;
            word[j - 1] = i;
        }
        Ok(Permutation { word })
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `σ(i)` for a 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_involution(&self) -> bool {
        self.word.iter().enumerate().all(|(p, &v)| self.word[v - 1] == p + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (p, &v) in self.word.iter().enumerate() {
            inv[v - 1] = p + 1;
        }
        Permutation { word: inv }
    }

    pub fn excedances(&self) -> Vec<usize> {
        self.positions().filter(|&i| self.at(i) > i).collect()
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..self.len()).filter(|&i| self.at(i) > self.at(i + 1)).collect()
    }

    pub fn fixed_points(&self) -> usize {
        self.positions().filter(|&i| self.at(i) == i).count()
    }

    pub fn crossings(&self) -> usize {
        self.count_pairs(|i, j, si, sj| (i < j && j < si && si < sj) || (si < sj && sj <= i))
    }

    pub fn nestings(&self) -> usize {
        self.count_pairs(|i, j, si, sj| (j < sj && sj < si) || (sj < si && si <= i))
    }

    pub fn inversions(&self) -> usize {
        self.count_pairs(|_, _, si, sj| si > sj)
    }

    pub fn statistics(&self) -> StatRecord {
        let exc_set = self.excedances();
        StatRecord {
            exc: exc_set.len(),
            fp: self.fixed_points(),
            crs: self.crossings(),
            nes: self.nestings(),
            inv: self.inversions(),
            exc_set,
            des_set: self.descents(),
            is_involution: self.is_involution(),
        }
    }

    // Counts pairs i < j satisfying `pred(i, j, σ(i), σ(j))`.
    fn count_pairs(&self, pred: impl Fn(usize, usize, usize, usize) -> bool) -> usize {
        let n = self.len();
        let mut count = 0;
        for i in 1..=n {
            for j in i + 1..=n {
                if pred(i, j, self.at(i), self.at(j)) {
                    count += 1;
                }
            }
        }
        count
    }

    fn positions(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.len()
    }

    /// Whether some subsequence of `self` is order-isomorphic to `pattern`.
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        if k > self.len() {
            return false;
        }
        if pattern.word.windows(2).all(|w| w[0] > w[1]) {
            return longest_monotone(&self.word, |a, b| a > b) >= k;
        }
        if pattern.word.windows(2).all(|w| w[0] < w[1]) {
            return longest_monotone(&self.word, |a, b| a < b) >= k;
        }
        let mut chosen = Vec::with_capacity(k);
        embed(&self.word, &pattern.word, 0, &mut chosen)
    }

    /// Avoidance of the barred pattern 3̄142: every occurrence `σ(i)σ(j)σ(k)`
    /// of 231 must have some `i < l < j` with `σ(l) < σ(k)`.
    pub fn avoids_barred_3142(&self) -> bool {
        let w = &self.word;
        let n = w.len();
        for i in 0..n {
            let mut min_between = usize::MAX;
            for j in i + 1..n {
                if w[j] > w[i] {
                    let unsupported = w[j + 1..].iter().any(|&vk| vk < w[i] && min_between > vk);
                    if unsupported {
                        return false;
                    }
                }
                min_between = min_between.min(w[j]);
            }
        }
        true
    }

    /// The (head, tail) pairs of the canonical reduced decomposition.
    ///
    /// Repeatedly takes the greatest excedance value `v` at position `i`,
    /// slides it to position `v` and records `(v - 1, i)`.
    pub fn head_tail_pairs(&self) -> HeadTailPairs {
        let mut work = self.word.clone();
        let mut pairs = Vec::new();
        loop {
            let greatest = work.iter().enumerate().filter(|&(p, &v)| v > p + 1).max_by_key(|&(_, &v)| v);
            let Some((p, &v)) = greatest else { break };
            work.remove(p);
            work.insert(v - 1, v);
            pairs.push((v - 1, p + 1));
        }
        pairs.reverse();
        HeadTailPairs { n: self.len(), pairs }
    }

    /// Right inverse of [`Permutation::head_tail_pairs`]: applies each run
    /// `s_h s_{h-1} ⋯ s_t` to the identity, smallest head first.
    pub fn from_head_tail(pairs: &HeadTailPairs) -> Permutation {
        let mut word: Vec<usize> = (1..=pairs.n).collect();
        for &(head, tail) in &pairs.pairs {
            let v = word.remove(head);
            word.insert(tail - 1, v);
        }
        Permutation { word }
    }

    /// Disjoint-cycle notation, each cycle opened at its least element:
    /// `(1 6)(2 7)(3)`.
    pub fn to_cycle_string(&self) -> String {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = String::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            out.push('(');
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&i.to_string());
                first = false;
                i = self.at(i);
            }
            out.push(')');
        }
        out
    }
}

fn longest_monotone(word: &[usize], before: impl Fn(usize, usize) -> bool) -> usize {
    // Patience sorting: tails[l] is the best last element of a chain of length l + 1.
    let mut tails: Vec<usize> = Vec::new();
    for &v in word {
        let slot = tails.partition_point(|&t| before(t, v));
        if slot == tails.len() {
            tails.push(v);
        } else {
            tails[slot] = v;
        }
    }
    tails.len()
}

fn embed(word: &[usize], pattern: &[usize], from: usize, chosen: &mut Vec<usize>) -> bool {
    let m = chosen.len();
    if m == pattern.len() {
        return true;
    }
    let (mut lo, mut hi) = (0, usize::MAX);
    for (x, &v) in chosen.iter().enumerate() {
        if pattern[x] < pattern[m] {
            lo = lo.max(v);
        } else {
            hi = hi.min(v);
        }
    }
    let last_start = word.len() - (pattern.len() - m);
    for idx in from..=last_start {
        let v = word[idx];
        if v > lo && v < hi {
            chosen.push(v);
            if embed(word, pattern, idx + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let word = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(format!("'{tok}' is not a positive integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }
}

/// Ordered (head, tail) pairs of a canonical reduced decomposition or of a
/// strip decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HeadTailPairs {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl HeadTailPairs {
    /// Sorts `pairs` by head and checks `1 ≤ tail ≤ head ≤ n - 1` with
    /// strictly increasing heads.
    pub fn new(n: usize, mut pairs: Vec<(usize, usize)>) -> Result<Self> {
        pairs.sort_unstable();
        for &(h, t) in &pairs {
            if t == 0 || t > h {
                return Err(Error::InvalidPairs(format!("pair ({h},{t}) needs 1 <= tail <= head")));
            }
            if h + 1 > n {
                return Err(Error::InvalidPairs(format!("head {h} must be at most n - 1 = {}", n.saturating_sub(1))));
            }
        }
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidPairs(format!("head {} repeated", w[0].0)));
        }
        Ok(HeadTailPairs { n, pairs })
    }

    pub fn empty(n: usize) -> Self {
        HeadTailPairs { n, pairs: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn tails(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(_, t)| t).collect()
    }

    /// `t_{j-1} + 2 ≤ t_j` for consecutive pairs.
    pub fn tails_spaced(&self) -> bool {
        self.pairs.windows(2).all(|w| w[0].1 + 2 <= w[1].1)
    }
}

impl fmt::Display for HeadTailPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (h, t)) in self.pairs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({h},{t})")?;
        }
        f.write_str("}")
    }
}

/// The permutation families the crate enumerates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    All,
    Involutions,
    I4321,
    I3412,
    S321B3142,
}

impl ClassId {
    pub const ALL: [ClassId; 5] =
        [ClassId::All, ClassId::Involutions, ClassId::I4321, ClassId::I3412, ClassId::S321B3142];

    pub fn name(self) -> &'static str {
        match self {
            ClassId::All => "ALL",
            ClassId::Involutions => "INVOLUTIONS",
            ClassId::I4321 => "I4321",
            ClassId::I3412 => "I3412",
            ClassId::S321B3142 => "S321B3142",
        }
    }

    /// Classes that can only be listed by scanning all of `S_n`.
    pub fn needs_full_scan(self) -> bool {
        matches!(self, ClassId::All | ClassId::S321B3142)
    }

    pub fn contains(self, sigma: &Permutation) -> bool {
        match self {
            ClassId::All => true,
            ClassId::Involutions => sigma.is_involution(),
            ClassId::I4321 => sigma.is_involution() && !sigma.contains(&pattern(&[4, 3, 2, 1])),
            ClassId::I3412 => sigma.is_involution() && !sigma.contains(&pattern(&[3, 4, 1, 2])),
            ClassId::S321B3142 => !sigma.contains(&pattern(&[3, 2, 1])) && sigma.avoids_barred_3142(),
        }
    }

    // Member test once the involution property is already known.
    fn admits_involution(self, sigma: &Permutation) -> bool {
        match self {
            ClassId::I4321 => !sigma.contains(&pattern(&[4, 3, 2, 1])),
            ClassId::I3412 => !sigma.contains(&pattern(&[3, 4, 1, 2])),
            _ => true,
        }
    }
}

fn pattern(word: &[usize]) -> Permutation {
    Permutation::from_word_unchecked(word.to_vec())
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String =
            s.chars().filter(|c| !matches!(c, '_' | '-' | '(' | ')' | ',')).collect::<String>().to_ascii_uppercase();
        match key.as_str() {
            "ALL" | "S" => Ok(ClassId::All),
            "INVOLUTIONS" | "INV" | "I" => Ok(ClassId::Involutions),
            "I4321" => Ok(ClassId::I4321),
            "I3412" => Ok(ClassId::I3412),
            "S321B3142" | "S3213B142" | "S32131142" => Ok(ClassId::S321B3142),
            _ => Err(Error::Unknown { kind: "class", name: s.to_string() }),
        }
    }
}

/// A lexicographically contiguous block of a class enumeration: every member
/// whose one-line word starts with `prefix`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Shard {
    class: ClassId,
    n: usize,
    prefix: Vec<usize>,
}

impl Shard {
    pub fn prefix(&self) -> &[usize] {
        &self.prefix
    }

    /// Members of the shard in lexicographic order.
    pub fn members(&self) -> Box<dyn Iterator<Item = Permutation> + Send + '_> {
        let class = self.class;
        if class.needs_full_scan() {
            Box::new(PrefixPermutations::new(self.n, &self.prefix).filter(move |s| class.contains(s)))
        } else {
            let mut out = Vec::new();
            let mut word = vec![0; self.n];
            for (p, &v) in self.prefix.iter().enumerate() {
                word[p] = v;
                word[v - 1] = p + 1;
            }
            complete_involutions(&mut word, &mut |w| {
                let s = Permutation { word: w.to_vec() };
                if class.admits_involution(&s) {
                    out.push(s);
                }
            });
            Box::new(out.into_iter())
        }
    }
}

/// Splits the class of size `n` into shards whose concatenation, in order,
/// is the full lexicographic enumeration.
pub fn class_shards(n: usize, class: ClassId) -> Vec<Shard> {
    let shard = |prefix: Vec<usize>| Shard { class, n, prefix };
    if n == 0 {
        return vec![shard(Vec::new())];
    }
    if class.needs_full_scan() {
        let mut out = Vec::new();
        for a in 1..=n {
            if n == 1 {
                out.push(shard(vec![a]));
                continue;
            }
            for b in (1..=n).filter(|&b| b != a) {
                out.push(shard(vec![a, b]));
            }
        }
        out
    } else {
        (1..=n).map(|j| shard(vec![j])).collect()
    }
}

/// Every member of `class` of size `n`, in lexicographic order.
pub fn enumerate_class(n: usize, class: ClassId) -> impl Iterator<Item = Permutation> {
    class_shards(n, class).into_iter().flat_map(|shard| shard.members().collect::<Vec<_>>())
}

// Fills the zero slots of a partial involution, smallest free position first,
// fixed point before partners in ascending order.
fn complete_involutions(word: &mut [usize], emit: &mut dyn FnMut(&[usize])) {
    let Some(i) = word.iter().position(|&v| v == 0) else {
        emit(word);
        return;
    };
    word[i] = i + 1;
    complete_involutions(word, emit);
    for j in i + 1..word.len() {
        if word[j] == 0 {
            word[i] = j + 1;
            word[j] = i + 1;
            complete_involutions(word, emit);
            word[j] = 0;
        }
    }
    word[i] = 0;
}

/// Lexicographic iterator over the permutations of `{1..n}` with a fixed prefix.
struct PrefixPermutations {
    current: Option<Vec<usize>>,
    fixed: usize,
}

impl PrefixPermutations {
    fn new(n: usize, prefix: &[usize]) -> Self {
        let mut word = prefix.to_vec();
        word.extend((1..=n).filter(|v| !prefix.contains(v)));
        PrefixPermutations { current: Some(word), fixed: prefix.len() }
    }
}

impl Iterator for PrefixPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.current.take()?;
        let mut next = word.clone();
        if next_permutation(&mut next[self.fixed..]) {
            self.current = Some(next);
        }
        Some(Permutation { word })
    }
}

fn next_permutation(w: &mut [usize]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let Some(i) = (0..w.len() - 1).rev().find(|&i| w[i] < w[i + 1]) else {
        return false;
    };
    let j = (i + 1..w.len()).rev().find(|&j| w[j] > w[i]).expect("successor exists");
    w.swap(i, j);
    w[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn worked_example_statistics() {
        let s = p("4 6 2 9 8 1 7 3 10 5").statistics();
        assert_eq!((s.exc, s.crs, s.nes, s.inv), (5, 7, 4, 20));
    }

    #[test]
    fn identity_and_reversal_statistics() {
        let s = p("1 2 3").statistics();
        assert_eq!((s.exc, s.fp, s.crs, s.nes, s.inv), (0, 3, 0, 0, 0));
        let s = p("3 2 1").statistics();
        assert_eq!((s.exc, s.fp, s.crs, s.nes, s.inv), (1, 1, 0, 1, 3));
        assert_eq!(s.des_set, vec![1, 2]);
        assert!(s.is_involution);
    }

    #[test]
    fn rejects_non_bijective_words() {
        assert!(Permutation::new(vec![1, 1]).is_err());
        assert!(Permutation::new(vec![0, 1]).is_err());
        assert!(Permutation::new(vec![3, 1]).is_err());
        assert!("1 x 2".parse::<Permutation>().is_err());
    }

    #[test]
    fn classical_containment() {
        assert!(p("2 1 4 3").contains(&p("2 1 4 3")));
        assert!(!p("1 2 3").contains(&p("2 1")));
        assert!(p("4 6 2 9 8 1 7 3 10 5").contains(&p("4 3 2 1")));
        assert!(p("3 5 1 4 2").contains(&p("2 1 3")));
        assert!(!p("1 2 3 4").contains(&p("1 3 2")));
    }

    #[test]
    fn barred_pattern() {
        assert!(p("1 2 3").avoids_barred_3142());
        assert!(!p("2 3 1").avoids_barred_3142());
        assert!(p("3 1 2").avoids_barred_3142());
        // 231 occurrence 3 4 2 is rescued by the 1 between 3 and 4.
        assert!(p("3 1 4 2").avoids_barred_3142());
    }

    #[test]
    fn class_enumeration_small() {
        assert_eq!(enumerate_class(3, ClassId::I4321).count(), 4);
        assert_eq!(enumerate_class(4, ClassId::S321B3142).count(), 9);
        let s3: Vec<String> = enumerate_class(3, ClassId::S321B3142).map(|s| s.to_string()).collect();
        assert_eq!(s3, ["1 2 3", "1 3 2", "2 1 3", "3 1 2"]);
        for class in ClassId::ALL {
            let empty: Vec<_> = enumerate_class(0, class).collect();
            assert_eq!(empty, vec![Permutation::identity(0)]);
        }
    }

    #[test]
    fn enumeration_is_lexicographic() {
        for class in ClassId::ALL {
            let all: Vec<_> = enumerate_class(5, class).collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]), "{class}");
            assert!(all.iter().all(|s| class.contains(s)));
        }
        assert_eq!(enumerate_class(6, ClassId::All).count(), 720);
        assert_eq!(enumerate_class(6, ClassId::Involutions).count(), 76);
    }

    #[test]
    fn head_tail_worked_example() {
        let sigma = p("6 1 7 2 3 8 4 10 5 11 9 15 12 16 13 14");
        let pairs = sigma.head_tail_pairs();
        assert_eq!(pairs.pairs(), &[(5, 1), (6, 3), (7, 6), (9, 8), (10, 10), (14, 12), (15, 14)]);
        assert_eq!(Permutation::from_head_tail(&pairs), sigma);
    }

    #[test]
    fn head_tail_identity_and_reversal() {
        assert!(Permutation::identity(7).head_tail_pairs().is_empty());
        assert_eq!(p("3 2 1").head_tail_pairs().pairs(), &[(1, 1), (2, 1)]);
        let rev = p("5 4 3 2 1").head_tail_pairs();
        assert_eq!(rev.pairs(), &[(1, 1), (2, 1), (3, 1), (4, 1)]);

        let pairs = HeadTailPairs::new(3, vec![(2, 1), (1, 1)]).unwrap();
        assert_eq!(Permutation::from_head_tail(&pairs), p("3 2 1"));
        assert_eq!(Permutation::from_head_tail(&HeadTailPairs::empty(5)), Permutation::identity(5));
    }

    #[test]
    fn head_tail_pair_validation() {
        assert!(HeadTailPairs::new(5, vec![(2, 3)]).is_err());
        assert!(HeadTailPairs::new(5, vec![(5, 1)]).is_err());
        assert!(HeadTailPairs::new(5, vec![(2, 1), (2, 2)]).is_err());
        assert!(HeadTailPairs::new(5, vec![(3, 0)]).is_err());
    }

    #[test]
    fn cycle_notation() {
        let s = Permutation::from_transpositions(4, &[(1, 3)]).unwrap();
        assert_eq!(s.to_cycle_string(), "(1 3)(2)(4)");
        assert_eq!(p("2 3 1").to_cycle_string(), "(1 2 3)");
        assert!(Permutation::from_transpositions(3, &[(1, 2), (2, 3)]).is_err());
    }

    #[test]
    fn class_names_parse() {
        for class in ClassId::ALL {
            assert_eq!(class.name().parse::<ClassId>().unwrap(), class);
        }
        assert_eq!("I_4321".parse::<ClassId>().unwrap(), ClassId::I4321);
        assert_eq!("S_321_B3142".parse::<ClassId>().unwrap(), ClassId::S321B3142);
        assert!("I_1234".parse::<ClassId>().is_err());
    }
}
