//! Motzkin paths, their height statistics, the two up/down matchings and the
//! strip decomposition.
//!
//! Step indices are 1-based. The height of a step is the y-coordinate of its
//! starting point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::perm::HeadTailPairs;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    Up,
    Hor,
    Down,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Hor => 'h',
            Step::Down => 'd',
        }
    }

    pub fn delta(self) -> isize {
        match self {
            Step::Up => 1,
            Step::Hor => 0,
            Step::Down => -1,
        }
    }
}

/// A path from `(0,0)` to `(n,0)` with steps `u`, `h`, `d` that never goes
/// below the x-axis.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MotzkinPath {
    steps: Vec<Step>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PathStatRecord {
    pub hor: usize,
    pub up: usize,
    pub down: usize,
    pub sh_u: usize,
    pub sh_h: usize,
    pub sh_d: usize,
    pub area: usize,
}

#[derive(Serialize, Deserialize)]
struct PathJson {
    n: usize,
    word: String,
}

impl MotzkinPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0isize;
        for (k, s) in steps.iter().enumerate() {
            height += s.delta();
            if height < 0 {
                return Err(Error::InvalidPath { index: k + 1, reason: "height below zero".into() });
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath { index: steps.len(), reason: format!("path ends at height {height}") });
        }
        Ok(MotzkinPath { steps })
    }

    /// The all-horizontal path of length `n`.
    pub fn flat(n: usize) -> Self {
        MotzkinPath { steps: vec![Step::Hor; n] }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Start height of every step, in step order.
    pub fn heights(&self) -> Vec<usize> {
        start_heights(&self.steps)
    }

    pub fn step_height(&self, i: usize) -> Result<usize> {
        if i == 0 || i > self.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.len() });
        }
        // Prefix-count form: |P(1,i)|_u - |P(1,i)|_d, corrected by the step kind.
        let prefix = &self.steps[..i];
        let ups = prefix.iter().filter(|&&s| s == Step::Up).count();
        let downs = prefix.iter().filter(|&&s| s == Step::Down).count();
        Ok(match self.steps[i - 1] {
            Step::Up => ups - downs - 1,
            Step::Hor => ups - downs,
            Step::Down => ups - downs + 1,
        })
    }

    pub fn indices_of(&self, kind: Step) -> Vec<usize> {
        (1..=self.len()).filter(|&i| self.steps[i - 1] == kind).collect()
    }

    pub fn statistics(&self) -> PathStatRecord {
        let heights = self.heights();
        let mut rec = PathStatRecord { hor: 0, up: 0, down: 0, sh_u: 0, sh_h: 0, sh_d: 0, area: 0 };
        // Twice the trapezoid area under each step.
        let mut twice_area = 0;
        for (&s, &y) in self.steps.iter().zip(&heights) {
            match s {
                Step::Up => {
                    rec.up += 1;
                    rec.sh_u += y;
                    twice_area += 2 * y + 1;
                }
                Step::Hor => {
                    rec.hor += 1;
                    rec.sh_h += y;
                    twice_area += 2 * y;
                }
                Step::Down => {
                    rec.down += 1;
                    rec.sh_d += y;
                    twice_area += 2 * y - 1;
                }
            }
        }
        rec.area = twice_area / 2;
        rec
    }

    /// Pairs the k-th up step with the k-th down step.
    pub fn sequential_matching(&self) -> Vec<(usize, usize)> {
        self.indices_of(Step::Up).into_iter().zip(self.indices_of(Step::Down)).collect()
    }

    /// Pairs each up step with the down step closing its tunnel, i.e. the
    /// first later down step that returns to the up step's start height.
    pub fn tunnel_matching(&self) -> Vec<(usize, usize)> {
        let mut open = Vec::new();
        let mut pairs = Vec::with_capacity(self.len() / 2);
        for (k, s) in self.steps.iter().enumerate() {
            match s {
                Step::Up => open.push(k + 1),
                Step::Down => {
                    let u = open.pop().expect("valid path has a matching up step");
                    pairs.push((u, k + 1));
                }
                Step::Hor => {}
            }
        }
        pairs.sort_unstable();
        pairs
    }

    /// Strip decomposition: repeatedly flattens the last up step `p` and the
    /// last down step `r`, recording the (x+y) cell labels
    /// `(r + y_r - 2, p + y_p)`. Pairs come back ascending by head.
    pub fn strip_decomposition(&self) -> HeadTailPairs {
        let mut work = self.steps.clone();
        let mut pairs = Vec::new();
        while let Some(p) = work.iter().rposition(|&s| s == Step::Up) {
            let r = work.iter().rposition(|&s| s == Step::Down).expect("every up step has a down step");
            let heights = start_heights(&work);
            let head = (r + 1) + heights[r] - 2;
            let tail = (p + 1) + heights[p];
            pairs.push((head, tail));
            // Turning u..d into h..h lowers everything strictly between them by one.
            work[p] = Step::Hor;
            work[r] = Step::Hor;
        }
        pairs.reverse();
        HeadTailPairs::new(self.len(), pairs).expect("strip labels satisfy the pair invariants")
    }

    /// Rebuilds a path from its strip decomposition by inserting strips in
    /// ascending head order into the flat path of length `n`.
    pub fn from_head_tail(pairs: &HeadTailPairs) -> Result<MotzkinPath> {
        let n = pairs.n();
        let mut work = vec![Step::Hor; n];
        for &(head, tail) in pairs.pairs() {
            let fail = |why: &str| Error::InvalidPairs(format!("pair ({head},{tail}): {why}"));
            // Every step after the last down step sits on the axis, so y_r = 1.
            let r = head + 1;
            if r > n || work[r - 1] != Step::Hor || work[r..].contains(&Step::Down) {
                return Err(fail("no flat axis step for the down step"));
            }
            let after_last_up = work.iter().rposition(|&s| s == Step::Up).map_or(0, |u| u + 1);
            let heights = start_heights(&work);
            let mut hits = (after_last_up..r - 1).filter(|&k| work[k] == Step::Hor && (k + 1) + heights[k] == tail);
            let p = match (hits.next(), hits.next()) {
                (Some(p), None) => p,
                (None, _) => return Err(fail("no horizontal step carries the tail label")),
                (Some(_), Some(_)) => return Err(fail("tail label is ambiguous")),
            };
            work[p] = Step::Up;
            work[r - 1] = Step::Down;
        }
        MotzkinPath::new(work)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PathJson { n: self.len(), word: self.to_string() }).expect("plain struct serializes")
    }

    pub fn from_json(text: &str) -> Result<MotzkinPath> {
        let parsed: PathJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidPath { index: 0, reason: format!("bad JSON: {e}") })?;
        let path: MotzkinPath = parsed.word.parse()?;
        if path.len() != parsed.n {
            return Err(Error::InvalidPath {
                index: path.len(),
                reason: format!("declared length {} differs from word length", parsed.n),
            });
        }
        Ok(path)
    }
}

fn start_heights(steps: &[Step]) -> Vec<usize> {
    let mut y = 0isize;
    steps
        .iter()
        .map(|s| {
            let start = y;
            y += s.delta();
            start as usize
        })
        .collect()
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .enumerate()
            .map(|(k, c)| match c.to_ascii_lowercase() {
                'u' => Ok(Step::Up),
                'h' => Ok(Step::Hor),
                'd' => Ok(Step::Down),
                other => Err(Error::InvalidPath { index: k + 1, reason: format!("illegal character '{other}'") }),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

/// All Motzkin paths with a given prefix, in lexicographic order `u < h < d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathShard {
    n: usize,
    prefix: Vec<Step>,
}

impl PathShard {
    pub fn members(&self) -> Vec<MotzkinPath> {
        let mut out = Vec::new();
        let height = self.prefix.iter().map(|s| s.delta()).sum::<isize>() as usize;
        let mut buf = self.prefix.clone();
        extend_paths(self.n, height, &mut buf, &mut out);
        out
    }
}

fn extend_paths(n: usize, height: usize, buf: &mut Vec<Step>, out: &mut Vec<MotzkinPath>) {
    let left = n - buf.len();
    if left == 0 {
        out.push(MotzkinPath { steps: buf.clone() });
        return;
    }
    for s in [Step::Up, Step::Hor, Step::Down] {
        let next = match s {
            Step::Up if height < left - 1 => height + 1,
            Step::Hor if height < left => height,
            Step::Down if height > 0 => height - 1,
            _ => continue,
        };
        buf.push(s);
        extend_paths(n, next, buf, out);
        buf.pop();
    }
}

/// Prefix shards whose concatenation is the lexicographic listing of `𝓜_n`.
pub fn path_shards(n: usize) -> Vec<PathShard> {
    let depth = n.min(4);
    let mut prefixes = vec![(Vec::new(), 0usize)];
    for len in 0..depth {
        let left = n - len;
        let mut next = Vec::new();
        for (prefix, h) in prefixes {
            for s in [Step::Up, Step::Hor, Step::Down] {
                let nh = match s {
                    Step::Up if h < left - 1 => h + 1,
                    Step::Hor if h < left => h,
                    Step::Down if h > 0 => h - 1,
                    _ => continue,
                };
                let mut p: Vec<Step> = prefix.clone();
                p.push(s);
                next.push((p, nh));
            }
        }
        prefixes = next;
    }
    prefixes.into_iter().map(|(prefix, _)| PathShard { n, prefix }).collect()
}

/// Every Motzkin path of length `n`, lexicographic with `u < h < d`.
pub fn enumerate_paths(n: usize) -> impl Iterator<Item = MotzkinPath> {
    path_shards(n).into_iter().flat_map(|s| s.members())
}
