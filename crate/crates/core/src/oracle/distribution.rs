use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::path::{path_shards, MotzkinPath};
use crate::perm::{class_shards, ClassId, Permutation};
use crate::qpoly::{MultiPoly, Vars};
use crate::{Error, Exec, Result};

/// Largest `n` a full `S_n` scan accepts without [`DistOptions::allow_large`].
pub const FULL_SCAN_LIMIT: usize = 12;

/// Which statistic (or tuple of statistics) a distribution records.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StatSpec {
    Crs,
    Nes,
    CrsPlusNes,
    /// `x^fp y^exc p^crs q^nes`.
    JointFpExcCrsNes,
    /// `y^exc q^crs`.
    JointExcCrs,
}

impl StatSpec {
    pub const ALL: [StatSpec; 5] =
        [StatSpec::Crs, StatSpec::Nes, StatSpec::CrsPlusNes, StatSpec::JointFpExcCrsNes, StatSpec::JointExcCrs];

    pub fn name(self) -> &'static str {
        match self {
            StatSpec::Crs => "crs",
            StatSpec::Nes => "nes",
            StatSpec::CrsPlusNes => "crs+nes",
            StatSpec::JointFpExcCrsNes => "fp-exc-crs-nes",
            StatSpec::JointExcCrs => "exc-crs",
        }
    }

    pub fn vars(self) -> Vars {
        match self {
            StatSpec::Crs | StatSpec::Nes | StatSpec::CrsPlusNes => MultiPoly::Q,
            StatSpec::JointFpExcCrsNes => MultiPoly::XYPQ,
            StatSpec::JointExcCrs => MultiPoly::YQ,
        }
    }

    /// Exponent vector of `sigma`, aligned with [`StatSpec::vars`].
    pub fn exponents(self, sigma: &Permutation) -> Vec<u32> {
        let e = |v: usize| v as u32;
        match self {
            StatSpec::Crs => vec![e(sigma.crossings())],
            StatSpec::Nes => vec![e(sigma.nestings())],
            StatSpec::CrsPlusNes => vec![e(sigma.crossings() + sigma.nestings())],
            StatSpec::JointFpExcCrsNes => {
                vec![e(sigma.fixed_points()), e(sigma.excedances().len()), e(sigma.crossings()), e(sigma.nestings())]
            }
            StatSpec::JointExcCrs => vec![e(sigma.excedances().len()), e(sigma.crossings())],
        }
    }
}

impl fmt::Display for StatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        let found = match key.as_str() {
            "crs-plus-nes" => Some(StatSpec::CrsPlusNes),
            "joint-fp-exc-crs-nes" => Some(StatSpec::JointFpExcCrsNes),
            "joint-exc-crs" => Some(StatSpec::JointExcCrs),
            _ => StatSpec::ALL.into_iter().find(|spec| spec.name() == key),
        };
        found.ok_or_else(|| Error::Unknown { kind: "statistic", name: s.to_string() })
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct DistOptions {
    pub exec: Exec,
    /// Lifts the [`FULL_SCAN_LIMIT`] guard.
    pub allow_large: bool,
}

/// `Σ_{σ ∈ class, |σ| = n}` of the monomial prescribed by `spec`.
pub fn distribution(class: ClassId, n: usize, spec: StatSpec) -> Result<MultiPoly> {
    distribution_with(class, n, spec, DistOptions::default())
}

pub fn distribution_with(class: ClassId, n: usize, spec: StatSpec, options: DistOptions) -> Result<MultiPoly> {
    if class.needs_full_scan() && n > FULL_SCAN_LIMIT && !options.allow_large {
        return Err(Error::SizeGuard { n, limit: FULL_SCAN_LIMIT, class: class.to_string() });
    }
    let counts = options.exec.fold(
        &class_shards(n, class),
        BTreeMap::new,
        |mut acc, shard| {
            for sigma in shard.members() {
                *acc.entry(spec.exponents(&sigma)).or_insert(0u64) += 1;
            }
            acc
        },
        merge_counts,
    );
    Ok(counts_to_poly(spec.vars(), counts))
}

/// `Σ_{P ∈ 𝓜_n}` of the monomial `weight(P)` over `vars`.
pub fn path_distribution<F>(n: usize, vars: Vars, exec: Exec, weight: F) -> MultiPoly
where
    F: Fn(&MotzkinPath) -> Vec<u32> + Sync + Send,
{
    let counts = exec.fold(
        &path_shards(n),
        BTreeMap::new,
        |mut acc, shard| {
            for path in shard.members() {
                *acc.entry(weight(&path)).or_insert(0u64) += 1;
            }
            acc
        },
        merge_counts,
    );
    counts_to_poly(vars, counts)
}

fn merge_counts(mut a: BTreeMap<Vec<u32>, u64>, b: BTreeMap<Vec<u32>, u64>) -> BTreeMap<Vec<u32>, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn counts_to_poly(vars: Vars, counts: BTreeMap<Vec<u32>, u64>) -> MultiPoly {
    let mut poly = MultiPoly::zero(vars);
    for (exps, c) in counts {
        poly.add_term(&exps, &BigInt::from(c));
    }
    poly
}
