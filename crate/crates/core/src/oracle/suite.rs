use std::fmt::{self, Display};
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use serde::Serialize;

use super::distribution::{distribution_with, path_distribution, DistOptions, StatSpec};
use crate::bijection::Bijection;
use crate::path::{path_shards, MotzkinPath, Step};
use crate::perm::{class_shards, ClassId, Permutation};
use crate::qpoly::{
    h_recursion_rhs, h_tableau, motzkin_numbers, q_motzkin_sequence, q_motzkin_tilde_sequence, stieltjes_tableau,
    MultiPoly, PowerSeries, Preset, UniPoly,
};
use crate::{Error, Exec, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Statistics,
    Paths,
    Bijections,
    Qpoly,
    Distributions,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Statistics, Suite::Paths, Suite::Bijections, Suite::Qpoly, Suite::Distributions, Suite::All];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Statistics => "statistics",
            Suite::Paths => "paths",
            Suite::Bijections => "bijections",
            Suite::Qpoly => "qpoly",
            Suite::Distributions => "distributions",
            Suite::All => "all",
        }
    }
}

impl Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "suite", name: s.to_string() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub range: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub max_n: usize,
    /// Sorted by name.
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

// A check runs up to its bound and returns the first counterexample.
type Runner = fn(usize, Exec) -> Option<String>;

struct Check {
    name: &'static str,
    suite: Suite,
    bound: usize,
    run: Runner,
}

const CHECKS: &[Check] = &[
    Check { name: "inv-exc-crs-nes", suite: Suite::Statistics, bound: 8, run: inv_identity },
    Check { name: "head-tail-roundtrip", suite: Suite::Statistics, bound: 8, run: head_tail_roundtrip },
    Check { name: "des-exc-tails", suite: Suite::Statistics, bound: 9, run: des_exc_tails },
    Check { name: "s321-nonnesting", suite: Suite::Statistics, bound: 9, run: s321_nonnesting },
    Check { name: "class-counts", suite: Suite::Statistics, bound: 10, run: class_counts },
    Check { name: "area-identities", suite: Suite::Paths, bound: 12, run: area_identities },
    Check { name: "strip-roundtrip", suite: Suite::Paths, bound: 10, run: strip_roundtrip },
    Check { name: "matchings-perfect", suite: Suite::Paths, bound: 10, run: matchings_perfect },
    Check { name: "path-count-recurrence", suite: Suite::Paths, bound: 12, run: path_count_recurrence },
    Check { name: "transport-phi1", suite: Suite::Bijections, bound: 10, run: transport_phi1 },
    Check { name: "transport-phi2", suite: Suite::Bijections, bound: 10, run: transport_phi2 },
    Check { name: "transport-phi3", suite: Suite::Bijections, bound: 10, run: transport_phi3 },
    Check { name: "roundtrip-phi1", suite: Suite::Bijections, bound: 10, run: |b, e| roundtrip(Bijection::Phi1, b, e) },
    Check { name: "roundtrip-phi2", suite: Suite::Bijections, bound: 10, run: |b, e| roundtrip(Bijection::Phi2, b, e) },
    Check { name: "roundtrip-phi3", suite: Suite::Bijections, bound: 10, run: |b, e| roundtrip(Bijection::Phi3, b, e) },
    Check { name: "q-collapse", suite: Suite::Qpoly, bound: 30, run: q_collapse },
    Check { name: "tableau-recursion", suite: Suite::Qpoly, bound: 25, run: tableau_recursion },
    Check { name: "tableau-first-column", suite: Suite::Qpoly, bound: 30, run: tableau_first_column },
    Check { name: "tableau-row-sum", suite: Suite::Qpoly, bound: 30, run: tableau_row_sum },
    Check { name: "dumont-expansion", suite: Suite::Qpoly, bound: 20, run: dumont_expansion },
    Check { name: "a-functional", suite: Suite::Qpoly, bound: 20, run: a_functional },
    Check { name: "mtilde-functional", suite: Suite::Qpoly, bound: 20, run: mtilde_functional },
    Check { name: "main12", suite: Suite::Qpoly, bound: 40, run: main12 },
    Check { name: "i-abcd-paths", suite: Suite::Qpoly, bound: 10, run: i_abcd_paths },
    Check { name: "thm-main-4321", suite: Suite::Distributions, bound: 10, run: thm_main_4321 },
    Check { name: "thm-main-3412", suite: Suite::Distributions, bound: 10, run: thm_main_3412 },
    Check { name: "thm-crs-s321", suite: Suite::Distributions, bound: 9, run: thm_crs_s321 },
    Check { name: "fraction-4321-joint", suite: Suite::Distributions, bound: 9, run: fraction_4321 },
    Check { name: "fraction-3412-joint", suite: Suite::Distributions, bound: 9, run: fraction_3412 },
    Check { name: "fraction-s321-joint", suite: Suite::Distributions, bound: 9, run: fraction_s321 },
    Check { name: "transport-distributions", suite: Suite::Distributions, bound: 9, run: transport_distributions },
];

/// Runs every check of `suite` with its bound capped at `max_n`.
pub fn run_suite(suite: Suite, max_n: usize) -> VerificationReport {
    run_suite_with(suite, max_n, Exec::default())
}

pub fn run_suite_with(suite: Suite, max_n: usize, exec: Exec) -> VerificationReport {
    let start = Instant::now();
    let selected: Vec<&Check> = CHECKS.iter().filter(|c| suite == Suite::All || c.suite == suite).collect();
    let mut checks = exec.map(&selected, |check| {
        let bound = check.bound.min(max_n);
        let t = Instant::now();
        let counterexample = (check.run)(bound, exec);
        CheckResult {
            name: check.name.to_string(),
            range: format!("n≤{bound}"),
            pass: counterexample.is_none(),
            counterexample,
            elapsed_ms: t.elapsed().as_millis() as u64,
        }
    });
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport {
        suite: suite.name().to_string(),
        max_n,
        checks,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

// First failing member of `class`, scanning n upwards and each size in
// lexicographic order.
fn first_perm_failure<F>(bound: usize, class: ClassId, exec: Exec, test: F) -> Option<String>
where
    F: Fn(&Permutation) -> Option<String> + Sync + Send,
{
    (0..=bound).find_map(|n| {
        let per_shard = exec.map(&class_shards(n, class), |shard| {
            shard.members().find_map(|sigma| test(&sigma).map(|why| format!("σ = {sigma}: {why}")))
        });
        per_shard.into_iter().flatten().next()
    })
}

fn first_path_failure<F>(bound: usize, exec: Exec, test: F) -> Option<String>
where
    F: Fn(&MotzkinPath) -> Option<String> + Sync + Send,
{
    (0..=bound).find_map(|n| {
        let per_shard = exec.map(&path_shards(n), |shard| {
            shard.members().iter().find_map(|p| test(p).map(|why| format!("P = {p}: {why}")))
        });
        per_shard.into_iter().flatten().next()
    })
}

fn differ<T: PartialEq + Display>(what: impl Display, expected: &T, got: &T) -> Option<String> {
    (expected != got).then(|| format!("{what}: expected {expected}, got {got}"))
}

fn inv_identity(bound: usize, exec: Exec) -> Option<String> {
    first_perm_failure(bound, ClassId::All, exec, |s| {
        let rhs = s.excedances().len() + s.crossings() + 2 * s.nestings();
        differ("inv vs exc+crs+2nes", &s.inversions(), &rhs)
    })
}

fn head_tail_roundtrip(bound: usize, exec: Exec) -> Option<String> {
    first_perm_failure(bound, ClassId::All, exec, |s| {
        differ("rebuilt", s, &Permutation::from_head_tail(&s.head_tail_pairs()))
    })
}

fn des_exc_tails(bound: usize, exec: Exec) -> Option<String> {
    first_perm_failure(bound, ClassId::S321B3142, exec, |s| {
        let pairs = s.head_tail_pairs();
        let (des, exc, tails) = (s.descents(), s.excedances(), pairs.tails());
        if des != exc || exc != tails {
            Some(format!("Des = {des:?}, Exc = {exc:?}, tails = {tails:?}"))
        } else if !pairs.tails_spaced() {
            Some(format!("tails {tails:?} not spaced by 2"))
        } else {
            None
        }
    })
}

fn s321_nonnesting(bound: usize, exec: Exec) -> Option<String> {
    first_perm_failure(bound, ClassId::S321B3142, exec, |s| differ("nes", &0, &s.nestings()))
}

fn class_counts(bound: usize, exec: Exec) -> Option<String> {
    let m = motzkin_numbers(bound);
    (0..=bound).find_map(|n| {
        [ClassId::I4321, ClassId::I3412, ClassId::S321B3142].into_iter().find_map(|class| {
            let count = exec.fold(&class_shards(n, class), || 0usize, |a, s| a + s.members().count(), |a, b| a + b);
            differ(format!("n = {n}, |{class}|"), &m[n].to_string(), &count.to_string())
        })
    })
}

fn area_identities(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let s = p.statistics();
        if s.up != s.down {
            Some(format!("up = {}, down = {}", s.up, s.down))
        } else if s.area + s.down != 2 * s.sh_d + s.sh_h {
            Some(format!("area = {} vs 2·sh_d + sh_h − down", s.area))
        } else if s.area != 2 * s.sh_u + s.sh_h + s.up {
            Some(format!("area = {} vs 2·sh_u + sh_h + up", s.area))
        } else if s.sh_u + s.down != s.sh_d {
            Some(format!("sh_u = {} vs sh_d − down", s.sh_u))
        } else {
            None
        }
    })
}

fn strip_roundtrip(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let pairs = p.strip_decomposition();
        let heads_rise = pairs.pairs().windows(2).all(|w| w[0].0 < w[1].0);
        let heads_fit = pairs.pairs().iter().all(|&(h, _)| h < p.len());
        if !heads_rise || !heads_fit || !pairs.tails_spaced() {
            return Some(format!("malformed pairs {pairs}"));
        }
        match MotzkinPath::from_head_tail(&pairs) {
            Ok(back) => differ(format!("rebuilt from {pairs}"), p, &back),
            Err(e) => Some(format!("{pairs} rejected: {e}")),
        }
    })
}

fn matchings_perfect(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let ups = p.indices_of(Step::Up);
        let downs = p.indices_of(Step::Down);
        for (label, matching) in [("sequential", p.sequential_matching()), ("tunnel", p.tunnel_matching())] {
            let mut a: Vec<usize> = matching.iter().map(|m| m.0).collect();
            let mut b: Vec<usize> = matching.iter().map(|m| m.1).collect();
            a.sort_unstable();
            b.sort_unstable();
            if a != ups || b != downs || matching.iter().any(|&(u, d)| u >= d) {
                return Some(format!("{label} matching {matching:?}"));
            }
        }
        None
    })
}

fn path_count_recurrence(bound: usize, exec: Exec) -> Option<String> {
    let counts: Vec<usize> = (0..=bound)
        .map(|n| exec.fold(&path_shards(n), || 0usize, |a, s| a + s.members().len(), |a, b| a + b))
        .collect();
    (1..=bound).find_map(|n| {
        let expect = counts[n - 1] + (0..n.saturating_sub(1)).map(|k| counts[k] * counts[n - 2 - k]).sum::<usize>();
        differ(format!("|M_{n}|"), &expect, &counts[n])
    })
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn transport_phi1(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let (s, st) = (crate::bijection::phi1(p), p.statistics());
        let got = tuple(&[s.fixed_points(), s.excedances().len(), s.crossings(), s.nestings()]);
        differ("(fp,exc,crs,nes)", &tuple(&[st.hor, st.up, 2 * st.sh_u, st.sh_h]), &got)
    })
}

fn transport_phi2(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let (s, st) = (crate::bijection::phi2(p), p.statistics());
        let got = tuple(&[s.fixed_points(), s.excedances().len(), s.crossings(), s.nestings()]);
        differ("(fp,exc,crs,nes)", &tuple(&[st.hor, st.up, 0, 2 * st.sh_u + st.sh_h]), &got)
    })
}

fn transport_phi3(bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let (s, st) = (crate::bijection::phi3(p), p.statistics());
        let got = tuple(&[s.excedances().len(), s.crossings(), s.inversions()]);
        differ("(exc,crs,inv)", &tuple(&[st.up, st.sh_u + st.sh_h, st.area - st.sh_u]), &got)
    })
}

fn roundtrip(map: Bijection, bound: usize, exec: Exec) -> Option<String> {
    first_path_failure(bound, exec, |p| {
        let sigma = map.apply(p);
        match map.invert(&sigma) {
            Ok(back) => differ(format!("{} image {sigma} pulled back", map.name()), p, &back),
            Err(e) => Some(format!("{} image rejected: {e}", map.name())),
        }
    })
}

fn q_collapse(bound: usize, _: Exec) -> Option<String> {
    let m = motzkin_numbers(bound);
    let (a, b) = (q_motzkin_sequence(bound), q_motzkin_tilde_sequence(bound));
    (0..=bound).find_map(|n| {
        let expect = BigInt::from(m[n].clone());
        differ(format!("M_{n}(1)"), &expect, &a[n].eval_at_one())
            .or_else(|| differ(format!("M̃_{n}(1)"), &expect, &b[n].eval_at_one()))
    })
}

fn tableau_recursion(bound: usize, _: Exec) -> Option<String> {
    let t = h_tableau(bound);
    (1..=bound).find_map(|n| {
        (1..=n).find_map(|i| match h_recursion_rhs(n, i, &t) {
            Ok(rhs) => differ(format!("H({n},{i})"), &t.get(n, i), &rhs),
            Err(e) => Some(e.to_string()),
        })
    })
}

fn tableau_first_column(bound: usize, _: Exec) -> Option<String> {
    let t = h_tableau(bound);
    let tilde = q_motzkin_tilde_sequence(bound);
    (0..=bound).find_map(|n| differ(format!("H({n},0)"), &tilde[n], &t.get(n, 0)))
}

fn tableau_row_sum(bound: usize, _: Exec) -> Option<String> {
    let t = h_tableau(bound);
    (1..=bound).find_map(|n| differ(format!("H({n},0)"), &(&t.get(n - 1, 0) + &t.get(n - 1, 1)), &t.get(n, 0)))
}

fn dumont_expansion(bound: usize, _: Exec) -> Option<String> {
    type Weight = fn(usize) -> UniPoly;
    let cases: [(&str, Preset, Weight, Weight); 3] = [
        ("motzkin", Preset::Motzkin, |_| UniPoly::one(), |_| UniPoly::one()),
        ("A", Preset::A, |k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(2 * (k - 1))),
        ("main12-rhs", Preset::Main12Rhs, |k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(k - 1)),
    ];
    cases.into_iter().find_map(|(label, preset, alpha, beta)| {
        let series = preset.uni_fraction().expect("univariate preset").expand(bound);
        let column = stieltjes_tableau(alpha, beta, bound).first_column();
        (0..=bound).find_map(|n| differ(format!("{label}, n = {n}"), &column[n], series.coeff(n)))
    })
}

fn a_functional(bound: usize, _: Exec) -> Option<String> {
    let a = Preset::A.uni_fraction().expect("univariate preset").expand(bound);
    let m = q_motzkin_sequence(bound);
    (0..=bound).find_map(|n| {
        let mut rhs = if n == 0 { UniPoly::one() } else { a.coeff(n - 1).clone() };
        for k in 0..n.saturating_sub(1) {
            rhs += &(a.coeff(k) * a.coeff(n - 2 - k)).shift(k);
        }
        differ(format!("A_{n} recurrence"), &rhs, a.coeff(n)).or_else(|| differ(format!("A_{n}"), &m[n], a.coeff(n)))
    })
}

fn mtilde_functional(bound: usize, _: Exec) -> Option<String> {
    let m = PowerSeries::new(q_motzkin_tilde_sequence(bound));
    let mut t_plus_t2 = vec![UniPoly::zero(); bound + 1];
    for c in t_plus_t2.iter_mut().take(3).skip(1) {
        *c = UniPoly::one();
    }
    let inner = m.substitute_q_t(1).shift(2).map(|c| c.shift(1));
    let d = PowerSeries::constant(UniPoly::one(), bound).minus(&inner);
    let lhs = m.times(&d, bound);
    let rhs = d.plus(&PowerSeries::new(t_plus_t2).times(&m, bound));
    (0..=bound).find_map(|n| differ(format!("coefficient of t^{n}"), rhs.coeff(n), lhs.coeff(n)))
}

fn main12(bound: usize, _: Exec) -> Option<String> {
    let lhs = Preset::Main12Lhs.uni_fraction().expect("univariate preset").expand(bound);
    let rhs = Preset::Main12Rhs.uni_fraction().expect("univariate preset").expand(bound);
    (0..=bound).find_map(|n| differ(format!("coefficient of t^{n}"), rhs.coeff(n), lhs.coeff(n)))
}

fn i_abcd_paths(bound: usize, exec: Exec) -> Option<String> {
    let series = Preset::IAbcd.series(bound);
    (0..=bound).find_map(|n| {
        let sum = path_distribution(n, MultiPoly::ABCD, exec, |p| {
            let s = p.statistics();
            vec![s.hor as u32, s.up as u32, s.sh_u as u32, s.sh_h as u32]
        });
        differ(format!("n = {n}"), series.coeff(n), &sum)
    })
}

fn dist(class: ClassId, n: usize, spec: StatSpec, exec: Exec) -> std::result::Result<MultiPoly, String> {
    distribution_with(class, n, spec, DistOptions { exec, allow_large: false }).map_err(|e| e.to_string())
}

fn compare_with<F>(bound: usize, class: ClassId, spec: StatSpec, exec: Exec, expected: F) -> Option<String>
where
    F: Fn(usize) -> MultiPoly,
{
    (0..=bound).find_map(|n| match dist(class, n, spec, exec) {
        Ok(got) => differ(format!("{class}, {spec}, n = {n}"), &expected(n), &got),
        Err(e) => Some(e),
    })
}

fn thm_main_4321(bound: usize, exec: Exec) -> Option<String> {
    let m = q_motzkin_sequence(bound);
    compare_with(bound, ClassId::I4321, StatSpec::CrsPlusNes, exec, |n| m[n].to_multi(MultiPoly::Q, "q"))
}

fn thm_main_3412(bound: usize, exec: Exec) -> Option<String> {
    let m = q_motzkin_sequence(bound);
    compare_with(bound, ClassId::I3412, StatSpec::Nes, exec, |n| m[n].to_multi(MultiPoly::Q, "q"))
}

fn thm_crs_s321(bound: usize, exec: Exec) -> Option<String> {
    let tilde = q_motzkin_tilde_sequence(bound);
    let t = h_tableau(bound);
    (0..=bound).find_map(|n| differ(format!("H({n},0)"), &tilde[n], &t.get(n, 0))).or_else(|| {
        compare_with(bound, ClassId::S321B3142, StatSpec::Crs, exec, |n| tilde[n].to_multi(MultiPoly::Q, "q"))
    })
}

fn fraction_4321(bound: usize, exec: Exec) -> Option<String> {
    let series = Preset::I4321Joint.series(bound);
    compare_with(bound, ClassId::I4321, StatSpec::JointFpExcCrsNes, exec, |n| series.coeff(n).clone())
}

fn fraction_3412(bound: usize, exec: Exec) -> Option<String> {
    // The preset carries no p; any crossing would show up as a stray p.
    let series = Preset::I3412Joint.series(bound);
    compare_with(bound, ClassId::I3412, StatSpec::JointFpExcCrsNes, exec, |n| series.coeff(n).clone())
}

fn fraction_s321(bound: usize, exec: Exec) -> Option<String> {
    let series = Preset::S321ExcCrs.series(bound);
    compare_with(bound, ClassId::S321B3142, StatSpec::JointExcCrs, exec, |n| series.coeff(n).clone())
}

fn transport_distributions(bound: usize, exec: Exec) -> Option<String> {
    type PathWeight = fn(&MotzkinPath) -> Vec<u32>;
    let cases: [(Bijection, StatSpec, PathWeight); 3] = [
        (Bijection::Phi1, StatSpec::JointFpExcCrsNes, |p| {
            let s = p.statistics();
            [s.hor, s.up, 2 * s.sh_u, s.sh_h].map(|v| v as u32).to_vec()
        }),
        (Bijection::Phi2, StatSpec::JointFpExcCrsNes, |p| {
            let s = p.statistics();
            [s.hor, s.up, 0, 2 * s.sh_u + s.sh_h].map(|v| v as u32).to_vec()
        }),
        (Bijection::Phi3, StatSpec::JointExcCrs, |p| {
            let s = p.statistics();
            [s.up, s.sh_u + s.sh_h].map(|v| v as u32).to_vec()
        }),
    ];
    (0..=bound).find_map(|n| {
        cases.iter().find_map(|&(map, spec, weight)| {
            let direct = match dist(map.target(), n, spec, exec) {
                Ok(d) => d,
                Err(e) => return Some(e),
            };
            let pushed = path_distribution(n, spec.vars(), exec, |p| spec.exponents(&map.apply(p)));
            let from_paths = path_distribution(n, spec.vars(), exec, weight);
            let label = format!("{}, n = {n}", map.name());
            differ(format!("{label}, pushed through the bijection"), &direct, &pushed)
                .or_else(|| differ(format!("{label}, path statistics"), &direct, &from_paths))
        })
    })
}
