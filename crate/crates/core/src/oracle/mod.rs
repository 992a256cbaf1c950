//! Brute-force enumeration oracle: exact statistic distributions over the
//! permutation classes and Motzkin paths, and the verification suites that
//! compare them with the bijections and the polynomial side.

mod distribution;
mod suite;

pub use distribution::{distribution, distribution_with, path_distribution, DistOptions, StatSpec, FULL_SCAN_LIMIT};
pub use suite::{run_suite, run_suite_with, CheckResult, Suite, VerificationReport};
