//! Exact polynomial arithmetic, q-Motzkin numbers, Stieltjes tableaux and
//! continued-fraction expansion.

mod fraction;
mod motzkin;
mod multi;
mod presets;
mod render;
mod series;
mod tableau;
mod uni;

use std::fmt::Debug;

pub use fraction::{FractionSpec, Level, Numerator};
pub use motzkin::{
    motzkin_number, motzkin_numbers, q_motzkin, q_motzkin_sequence, q_motzkin_tilde, q_motzkin_tilde_sequence,
};
pub use multi::{MultiPoly, Vars};
pub use presets::{named_series, Preset};
pub use series::PowerSeries;
pub use tableau::{h_recursion_rhs, h_tableau, stieltjes_tableau, StieltjesTableau};
pub use uni::UniPoly;

/// Exact commutative ring operations shared by [`UniPoly`] and [`MultiPoly`],
/// so that power series and continued fractions can run over either.
pub trait Coefficient: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
}
