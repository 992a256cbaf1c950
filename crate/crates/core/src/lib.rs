//! Crossings and nestings of Motzkin objects.
//!
//! The crate is organised around three families of objects counted by the
//! Motzkin numbers: Motzkin paths ([`path`]), 4321- and 3412-avoiding
//! involutions, and permutations avoiding both 321 and the barred pattern
//! 3̄142 ([`perm`]). The [`bijection`] module maps paths onto each family,
//! [`qpoly`] carries the exact polynomial machinery (q-Motzkin numbers,
//! Stieltjes tableaux, continued-fraction expansion), and [`oracle`]
//! confronts every identity with brute-force enumeration.
//!
//! Enumeration-heavy routines take an [`Exec`] argument. With the default
//! `parallel` feature they fan out over rayon; without it every routine
//! runs sequentially.

pub mod bijection;
mod error;
mod exec;
pub mod oeis;
pub mod oracle;
pub mod path;
pub mod perm;
pub mod qpoly;

pub use error::{Error, Result};
pub use exec::Exec;
