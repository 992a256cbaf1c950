use std::fmt;
use std::str::FromStr;

use super::fraction::FractionSpec;
use super::multi::{MultiPoly, Vars};
use super::series::PowerSeries;
use super::uni::UniPoly;
use super::Coefficient;
use crate::{Error, Result};

/// Generating functions available by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Preset {
    /// Plain Motzkin fraction, `α_k = β_k = 1`.
    Motzkin,
    /// Path generating function `Σ a^hor b^up c^sh_u d^sh_h t^n`:
    /// `α_k = a·d^{k-1}`, `β_k = b·c^{k-1}`.
    IAbcd,
    /// `Σ x^fp y^exc p^crs q^nes t^n` over 4321-avoiding involutions:
    /// `α_k = x·q^{k-1}`, `β_k = y·p^{2(k-1)}`.
    I4321Joint,
    /// `Σ x^fp y^exc q^nes t^n` over 3412-avoiding involutions:
    /// `α_k = x·q^{k-1}`, `β_k = y·q^{2(k-1)}`.
    I3412Joint,
    /// `A(q;t)`: `α_k = q^{k-1}`, `β_k = q^{2(k-1)}`.
    A,
    /// `Σ y^exc q^crs t^n` over `S(321, 3̄142)`: `α_k = q^{k-1}`, `β_k = y·q^{k-1}`.
    S321ExcCrs,
    /// Nested fraction with `c₁ = t + t²`, `c_{2j} = q^{2j-1}t²`,
    /// `c_{2j+1} = q^j t + q^{2j} t²`.
    Main12Lhs,
    /// J-fraction with `α_k = β_k = q^{k-1}`.
    Main12Rhs,
    /// `M̃(q;t)` as the fixed point of
    /// `M̃(q;t) = 1/(1 - (t+t²)/(1 - q t² M̃(q;qt)))`.
    MtildeFunctional,
}

impl Preset {
    pub const ALL: [Preset; 9] = [
        Preset::Motzkin,
        Preset::IAbcd,
        Preset::I4321Joint,
        Preset::I3412Joint,
        Preset::A,
        Preset::S321ExcCrs,
        Preset::Main12Lhs,
        Preset::Main12Rhs,
        Preset::MtildeFunctional,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Motzkin => "motzkin",
            Preset::IAbcd => "I-abcd",
            Preset::I4321Joint => "I4321-fp-exc-crs-nes",
            Preset::I3412Joint => "I3412-fp-exc-nes",
            Preset::A => "A",
            Preset::S321ExcCrs => "S321-exc-crs",
            Preset::Main12Lhs => "main12-lhs",
            Preset::Main12Rhs => "main12-rhs",
            Preset::MtildeFunctional => "Mtilde-functional",
        }
    }

    pub fn vars(self) -> Vars {
        match self {
            Preset::IAbcd => MultiPoly::ABCD,
            Preset::I4321Joint | Preset::I3412Joint => MultiPoly::XYPQ,
            Preset::S321ExcCrs => MultiPoly::YQ,
            _ => MultiPoly::Q,
        }
    }

    pub fn fraction(self) -> Option<FractionSpec<MultiPoly>> {
        let v = self.vars();
        let pow = move |name: &'static str, k: usize| MultiPoly::var_pow(v, name, k as u32);
        let spec = match self {
            Preset::Motzkin => FractionSpec::jacobi(move |_| MultiPoly::one(v), move |_| MultiPoly::one(v)),
            Preset::IAbcd => {
                FractionSpec::jacobi(move |k| pow("a", 1) * pow("d", k - 1), move |k| pow("b", 1) * pow("c", k - 1))
            }
            Preset::I4321Joint => FractionSpec::jacobi(
                move |k| pow("x", 1) * pow("q", k - 1),
                move |k| pow("y", 1) * pow("p", 2 * (k - 1)),
            ),
            Preset::I3412Joint => FractionSpec::jacobi(
                move |k| pow("x", 1) * pow("q", k - 1),
                move |k| pow("y", 1) * pow("q", 2 * (k - 1)),
            ),
            Preset::A => FractionSpec::jacobi(move |k| pow("q", k - 1), move |k| pow("q", 2 * (k - 1))),
            Preset::S321ExcCrs => {
                FractionSpec::jacobi(move |k| pow("q", k - 1), move |k| pow("y", 1) * pow("q", k - 1))
            }
            Preset::Main12Rhs => FractionSpec::jacobi(move |k| pow("q", k - 1), move |k| pow("q", k - 1)),
            Preset::Main12Lhs => FractionSpec::nested(move |k| main12_numerator(k, &|e| pow("q", e))),
            Preset::MtildeFunctional => return None,
        };
        Some(spec)
    }

    /// Truncated series up to `t^order`.
    pub fn series(self, order: usize) -> PowerSeries<MultiPoly> {
        let to_multi = |s: PowerSeries<UniPoly>| s.map(|c| c.to_multi(MultiPoly::Q, "q"));
        match self {
            // The univariate presets run over dense polynomials.
            Preset::Motzkin | Preset::A | Preset::Main12Lhs | Preset::Main12Rhs => {
                to_multi(self.uni_fraction().expect("univariate preset").expand(order))
            }
            Preset::MtildeFunctional => to_multi(mtilde_functional(order)),
            _ => self.fraction().expect("fraction preset").expand(order),
        }
    }

    /// Same fraction with dense univariate coefficients, for the presets over `(q)`.
    pub fn uni_fraction(self) -> Option<FractionSpec<UniPoly>> {
        let spec = match self {
            Preset::Motzkin => FractionSpec::jacobi(|_| UniPoly::one(), |_| UniPoly::one()),
            Preset::A => FractionSpec::jacobi(|k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(2 * (k - 1))),
            Preset::Main12Rhs => FractionSpec::jacobi(|k| UniPoly::q_pow(k - 1), |k| UniPoly::q_pow(k - 1)),
            Preset::Main12Lhs => FractionSpec::nested(|k| main12_numerator(k, &UniPoly::q_pow)),
            _ => return None,
        };
        Some(spec)
    }
}

fn main12_numerator<C: Coefficient>(k: usize, q_pow: &dyn Fn(usize) -> C) -> (C, C) {
    if k == 1 {
        (q_pow(0), q_pow(0))
    } else if k % 2 == 0 {
        let j = k / 2;
        (q_pow(0).zero_like(), q_pow(2 * j - 1))
    } else {
        let j = k / 2;
        (q_pow(j), q_pow(2 * j))
    }
}

/// Iterates the functional equation from `M̃ = 1`; every pass fixes at least
/// one more coefficient.
fn mtilde_functional(order: usize) -> PowerSeries<UniPoly> {
    let one = UniPoly::one();
    let t_plus_t2 = {
        let mut c = vec![UniPoly::zero(); order + 1];
        if order >= 1 {
            c[1] = one.clone();
        }
        if order >= 2 {
            c[2] = one.clone();
        }
        PowerSeries::new(c)
    };
    let mut m = PowerSeries::constant(one, order);
    for _ in 0..=order {
        let inner = m.substitute_q_t(1).shift(2).map(|c| c.shift(1));
        let denom = PowerSeries::geometric(&inner);
        let next = PowerSeries::geometric(&t_plus_t2.times(&denom, order));
        if next == m {
            break;
        }
        m = next;
    }
    m
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Unknown { kind: "preset", name: s.to_string() })
    }
}

/// Looks a preset up by name and expands it up to `t^order`.
pub fn named_series(name: &str, order: usize) -> Result<PowerSeries<MultiPoly>> {
    Ok(name.parse::<Preset>()?.series(order))
}
