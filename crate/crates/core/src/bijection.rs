//! Bijections between Motzkin paths and the three permutation classes.
//!
//! * [`phi1`]: 4321-avoiding involutions, 2-cycles from the sequential matching.
//! * [`phi2`]: 3412-avoiding involutions, 2-cycles from the tunnel matching.
//! * [`phi3`]: `S_n(321, 3̄142)`, via equality of the strip decomposition of
//!   the path and the canonical reduced decomposition of the permutation.
//!
//! Both involution bijections are inverted by [`involution_shape_path`],
//! which reads an involution's arcs as up, horizontal and down steps.

use crate::path::{MotzkinPath, Step};
use crate::perm::{ClassId, Permutation};
use crate::{Error, Result};

fn involution_from_matching(path: &MotzkinPath, pairs: &[(usize, usize)]) -> Permutation {
    Permutation::from_transpositions(path.len(), pairs).expect("a matching is a set of disjoint transpositions")
}

pub fn phi1(path: &MotzkinPath) -> Permutation {
    let sigma = involution_from_matching(path, &path.sequential_matching());
    debug_assert!(ClassId::I4321.contains(&sigma));
    sigma
}

pub fn phi2(path: &MotzkinPath) -> Permutation {
    let sigma = involution_from_matching(path, &path.tunnel_matching());
    debug_assert!(ClassId::I3412.contains(&sigma));
    sigma
}

/// Step `i` is `u` when `σ(i) > i`, `h` when `σ(i) = i` and `d` otherwise.
pub fn involution_shape_path(sigma: &Permutation) -> Result<MotzkinPath> {
    if !sigma.is_involution() {
        return Err(Error::NotInvolution(sigma.to_string()));
    }
    let steps = (1..=sigma.len())
        .map(|i| match sigma.at(i).cmp(&i) {
            std::cmp::Ordering::Greater => Step::Up,
            std::cmp::Ordering::Equal => Step::Hor,
            std::cmp::Ordering::Less => Step::Down,
        })
        .collect();
    Ok(MotzkinPath::new(steps).expect("arcs of an involution open before they close"))
}

pub fn phi3(path: &MotzkinPath) -> Permutation {
    Permutation::from_head_tail(&path.strip_decomposition())
}

pub fn phi3_inverse(sigma: &Permutation) -> Result<MotzkinPath> {
    if !ClassId::S321B3142.contains(sigma) {
        return Err(Error::NotInClass { perm: sigma.to_string(), class: ClassId::S321B3142.to_string() });
    }
    MotzkinPath::from_head_tail(&sigma.head_tail_pairs())
}

/// Which of the three bijections to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bijection {
    Phi1,
    Phi2,
    Phi3,
}

impl Bijection {
    pub const ALL: [Bijection; 3] = [Bijection::Phi1, Bijection::Phi2, Bijection::Phi3];

    pub fn apply(self, path: &MotzkinPath) -> Permutation {
        match self {
            Bijection::Phi1 => phi1(path),
            Bijection::Phi2 => phi2(path),
            Bijection::Phi3 => phi3(path),
        }
    }

    /// Inverse map, rejecting permutations outside the target class.
    pub fn invert(self, sigma: &Permutation) -> Result<MotzkinPath> {
        match self {
            Bijection::Phi3 => phi3_inverse(sigma),
            _ => {
                let class = self.target();
                if !class.contains(sigma) {
                    return Err(Error::NotInClass { perm: sigma.to_string(), class: class.to_string() });
                }
                involution_shape_path(sigma)
            }
        }
    }

    pub fn target(self) -> ClassId {
        match self {
            Bijection::Phi1 => ClassId::I4321,
            Bijection::Phi2 => ClassId::I3412,
            Bijection::Phi3 => ClassId::S321B3142,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Bijection::Phi1 => "phi1",
            Bijection::Phi2 => "phi2",
            Bijection::Phi3 => "phi3",
        }
    }
}

impl std::str::FromStr for Bijection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "phi1" => Ok(Bijection::Phi1),
            "phi2" => Ok(Bijection::Phi2),
            "phi3" => Ok(Bijection::Phi3),
            _ => Err(Error::Unknown { kind: "bijection", name: s.to_string() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = "uuhuudddudduuhdd";

    fn path(s: &str) -> MotzkinPath {
        s.parse().unwrap()
    }

    #[test]
    fn phi1_examples() {
        assert_eq!(phi1(&path(WORKED)).to_cycle_string(), "(1 6)(2 7)(3)(4 8)(5 10)(9 11)(12 15)(13 16)(14)");
        assert_eq!(phi1(&path("h")).to_string(), "1");
        assert_eq!(phi1(&path("ud")).to_string(), "2 1");
    }

    #[test]
    fn phi2_examples() {
        assert_eq!(phi2(&path(WORKED)).to_cycle_string(), "(1 11)(2 8)(3)(4 7)(5 6)(9 10)(12 16)(13 15)(14)");
        assert_eq!(phi2(&path("h")).to_string(), "1");
        assert_eq!(phi2(&path("uhd")).to_string(), "3 2 1");
    }

    #[test]
    fn shape_path_examples() {
        let sigma = phi1(&path(WORKED));
        assert_eq!(involution_shape_path(&sigma).unwrap(), path(WORKED));
        assert_eq!(involution_shape_path(&Permutation::identity(3)).unwrap(), path("hhh"));
        assert_eq!(involution_shape_path(&"2 1".parse().unwrap()).unwrap(), path("ud"));
        assert!(involution_shape_path(&"2 3 1".parse().unwrap()).is_err());
    }

    #[test]
    fn phi3_examples() {
        let sigma: Permutation = "6 1 7 2 3 8 4 10 5 11 9 15 12 16 13 14".parse().unwrap();
        assert_eq!(phi3(&path(WORKED)), sigma);
        assert_eq!(phi3_inverse(&sigma).unwrap(), path(WORKED));
        assert_eq!(phi3(&path("hh")).to_string(), "1 2");
        assert_eq!(phi3(&path("ud")).to_string(), "2 1");
        assert_eq!(phi3_inverse(&"1 2".parse().unwrap()).unwrap(), path("hh"));
        assert_eq!(phi3_inverse(&"2 1".parse().unwrap()).unwrap(), path("ud"));
        assert!(phi3_inverse(&"2 3 1".parse().unwrap()).is_err());
    }

    #[test]
    fn inverse_rejects_wrong_class() {
        // 4 3 2 1 is a 4321-containing involution.
        let sigma: Permutation = "4 3 2 1".parse().unwrap();
        assert!(Bijection::Phi1.invert(&sigma).is_err());
        assert!(Bijection::Phi2.invert(&sigma).is_ok());
        let sigma: Permutation = "3 4 1 2".parse().unwrap();
        assert!(Bijection::Phi2.invert(&sigma).is_err());
        assert_eq!(Bijection::Phi1.invert(&sigma).unwrap().to_string(), "uudd");
    }
}
