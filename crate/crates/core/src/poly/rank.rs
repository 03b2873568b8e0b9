use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::polynomial::Polynomial;
use crate::error::{Error, Result};
use crate::lie::BasisElement;

/// Which end of the basis order an operation looks at.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// `(leader, degree in leader)`, compared lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RankInfo {
    pub leader: BasisElement,
    pub degree: u32,
}

impl fmt::Display for RankInfo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.leader, self.degree)
    }
}

impl Polynomial {
    /// Largest (`Plus`) or smallest (`Minus`) variable occurring in `self`.
    pub fn leader(&self, sign: Sign) -> Result<BasisElement> {
        let found = match sign {
            Sign::Plus => self.terms().filter_map(|(m, _)| m.largest()).max(),
            Sign::Minus => self.terms().filter_map(|(m, _)| m.smallest()).min(),
        };
        found.cloned().ok_or(Error::ConstantPolynomial)
    }

    pub fn degree_in_leader(&self, sign: Sign) -> Result<u32> {
        let l = self.leader(sign)?;
        Ok(self.degree_in(&l))
    }

    /// Coefficient of `ℓ^d` in the `ℓ`-adic expansion.
    pub fn initial(&self, sign: Sign) -> Result<Polynomial> {
        let l = self.leader(sign)?;
        Ok(self.coefficient_of_power(&l, self.degree_in(&l)))
    }

    /// `∂f/∂ℓ`.
    pub fn separant(&self, sign: Sign) -> Result<Polynomial> {
        let l = self.leader(sign)?;
        Ok(self.derivative(&l))
    }

    pub fn rank(&self, sign: Sign) -> Result<RankInfo> {
        let leader = self.leader(sign)?;
        let degree = self.degree_in(&leader);
        Ok(RankInfo { leader, degree })
    }
}

pub fn compare_rank(f: &Polynomial, g: &Polynomial, sign: Sign) -> Result<Ordering> {
    Ok(f.rank(sign)?.cmp(&g.rank(sign)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::lie::AlgebraSpec;
    use crate::lie::BasisElement::E;

    fn sample() -> (AlgebraSpec, Polynomial) {
        let w = AlgebraSpec::witt_positive();
        let e = |n| Polynomial::var(w, E(n)).unwrap();
        (w, &(&e(1).pow(2) * &e(3)) + &e(2))
    }

    #[test]
    fn leaders_and_degrees() {
        let (w, f) = sample();
        assert_eq!(f.leader(Sign::Plus).unwrap(), E(3));
        assert_eq!(f.leader(Sign::Minus).unwrap(), E(1));
        assert_eq!(f.degree_in_leader(Sign::Plus).unwrap(), 1);
        assert_eq!(f.degree_in_leader(Sign::Minus).unwrap(), 2);
        let c = Polynomial::constant(w, int(5));
        assert_eq!(c.leader(Sign::Plus), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn initials_and_separants() {
        let (w, f) = sample();
        let e = |n| Polynomial::var(w, E(n)).unwrap();
        assert_eq!(f.initial(Sign::Plus).unwrap(), e(1).pow(2));
        assert_eq!(f.initial(Sign::Minus).unwrap(), e(3));
        assert_eq!(f.separant(Sign::Plus).unwrap(), e(1).pow(2));
        assert_eq!(
            f.separant(Sign::Minus).unwrap(),
            (&e(1) * &e(3)).scale(&int(2))
        );
        assert_eq!(e(4).initial(Sign::Plus).unwrap(), Polynomial::one(w));
        assert_eq!(e(4).separant(Sign::Plus).unwrap(), Polynomial::one(w));
    }

    #[test]
    fn rank_order() {
        let w = AlgebraSpec::witt_positive();
        let e = |n| Polynomial::var(w, E(n)).unwrap();
        assert_eq!(
            compare_rank(&e(1).pow(2), &e(1).pow(3), Sign::Plus).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_rank(&e(1).pow(9), &e(2), Sign::Plus).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_rank(&e(1).pow(2), &e(1).pow(2), Sign::Plus).unwrap(),
            Ordering::Equal
        );
    }
}
