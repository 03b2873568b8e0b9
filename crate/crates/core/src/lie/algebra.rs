use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// The built-in graded Lie algebra families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Full Witt algebra, basis `e_n`, n ∈ ℤ.
    Witt,
    /// Positive Witt algebra, `e_n` with n ≥ 1.
    WittPositive,
    /// Cartan algebra W₁, `e_n` with n ≥ −1.
    CartanW1,
    /// Virasoro algebra, `e_n` plus the central element `z`.
    Virasoro,
    /// Cartan algebra Wₙ of polynomial vector fields, n ≥ 2.
    CartanW,
    /// Special (divergence-free) Cartan algebra Sₙ, n ≥ 2.
    SpecialS,
    /// Hamiltonian Cartan algebra Hₙ, n = 2m.
    HamiltonianH,
    /// Contact Cartan algebra Kₙ, n = 2m + 1.
    ContactK,
    /// Loop algebra sl₂[t, t⁻¹] graded by deg e = 1, deg f = −1, deg t = 3.
    LoopSl2,
    /// The algebra spanned by `x_i` (i ≥ 1) and `y` with `[y, x_i] = x_{i+1}`.
    ExampleD,
}

/// A graded Lie algebra: a family together with its dimension parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraSpec {
    family: Family,
    param: Option<u32>,
}

impl AlgebraSpec {
    pub fn new(family: Family, param: Option<u32>) -> Result<Self> {
        use Family::*;
        let ok = match (family, param) {
            (Witt | WittPositive | CartanW1 | Virasoro | LoopSl2 | ExampleD, None) => true,
            (CartanW | SpecialS, Some(n)) => n >= 2,
            (HamiltonianH, Some(n)) => n >= 2 && n % 2 == 0,
            (ContactK, Some(n)) => n >= 3 && n % 2 == 1,
            _ => false,
        };
        if ok {
            Ok(AlgebraSpec { family, param })
        } else {
            Err(Error::InvalidAlgebra(format!(
                "{family:?} does not accept parameter {param:?}"
            )))
        }
    }

    pub const fn witt() -> Self {
        AlgebraSpec {
            family: Family::Witt,
            param: None,
        }
    }

    pub const fn witt_positive() -> Self {
        AlgebraSpec {
            family: Family::WittPositive,
            param: None,
        }
    }

    pub const fn cartan_w1() -> Self {
        AlgebraSpec {
            family: Family::CartanW1,
            param: None,
        }
    }

    pub const fn virasoro() -> Self {
        AlgebraSpec {
            family: Family::Virasoro,
            param: None,
        }
    }

    pub const fn loop_sl2() -> Self {
        AlgebraSpec {
            family: Family::LoopSl2,
            param: None,
        }
    }

    pub const fn example_d() -> Self {
        AlgebraSpec {
            family: Family::ExampleD,
            param: None,
        }
    }

    pub fn cartan_w(n: u32) -> Result<Self> {
        Self::new(Family::CartanW, Some(n))
    }

    pub fn special_s(n: u32) -> Result<Self> {
        Self::new(Family::SpecialS, Some(n))
    }

    pub fn hamiltonian(n: u32) -> Result<Self> {
        Self::new(Family::HamiltonianH, Some(n))
    }

    pub fn contact(n: u32) -> Result<Self> {
        Self::new(Family::ContactK, Some(n))
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn param(&self) -> Option<u32> {
        self.param
    }

    /// Number of variables `n` of the multi-index families (0 otherwise).
    pub fn rank(&self) -> usize {
        self.param.unwrap_or(0) as usize
    }

    /// Every family tag, in declaration order.
    pub fn all_families() -> [Family; 10] {
        use Family::*;
        [
            Witt,
            WittPositive,
            CartanW1,
            Virasoro,
            CartanW,
            SpecialS,
            HamiltonianH,
            ContactK,
            LoopSl2,
            ExampleD,
        ]
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let name = match self.family {
            Witt => "witt",
            WittPositive => "witt+",
            CartanW1 => "w1",
            Virasoro => "virasoro",
            CartanW => "cartan-w",
            SpecialS => "special-s",
            HamiltonianH => "hamiltonian",
            ContactK => "contact",
            LoopSl2 => "loop-sl2",
            ExampleD => "example-d",
        };
        match self.param {
            Some(n) => write!(f, "{name}:{n}"),
            None => f.write_str(name),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Family::*;
        let (name, param) = match s.split_once(':') {
            Some((name, p)) => {
                let n = p
                    .trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidAlgebra(format!("bad parameter in {s:?}")))?;
                (name.trim(), Some(n))
            }
            None => (s.trim(), None),
        };
        let family = match name {
            "witt" => Witt,
            "witt+" => WittPositive,
            "w1" => CartanW1,
            "virasoro" => Virasoro,
            "cartan-w" => CartanW,
            "special-s" => SpecialS,
            "hamiltonian" => HamiltonianH,
            "contact" => ContactK,
            "loop-sl2" => LoopSl2,
            "example-d" => ExampleD,
            _ => return Err(Error::InvalidAlgebra(format!("unknown algebra {name:?}"))),
        };
        AlgebraSpec::new(family, param)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parameter_rules() {
        assert!(AlgebraSpec::cartan_w(1).is_err());
        assert!(AlgebraSpec::hamiltonian(3).is_err());
        assert!(AlgebraSpec::hamiltonian(4).is_ok());
        assert!(AlgebraSpec::contact(4).is_err());
        assert!(AlgebraSpec::contact(1).is_err());
        assert!(AlgebraSpec::new(Family::Witt, Some(2)).is_err());
    }

    #[test]
    fn names_round_trip() {
        for s in [
            "witt",
            "witt+",
            "w1",
            "virasoro",
            "cartan-w:3",
            "special-s:2",
            "hamiltonian:4",
            "contact:3",
            "loop-sl2",
            "example-d",
        ] {
            let alg: AlgebraSpec = s.parse().unwrap();
            assert_eq!(alg.to_string(), s);
        }
        assert!("cartan-w".parse::<AlgebraSpec>().is_err());
        assert!("witt:2".parse::<AlgebraSpec>().is_err());
    }
}
