use std::cmp::Ordering;
use std::fmt;

use super::algebra::{AlgebraSpec, Family};
use super::multi_index::MultiIndex;
use crate::error::{Error, Result};

/// Root vector of sl₂ in the loop algebra basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sl2Root {
    E,
    F,
    H,
}

impl Sl2Root {
    fn weight(self) -> i64 {
        match self {
            Sl2Root::E => 1,
            Sl2Root::F => -1,
            Sl2Root::H => 0,
        }
    }
}

/// A homogeneous basis vector of one of the built-in algebras.
///
/// The same variant may be shared by several families (`E` is the basis of
/// the Witt family and the non-central part of the Virasoro algebra); which
/// indices are legal is decided by [`AlgebraSpec::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisElement {
    /// `e_n` of W, W₊, W₁ and the Virasoro algebra.
    E(i64),
    /// The Virasoro central element.
    Z,
    /// `x^i ∂_k` in Wₙ; `dir` is 1-based.
    W { exp: MultiIndex, dir: u8 },
    /// `x^i ∂_1` in Sₙ with `i_1 = 0`.
    SA(MultiIndex),
    /// `i_k x^{i-1_k} ∂_1 − i_1 x^{i-1_1} ∂_k` in Sₙ with `i_1 ≠ 0`, `k ≥ 2`.
    SB { exp: MultiIndex, dir: u8 },
    /// `D_H(x^i)` in Hₙ, `i ≠ 0`.
    DH(MultiIndex),
    /// `D_K(x^i)` in Kₙ.
    DK(MultiIndex),
    /// `e·tᵖ`, `f·tᵖ` or `h·tᵖ` in the sl₂ loop algebra.
    Loop { root: Sl2Root, power: i64 },
    /// `x_n` of the algebra D, n ≥ 1.
    X(i64),
    /// `y` of the algebra D.
    Y,
}

/// K-weight `Σ_{ℓ≤2m} i_ℓ + 2 i_n`.
pub(crate) fn contact_weight(i: &MultiIndex) -> i64 {
    let n = i.len();
    let e = i.entries();
    e[..n - 1].iter().map(|&v| v as i64).sum::<i64>() + 2 * e[n - 1] as i64
}

impl BasisElement {
    pub fn w(exp: impl Into<MultiIndex>, dir: u8) -> Self {
        BasisElement::W {
            exp: exp.into(),
            dir,
        }
    }

    pub fn sa(exp: impl Into<MultiIndex>) -> Self {
        BasisElement::SA(exp.into())
    }

    pub fn sb(exp: impl Into<MultiIndex>, dir: u8) -> Self {
        BasisElement::SB {
            exp: exp.into(),
            dir,
        }
    }

    pub fn dh(exp: impl Into<MultiIndex>) -> Self {
        BasisElement::DH(exp.into())
    }

    pub fn dk(exp: impl Into<MultiIndex>) -> Self {
        BasisElement::DK(exp.into())
    }

    pub fn loop_elem(root: Sl2Root, power: i64) -> Self {
        BasisElement::Loop { root, power }
    }

    /// The ℤ-grading degree. Intrinsic to the element: every family's
    /// grading is readable off the basis label.
    pub fn degree(&self) -> i64 {
        use BasisElement::*;
        match self {
            E(n) | X(n) => *n,
            Z => 0,
            Y => 1,
            W { exp, .. } => exp.total() as i64 - 1,
            SA(exp) => exp.total() as i64 - 1,
            SB { exp, .. } => exp.total() as i64 - 2,
            DH(exp) => exp.total() as i64 - 2,
            DK(exp) => contact_weight(exp) - 2,
            Loop { root, power } => root.weight() + 3 * power,
        }
    }

    fn family_rank(&self) -> u8 {
        use BasisElement::*;
        match self {
            E(_) | Z => 0,
            W { .. } => 1,
            SA(_) | SB { .. } => 2,
            DH(_) => 3,
            DK(_) => 4,
            Loop { .. } => 5,
            X(_) | Y => 6,
        }
    }

    /// Primary sort key: the grading-compatible major part of each family's
    /// order, followed by a small family-specific tag.
    fn coarse_key(&self) -> (i64, i64) {
        use BasisElement::*;
        match self {
            E(n) => (*n, 1),
            Z => (0, 0),
            X(n) => (*n, 0),
            Y => (1, 1),
            Loop { .. } => (self.degree(), 0),
            W { exp, dir } => (exp.total() as i64, *dir as i64),
            SA(exp) => (exp.total() as i64, 1),
            SB { exp, dir } => (exp.total() as i64 - 1, *dir as i64),
            DH(exp) => (exp.total() as i64, 0),
            DK(exp) => (contact_weight(exp), 0),
        }
    }

    fn exponent(&self) -> Option<&MultiIndex> {
        use BasisElement::*;
        match self {
            W { exp, .. } | SA(exp) | SB { exp, .. } | DH(exp) | DK(exp) => Some(exp),
            _ => None,
        }
    }
}

impl Ord for BasisElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.family_rank()
            .cmp(&other.family_rank())
            .then_with(|| self.coarse_key().cmp(&other.coarse_key()))
            .then_with(|| match (self.exponent(), other.exponent()) {
                // SB tie-breaks on i − 1₁; shifting both first entries by one
                // leaves the reverse-lex comparison unchanged.
                (Some(a), Some(b)) => a.cmp_reverse_lex(b),
                _ => Ordering::Equal,
            })
    }
}

impl PartialOrd for BasisElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use BasisElement::*;
        match self {
            E(n) => write!(f, "e[{n}]"),
            Z => f.write_str("z"),
            W { exp, dir } => write!(f, "x[{exp}]d[{dir}]"),
            SA(exp) => write!(f, "SA[{exp}]"),
            SB { exp, dir } => write!(f, "SB[{exp};{dir}]"),
            DH(exp) => write!(f, "DH[{exp}]"),
            DK(exp) => write!(f, "DK[{exp}]"),
            Loop { root, power } => write!(f, "{root:?}[{power}]"),
            X(n) => write!(f, "X[{n}]"),
            Y => f.write_str("Y"),
        }
    }
}

impl AlgebraSpec {
    /// Checks that `b` labels a basis vector of this algebra.
    pub fn validate(&self, b: &BasisElement) -> Result<()> {
        use BasisElement::*;
        let n = self.rank();
        let reason: Option<String> = match (self.family(), b) {
            (Family::Witt, E(_)) => None,
            (Family::WittPositive, E(i)) => (*i < 1).then(|| "index must be ≥ 1".into()),
            (Family::CartanW1, E(i)) => (*i < -1).then(|| "index must be ≥ -1".into()),
            (Family::Virasoro, E(_) | Z) => None,
            (Family::CartanW, W { exp, dir }) => {
                if exp.len() != n {
                    Some(format!("multi-index must have {n} entries"))
                } else if *dir < 1 || *dir as usize > n {
                    Some(format!("direction must lie in 1..={n}"))
                } else {
                    None
                }
            }
            (Family::SpecialS, SA(exp)) => {
                if exp.len() != n {
                    Some(format!("multi-index must have {n} entries"))
                } else if exp.get(1) != 0 {
                    Some("SA requires first exponent 0".into())
                } else {
                    None
                }
            }
            (Family::SpecialS, SB { exp, dir }) => {
                if exp.len() != n {
                    Some(format!("multi-index must have {n} entries"))
                } else if exp.get(1) == 0 {
                    Some("SB requires nonzero first exponent".into())
                } else if *dir < 2 || *dir as usize > n {
                    Some(format!("direction must lie in 2..={n}"))
                } else {
                    None
                }
            }
            (Family::HamiltonianH, DH(exp)) => {
                if exp.len() != n {
                    Some(format!("multi-index must have {n} entries"))
                } else if exp.is_zero() {
                    Some("D_H kills constants; multi-index must be nonzero".into())
                } else {
                    None
                }
            }
            (Family::ContactK, DK(exp)) => {
                (exp.len() != n).then(|| format!("multi-index must have {n} entries"))
            }
            (Family::LoopSl2, Loop { .. }) => None,
            (Family::ExampleD, X(i)) => (*i < 1).then(|| "index must be ≥ 1".into()),
            (Family::ExampleD, Y) => None,
            _ => Some("element belongs to a different family".into()),
        };
        match reason {
            None => Ok(()),
            Some(reason) => Err(Error::InvalidElement {
                algebra: *self,
                element: b.clone(),
                reason,
            }),
        }
    }

    /// The ℤ-degree of a validated basis element.
    pub fn degree(&self, b: &BasisElement) -> Result<i64> {
        self.validate(b)?;
        Ok(b.degree())
    }

    /// Total order on the basis, compatible with the grading.
    pub fn compare_basis(&self, a: &BasisElement, b: &BasisElement) -> Result<Ordering> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(a.cmp(b))
    }

    /// All basis elements of degree exactly `d`, ascending.
    pub fn enumerate_component(&self, d: i64) -> Vec<BasisElement> {
        use BasisElement::*;
        let n = self.rank();
        let mut out = match self.family() {
            Family::Witt => vec![E(d)],
            Family::WittPositive => (d >= 1).then(|| E(d)).into_iter().collect(),
            Family::CartanW1 => (d >= -1).then(|| E(d)).into_iter().collect(),
            Family::Virasoro if d == 0 => vec![Z, E(0)],
            Family::Virasoro => vec![E(d)],
            Family::CartanW => {
                if d < -1 {
                    Vec::new()
                } else {
                    let monos = MultiIndex::with_total(n, (d + 1) as u32);
                    (1..=n as u8)
                        .flat_map(|k| {
                            monos.iter().map(move |m| W {
                                exp: m.clone(),
                                dir: k,
                            })
                        })
                        .collect()
                }
            }
            Family::SpecialS => {
                let mut v = Vec::new();
                if d >= -1 {
                    v.extend(
                        MultiIndex::with_total(n, (d + 1) as u32)
                            .into_iter()
                            .filter(|m| m.get(1) == 0)
                            .map(SA),
                    );
                }
                if d >= -1 {
                    let monos: Vec<_> = MultiIndex::with_total(n, (d + 2) as u32)
                        .into_iter()
                        .filter(|m| m.get(1) != 0)
                        .collect();
                    for k in 2..=n as u8 {
                        v.extend(monos.iter().map(|m| SB {
                            exp: m.clone(),
                            dir: k,
                        }));
                    }
                }
                v
            }
            Family::HamiltonianH => {
                if d < -1 {
                    Vec::new()
                } else {
                    MultiIndex::with_total(n, (d + 2) as u32)
                        .into_iter()
                        .map(DH)
                        .collect()
                }
            }
            Family::ContactK => {
                if d < -2 {
                    Vec::new()
                } else {
                    let w = d + 2;
                    let mut v = Vec::new();
                    for last in 0..=(w / 2) {
                        let rest = (w - 2 * last) as u32;
                        for m in MultiIndex::with_total(n - 1, rest) {
                            let mut e = m.entries().to_vec();
                            e.push(last as u32);
                            v.push(DK(MultiIndex::new(e)));
                        }
                    }
                    v
                }
            }
            Family::LoopSl2 => {
                let (root, rem) = match d.rem_euclid(3) {
                    0 => (Sl2Root::H, 0),
                    1 => (Sl2Root::E, 1),
                    _ => (Sl2Root::F, -1),
                };
                vec![Loop {
                    root,
                    power: (d - rem) / 3,
                }]
            }
            Family::ExampleD => match d {
                1 => vec![X(1), Y],
                d if d >= 2 => vec![X(d)],
                _ => Vec::new(),
            },
        };
        out.sort();
        out
    }

    /// Basis elements with degree in `lo..=hi`, ascending.
    pub fn enumerate_window(&self, lo: i64, hi: i64) -> Vec<BasisElement> {
        (lo..=hi)
            .flat_map(|d| self.enumerate_component(d))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use BasisElement::*;

    #[test]
    fn degrees() {
        assert_eq!(AlgebraSpec::witt().degree(&E(5)).unwrap(), 5);
        let k3 = AlgebraSpec::contact(3).unwrap();
        assert_eq!(k3.degree(&BasisElement::dk([0, 0, 1])).unwrap(), 0);
        let f1 = BasisElement::loop_elem(Sl2Root::F, 1);
        assert_eq!(AlgebraSpec::loop_sl2().degree(&f1).unwrap(), 2);
        assert_eq!(AlgebraSpec::example_d().degree(&Y).unwrap(), 1);
    }

    #[test]
    fn orders() {
        let vir = AlgebraSpec::virasoro();
        assert_eq!(vir.compare_basis(&Z, &E(0)).unwrap(), Ordering::Less);
        assert_eq!(vir.compare_basis(&E(-1), &Z).unwrap(), Ordering::Less);
        let w2 = AlgebraSpec::cartan_w(2).unwrap();
        let d1 = BasisElement::w([0, 0], 1);
        let d2 = BasisElement::w([0, 0], 2);
        assert_eq!(w2.compare_basis(&d1, &d2).unwrap(), Ordering::Less);
        assert_eq!(
            AlgebraSpec::witt().compare_basis(&E(3), &E(3)).unwrap(),
            Ordering::Equal
        );
        let d = AlgebraSpec::example_d();
        assert_eq!(d.compare_basis(&X(1), &Y).unwrap(), Ordering::Less);
        assert_eq!(d.compare_basis(&Y, &X(2)).unwrap(), Ordering::Less);
    }

    #[test]
    fn special_order_matches_explicit_rules() {
        // SA vs SB: (|i|, 1) < (|j| − 1, k)
        let s2 = AlgebraSpec::special_s(2).unwrap();
        let a = BasisElement::sa([0, 2]);
        let b = BasisElement::sb([1, 2], 2);
        assert_eq!(s2.compare_basis(&a, &b).unwrap(), Ordering::Less);
        // two SB elements: (|i|, k, i_n, …, i_1) lex
        let b1 = BasisElement::sb([2, 1], 2);
        let b2 = BasisElement::sb([1, 2], 2);
        assert_eq!(s2.compare_basis(&b1, &b2).unwrap(), Ordering::Less);
    }

    #[test]
    fn components() {
        let vir = AlgebraSpec::virasoro();
        assert_eq!(vir.enumerate_component(0), vec![Z, E(0)]);
        assert!(AlgebraSpec::witt_positive()
            .enumerate_component(0)
            .is_empty());
        let w2 = AlgebraSpec::cartan_w(2).unwrap();
        assert_eq!(
            w2.enumerate_component(-1),
            vec![BasisElement::w([0, 0], 1), BasisElement::w([0, 0], 2)]
        );
        let s3 = AlgebraSpec::special_s(3).unwrap();
        // dim S_n degree d = n·C(d+n, n−1) − C(d+n−1, n−1); n = 3, d = 1: 18 − 3
        assert_eq!(s3.enumerate_component(1).len(), 15);
        assert_eq!(s3.enumerate_component(-1).len(), 3);
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        assert_eq!(h2.enumerate_component(-1).len(), 2);
        assert!(h2.enumerate_component(-2).is_empty());
        let k3 = AlgebraSpec::contact(3).unwrap();
        assert_eq!(
            k3.enumerate_component(-2),
            vec![BasisElement::dk([0, 0, 0])]
        );
    }

    #[test]
    fn components_are_sorted_and_homogeneous() {
        let algs = [
            AlgebraSpec::cartan_w(3).unwrap(),
            AlgebraSpec::special_s(3).unwrap(),
            AlgebraSpec::hamiltonian(4).unwrap(),
            AlgebraSpec::contact(5).unwrap(),
            AlgebraSpec::loop_sl2(),
        ];
        for alg in algs {
            let window = alg.enumerate_window(-3, 4);
            for pair in window.windows(2) {
                assert!(pair[0] < pair[1], "{alg}: {:?} !< {:?}", pair[0], pair[1]);
                assert!(pair[0].degree() <= pair[1].degree());
            }
            for b in &window {
                alg.validate(b).unwrap();
            }
        }
    }

    #[test]
    fn validation() {
        let wp = AlgebraSpec::witt_positive();
        assert!(wp.validate(&E(0)).is_err());
        assert!(wp.validate(&Z).is_err());
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        assert!(h2.validate(&BasisElement::dh([0, 0])).is_err());
        let s2 = AlgebraSpec::special_s(2).unwrap();
        assert!(s2.validate(&BasisElement::sa([1, 0])).is_err());
        assert!(s2.validate(&BasisElement::sb([1, 0], 1)).is_err());
    }
}
