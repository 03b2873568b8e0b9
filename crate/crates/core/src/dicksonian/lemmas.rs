use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::lset::l_member;
use super::MembershipReport;
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement, Family, MultiIndex};
use crate::poly::Sign;

/// The leader-set containment claims that can be machine-checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaTag {
    /// Wₙ: `x^r∂_k ∈ L₊(x^i∂_k)` for `r > i` when `(i_1..i_{k-1}) ≠ 0`.
    WI,
    /// Wₙ: the case `(i_1..i_{k-1}) = 0`.
    WII,
    /// Sₙ: `x^r∂_1 ∈ L₊(x^i∂_1)` for `r > i`, `r_1 = 0`.
    SI,
    /// Sₙ: the `SB` elements.
    SII,
    /// Hₙ, generic exponent: `D_H(x^{i+r·1_ℓ})`, `r ≥ 1`.
    H1,
    /// Hₙ, `i_ℓ = 2 i_{m+ℓ} ≠ 0`: `r ≥ 2`.
    H2,
    /// Kₙ, the symplectic directions.
    K1,
    /// Kₙ, the contact direction `x_n`.
    K2,
}

impl LemmaTag {
    pub fn all() -> [LemmaTag; 8] {
        use LemmaTag::*;
        [WI, WII, SI, SII, H1, H2, K1, K2]
    }

    pub fn family(self) -> Family {
        use LemmaTag::*;
        match self {
            WI | WII => Family::CartanW,
            SI | SII => Family::SpecialS,
            H1 | H2 => Family::HamiltonianH,
            K1 | K2 => Family::ContactK,
        }
    }
}

impl fmt::Display for LemmaTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LemmaTag::*;
        f.write_str(match self {
            WI => "W_i",
            WII => "W_ii",
            SI => "S_i",
            SII => "S_ii",
            H1 => "H_1",
            H2 => "H_2",
            K1 => "K_1",
            K2 => "K_2",
        })
    }
}

impl FromStr for LemmaTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaTag::all()
            .into_iter()
            .find(|t| t.to_string() == s)
            .ok_or_else(|| Error::InvalidAlgebra(format!("unknown lemma tag {s:?}")))
    }
}

fn strictly_above(r: &MultiIndex, i: &MultiIndex) -> bool {
    i.strictly_dominated_by(r)
}

fn claims(alg: AlgebraSpec, lemma: LemmaTag, bound: u32) -> Vec<(BasisElement, BasisElement)> {
    let n = alg.rank();
    let boxed = MultiIndex::boxed(n, bound);
    let mut out = Vec::new();
    let head_zero = |v: &MultiIndex, k: usize| (1..k).all(|p| v.get(p) == 0);
    match lemma {
        LemmaTag::WI | LemmaTag::WII => {
            for i in &boxed {
                for k in 1..=n {
                    let general = !head_zero(i, k);
                    if general != (lemma == LemmaTag::WI) {
                        continue;
                    }
                    let relaxed = i.get(k) == 1 && *i != MultiIndex::unit(n, k);
                    for r in boxed.iter().filter(|r| strictly_above(r, i)) {
                        let keep = general
                            || (head_zero(r, k)
                                && (relaxed || r.get(k) as i64 != 2 * i.get(k) as i64 - 1));
                        if keep {
                            out.push((
                                BasisElement::w(i.clone(), k as u8),
                                BasisElement::w(r.clone(), k as u8),
                            ));
                        }
                    }
                }
            }
        }
        LemmaTag::SI => {
            for i in boxed.iter().filter(|i| i.get(1) == 0) {
                for r in boxed
                    .iter()
                    .filter(|r| r.get(1) == 0 && strictly_above(r, i))
                {
                    out.push((BasisElement::sa(i.clone()), BasisElement::sa(r.clone())));
                }
            }
        }
        LemmaTag::SII => {
            for i in boxed.iter().filter(|i| i.get(1) >= 1) {
                for k in 2..=n {
                    for r in boxed.iter().filter(|r| strictly_above(r, i)) {
                        let tail: i64 = (2..=n).map(|j| r.get(j) as i64 - i.get(j) as i64).sum();
                        if tail == 1 {
                            continue;
                        }
                        let (i1, r1, rk) = (i.get(1) as i64, r.get(1) as i64, r.get(k) as i64);
                        if i1 >= 2 && rk * (r1 - i1 + 2) + 1 == i1 {
                            continue;
                        }
                        out.push((
                            BasisElement::sb(i.clone(), k as u8),
                            BasisElement::sb(r.clone(), k as u8),
                        ));
                    }
                }
            }
        }
        LemmaTag::H1 | LemmaTag::H2 | LemmaTag::K1 => {
            let m = n / 2;
            let make = |v: MultiIndex| match lemma {
                LemmaTag::K1 => BasisElement::DK(v),
                _ => BasisElement::DH(v),
            };
            for i in &boxed {
                if lemma != LemmaTag::K1 && i.is_zero() {
                    continue;
                }
                for l in 1..=m {
                    for (p, q) in [(l, m + l), (m + l, l)] {
                        let (ip, iq) = (i.get(p), i.get(q));
                        let generic = ip != 2 * iq;
                        let start = match lemma {
                            LemmaTag::H1 if generic => 1,
                            LemmaTag::H2 if !generic && ip != 0 => 2,
                            LemmaTag::K1 if generic => 1,
                            LemmaTag::K1 if ip != 0 => 2,
                            _ => continue,
                        };
                        for r in start..=bound.saturating_sub(ip) {
                            out.push((make(i.clone()), make(i.inc_by(p, r))));
                        }
                    }
                }
            }
        }
        LemmaTag::K2 => {
            for i in &boxed {
                let start = if i.total() == 2 { 2 } else { 1 };
                for r in start..=bound.saturating_sub(i.get(n)) {
                    out.push((
                        BasisElement::DK(i.clone()),
                        BasisElement::DK(i.inc_by(n, r)),
                    ));
                }
            }
        }
    }
    out
}

/// Confirms via [`l_member`] that every member claimed by `lemma` within
/// the entry bound really lies in `L₊` of its base element.
pub fn verify_claimed_subset(
    alg: AlgebraSpec,
    lemma: LemmaTag,
    index_bound: u32,
) -> Result<MembershipReport> {
    if alg.family() != lemma.family() {
        return Err(Error::FamilyMismatch {
            lemma: lemma.to_string(),
            algebra: alg,
        });
    }
    let claims = claims(alg, lemma, index_bound);
    let verdicts: Vec<bool> = claims
        .par_iter()
        .map(|(m, t)| l_member(alg, m, t, Sign::Plus).map(|r| r.verdict))
        .collect::<Result<_>>()?;
    let failures: Vec<String> = claims
        .iter()
        .zip(&verdicts)
        .filter(|(_, ok)| !**ok)
        .map(|((m, t), _)| format!("({m}, {t})"))
        .collect();
    Ok(if failures.is_empty() {
        MembershipReport::pass(format!(
            "{lemma} on {alg}: {} claims confirmed",
            claims.len()
        ))
    } else {
        MembershipReport::fail(format!(
            "{lemma} on {alg}: {} of {} claims rejected: {}",
            failures.len(),
            claims.len(),
            failures.join(" ")
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn witness_from_proof_construction() {
        let w2 = AlgebraSpec::cartan_w(2).unwrap();
        let r = l_member(
            w2,
            &BasisElement::w([1, 1], 2),
            &BasisElement::w([2, 1], 2),
            Sign::Plus,
        )
        .unwrap();
        assert!(r.verdict);
    }

    #[test]
    fn family_guard() {
        let w = AlgebraSpec::witt();
        assert!(matches!(
            verify_claimed_subset(w, LemmaTag::WI, 2),
            Err(Error::FamilyMismatch { .. })
        ));
    }

    #[test]
    fn tags_round_trip() {
        for t in LemmaTag::all() {
            assert_eq!(t.to_string().parse::<LemmaTag>().unwrap(), t);
        }
    }

    #[test]
    fn small_bounds_pass() {
        let w2 = AlgebraSpec::cartan_w(2).unwrap();
        for tag in [LemmaTag::WI, LemmaTag::WII] {
            let r = verify_claimed_subset(w2, tag, 2).unwrap();
            assert!(r.verdict, "{}", r.notes);
        }
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        let r = verify_claimed_subset(h2, LemmaTag::H1, 2).unwrap();
        assert!(r.verdict, "{}", r.notes);
    }
}
