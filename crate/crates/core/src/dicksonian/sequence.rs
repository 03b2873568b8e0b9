use super::lset::l_member;
use super::{MembershipReport, PairSequence};
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement};
use crate::poly::Sign;

/// A point `(v, k)` of `ℕⁿ × {1, …, n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    pub v: Vec<u32>,
    pub k: usize,
}

impl LatticePoint {
    pub fn new(v: impl Into<Vec<u32>>, k: usize) -> Self {
        LatticePoint { v: v.into(), k }
    }

    /// `self ≥ other`: same component and componentwise dominance.
    pub fn dominates(&self, other: &LatticePoint) -> bool {
        self.k == other.k
            && self.v.len() == other.v.len()
            && self.v.iter().zip(&other.v).all(|(a, b)| a >= b)
    }
}

/// True iff no later point dominates an earlier one.
pub fn dickson_check(points: &[LatticePoint]) -> Result<MembershipReport> {
    if let Some(first) = points.first() {
        let n = first.v.len();
        for p in points {
            if p.v.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.v.len(),
                });
            }
            if p.k < 1 || p.k > n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: p.k,
                });
            }
        }
    }
    for j in 0..points.len() {
        for i in 0..j {
            if points[j].dominates(&points[i]) {
                return Ok(MembershipReport::fail_at(
                    i + 1,
                    j + 1,
                    format!("{:?} dominates {:?}", points[j], points[i]),
                ));
            }
        }
    }
    Ok(MembershipReport::pass(format!(
        "{} points, no domination",
        points.len()
    )))
}

/// Decides whether `s` is leading-Dicksonian: distinct pairs with
/// `M_i ≤ N_i`, `M_j ∉ L₋(M_i)` and `N_j ∉ L₊(N_i)` for all `i < j`.
pub fn check_leading_dicksonian(
    alg: AlgebraSpec,
    s: &[(BasisElement, BasisElement)],
) -> Result<MembershipReport> {
    for (pos, (m, n)) in s.iter().enumerate() {
        alg.validate(m)?;
        alg.validate(n)?;
        if m > n {
            return Ok(MembershipReport::fail_at(
                pos + 1,
                pos + 1,
                format!("pair ({m}, {n}) has M > N"),
            ));
        }
    }
    for j in 0..s.len() {
        for i in 0..j {
            let ((mi, ni), (mj, nj)) = (&s[i], &s[j]);
            if s[i] == s[j] {
                return Ok(MembershipReport::fail_at(i + 1, j + 1, "repeated pair"));
            }
            if l_member(alg, mi, mj, Sign::Minus)?.verdict {
                return Ok(MembershipReport::fail_at(
                    i + 1,
                    j + 1,
                    format!("{mj} ∈ L-({mi})"),
                ));
            }
            if l_member(alg, ni, nj, Sign::Plus)?.verdict {
                return Ok(MembershipReport::fail_at(
                    i + 1,
                    j + 1,
                    format!("{nj} ∈ L+({ni})"),
                ));
            }
        }
    }
    Ok(MembershipReport::pass(format!(
        "leading-Dicksonian of length {}",
        s.len()
    )))
}

/// A longest leading-Dicksonian sequence over pairs with `|degree| ≤
/// degree_bound`, found by exhaustive branch-and-bound and capped at
/// `length_bound`. Among equally long sequences the first in candidate
/// order wins.
pub fn search_leading_dicksonian(
    alg: AlgebraSpec,
    degree_bound: i64,
    length_bound: usize,
) -> Result<PairSequence> {
    let window = alg.enumerate_window(-degree_bound, degree_bound);
    let mut pairs = Vec::new();
    for (a, m) in window.iter().enumerate() {
        for n in &window[a..] {
            pairs.push((m.clone(), n.clone()));
        }
    }
    let np = pairs.len();
    // follows[p][q]: pair q may come after pair p
    let mut lower = vec![vec![false; window.len()]; window.len()];
    let mut upper = vec![vec![false; window.len()]; window.len()];
    for (a, x) in window.iter().enumerate() {
        for (b, y) in window.iter().enumerate() {
            lower[a][b] = l_member(alg, x, y, Sign::Minus)?.verdict;
            upper[a][b] = l_member(alg, x, y, Sign::Plus)?.verdict;
        }
    }
    let pos = |e: &BasisElement| window.iter().position(|w| w == e).expect("in window");
    let idx: Vec<(usize, usize)> = pairs.iter().map(|(m, n)| (pos(m), pos(n))).collect();
    let follows: Vec<Vec<bool>> = (0..np)
        .map(|p| {
            (0..np)
                .map(|q| p != q && !lower[idx[p].0][idx[q].0] && !upper[idx[p].1][idx[q].1])
                .collect()
        })
        .collect();

    let mut best: Vec<usize> = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    let all: Vec<usize> = (0..np).collect();
    extend(&follows, &all, &mut cur, &mut best, length_bound);
    Ok(best.into_iter().map(|p| pairs[p].clone()).collect())
}

fn extend(
    follows: &[Vec<bool>],
    candidates: &[usize],
    cur: &mut Vec<usize>,
    best: &mut Vec<usize>,
    cap: usize,
) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if best.len() >= cap || cur.len() + candidates.len() <= best.len() {
        return;
    }
    for &q in candidates {
        let next: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&r| follows[q][r])
            .collect();
        cur.push(q);
        extend(follows, &next, cur, best, cap);
        cur.pop();
        if best.len() >= cap {
            return;
        }
    }
}
