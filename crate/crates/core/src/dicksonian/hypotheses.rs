use super::lset::l_member;
use super::MembershipReport;
use crate::error::Result;
use crate::lie::{AlgebraSpec, BasisElement};
use crate::poly::Sign;

/// Window elements ordered by degree `0, 1, −1, 2, −2, …`, ascending
/// within each degree.
fn center_out(alg: AlgebraSpec, lo: i64, hi: i64) -> Vec<BasisElement> {
    let mut degrees: Vec<i64> = (lo..=hi).collect();
    degrees.sort_by_key(|d| (d.abs(), *d < 0));
    degrees
        .into_iter()
        .flat_map(|d| alg.enumerate_component(d))
        .collect()
}

/// Checks the hypotheses of the scalar-bracket criterion on a degree
/// window: every bracket of two basis elements is a multiple of a single
/// basis element, and `M₁ < M₂` implies `ℓ±([M₁, M]) < ℓ±([M₂, M])` for
/// same-sign `M₁, M₂, M` with nonzero brackets.
pub fn check_dagger(alg: AlgebraSpec, lo: i64, hi: i64) -> Result<MembershipReport> {
    let elems = center_out(alg, lo, hi);
    for a in &elems {
        for b in &elems {
            let br = alg.bracket_basis(a, b)?;
            if br.len() > 1 {
                return Ok(MembershipReport::fail(format!(
                    "[{a}, {b}] = {br} is not a scalar multiple of a basis element"
                )));
            }
        }
    }
    for sign in [Sign::Plus, Sign::Minus] {
        let part: Vec<&BasisElement> = elems
            .iter()
            .filter(|b| match sign {
                Sign::Plus => b.degree() > 0,
                Sign::Minus => b.degree() < 0,
            })
            .collect();
        let mut sorted = part.clone();
        sorted.sort();
        for m in &part {
            let images: Vec<(&BasisElement, BasisElement)> = sorted
                .iter()
                .filter_map(|m1| {
                    let br = alg.bracket_unchecked(m1, m);
                    let lead = match sign {
                        Sign::Plus => br.upper_leader().cloned(),
                        Sign::Minus => br.lower_leader().cloned(),
                    };
                    lead.map(|l| (*m1, l))
                })
                .collect();
            for pair in images.windows(2) {
                let ((m1, l1), (m2, l2)) = (&pair[0], &pair[1]);
                if l1 >= l2 {
                    return Ok(MembershipReport::fail(format!(
                        "{m1} < {m2} but ℓ{sign}([{m1}, {m}]) = {l1} is not below ℓ{sign}([{m2}, {m}]) = {l2}"
                    )));
                }
            }
        }
    }
    Ok(MembershipReport::pass(format!(
        "{} basis elements in degrees {lo}..={hi} satisfy both hypotheses",
        elems.len()
    )))
}

/// Degree radius around `deg M` inside which cofiniteness exceptions are
/// tolerated.
pub fn cofinite_constant(_alg: AlgebraSpec) -> i64 {
    2
}

/// Lists the window elements outside `L₊(M) ∪ L₋(M)`. The verdict is true
/// iff every exception lies within [`cofinite_constant`] degrees of `M` or
/// is central in the window.
pub fn check_cofinite_window(
    alg: AlgebraSpec,
    m: &BasisElement,
    lo: i64,
    hi: i64,
) -> Result<MembershipReport> {
    check_cofinite_window_with(alg, m, lo, hi, cofinite_constant(alg))
}

pub fn check_cofinite_window_with(
    alg: AlgebraSpec,
    m: &BasisElement,
    lo: i64,
    hi: i64,
    k: i64,
) -> Result<MembershipReport> {
    alg.validate(m)?;
    let mut exceptions = Vec::new();
    for t in alg.enumerate_window(lo, hi) {
        let inside =
            l_member(alg, m, &t, Sign::Plus)?.verdict || l_member(alg, m, &t, Sign::Minus)?.verdict;
        if !inside {
            exceptions.push(t);
        }
    }
    let window = alg.enumerate_window(lo, hi);
    let central = |t: &BasisElement| window.iter().all(|b| alg.bracket_unchecked(t, b).is_zero());
    let d = m.degree();
    let far: Vec<String> = exceptions
        .iter()
        .filter(|t| (t.degree() - d).abs() > k && !central(t))
        .map(|t| t.to_string())
        .collect();
    let shown: Vec<String> = exceptions.iter().map(|t| t.to_string()).collect();
    let mut report = if far.is_empty() {
        MembershipReport::pass(format!(
            "exceptions within {k} degrees of {m} or central: [{}]",
            shown.join(", ")
        ))
    } else {
        MembershipReport::fail(format!(
            "exceptions [{}]; farther than {k} degrees from {m}: [{}]",
            shown.join(", "),
            far.join(", ")
        ))
    };
    report.exceptions = exceptions;
    Ok(report)
}
