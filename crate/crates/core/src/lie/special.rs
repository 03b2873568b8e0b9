//! The divergence-free algebra Sₙ in Wₙ coordinates.

use std::collections::BTreeMap;

use num_traits::Zero;

use super::basis::BasisElement;
use super::element::LieElement;
use super::multi_index::MultiIndex;
use crate::error::{Error, Result};
use crate::{int, Scalar};

/// Wₙ-coordinate expansion of an Sₙ basis element (`W` elements are
/// returned unchanged).
pub fn expand(b: &BasisElement) -> LieElement {
    match b {
        BasisElement::SA(exp) => LieElement::basis(BasisElement::W {
            exp: exp.clone(),
            dir: 1,
        }),
        BasisElement::SB { exp, dir } => {
            let k = *dir as usize;
            let mut out = LieElement::zero();
            if let Some(e) = exp.dec(k) {
                out.add_term(BasisElement::W { exp: e, dir: 1 }, int(exp.get(k) as i64));
            }
            if let Some(e) = exp.dec(1) {
                out.add_term(
                    BasisElement::W { exp: e, dir: *dir },
                    int(-(exp.get(1) as i64)),
                );
            }
            out
        }
        other => LieElement::basis(other.clone()),
    }
}

/// Divergence `Σ_k ∂_k(p_k)` of a Wₙ-coordinate vector field, as a map from
/// monomial exponents to coefficients (zero entries removed).
pub fn divergence(v: &LieElement) -> BTreeMap<Vec<u32>, Scalar> {
    let mut out: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
    for (b, c) in v.iter() {
        if let BasisElement::W { exp, dir } = b {
            let k = *dir as usize;
            if let Some(e) = exp.dec(k) {
                *out.entry(e.entries().to_vec()).or_insert_with(Scalar::zero) +=
                    c * int(exp.get(k) as i64);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Re-expresses a divergence-free Wₙ-coordinate vector field in the
/// `SA`/`SB` basis of Sₙ.
pub fn project(n: usize, v: &LieElement) -> Result<LieElement> {
    for (b, _) in v.iter() {
        match b {
            BasisElement::W { exp, dir }
                if exp.len() == n && (1..=n).contains(&(*dir as usize)) => {}
            other => {
                return Err(Error::NotInSn(format!(
                    "{other} is not a W{n} monomial field"
                )))
            }
        }
    }
    if !divergence(v).is_empty() {
        return Err(Error::NotInSn(format!("{v} has nonzero divergence")));
    }
    let mut out = LieElement::zero();
    // ∂₁ components still to be accounted for
    let mut residual: BTreeMap<MultiIndex, Scalar> = BTreeMap::new();
    for (b, c) in v.iter() {
        let BasisElement::W { exp: u, dir } = b else {
            unreachable!()
        };
        if *dir == 1 {
            *residual.entry(u.clone()).or_insert_with(Scalar::zero) += c;
            continue;
        }
        let k = *dir as usize;
        let i = u.inc(1);
        let a = -c / int(i.get(1) as i64);
        if let Some(e) = i.dec(k) {
            *residual.entry(e).or_insert_with(Scalar::zero) -= &a * int(i.get(k) as i64);
        }
        out.add_term(BasisElement::SB { exp: i, dir: *dir }, a);
    }
    for (u, c) in residual {
        if c.is_zero() {
            continue;
        }
        if u.get(1) != 0 {
            return Err(Error::NotInSn(format!(
                "residual ∂1 term x^({u}) with nonzero first exponent"
            )));
        }
        out.add_term(BasisElement::SA(u), c);
    }
    Ok(out)
}
