#![allow(dead_code)]

use poisson_elim::{AlgebraSpec, BasisElement, Monomial, Polynomial, Scalar};
use rand::seq::IndexedRandom;
use rand::Rng;

pub fn small_entries(b: &BasisElement, bound: u32) -> bool {
    match b {
        BasisElement::W { exp, .. }
        | BasisElement::SA(exp)
        | BasisElement::SB { exp, .. }
        | BasisElement::DH(exp)
        | BasisElement::DK(exp) => exp.entries().iter().all(|&e| e <= bound),
        _ => true,
    }
}

pub fn rational<R: Rng>(rng: &mut R) -> Scalar {
    let num: i64 = loop {
        let n = rng.random_range(-9..=9);
        if n != 0 {
            break n;
        }
    };
    let den: i64 = if rng.random_bool(0.3) {
        rng.random_range(2..=5)
    } else {
        1
    };
    Scalar::new(num.into(), den.into())
}

/// A random polynomial in the given variables with `1..=max_terms` terms,
/// each a product of up to `max_factors` variables with exponents ≤ 2.
pub fn random_poly<R: Rng>(
    rng: &mut R,
    alg: AlgebraSpec,
    vars: &[BasisElement],
    max_terms: usize,
    max_factors: usize,
) -> Polynomial {
    loop {
        let n = rng.random_range(1..=max_terms);
        let mut terms = Vec::new();
        for _ in 0..n {
            let min = if rng.random_bool(0.1) { 0 } else { 1 };
            let k = rng.random_range(min..=max_factors);
            let factors: Vec<(BasisElement, u32)> = (0..k)
                .map(|_| {
                    (
                        vars.choose(rng).expect("vars").clone(),
                        rng.random_range(1..=2),
                    )
                })
                .collect();
            terms.push((Monomial::from_factors(factors), rational(rng)));
        }
        let p = Polynomial::from_terms(alg, terms).expect("valid variables");
        if !p.is_constant() {
            return p;
        }
    }
}
