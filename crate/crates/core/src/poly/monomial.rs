use std::cmp::Ordering;
use std::fmt;

use crate::lie::BasisElement;

/// A power product of basis variables.
///
/// Factors are kept sorted by descending variable, so the derived
/// lexicographic order compares leaders first, then their exponents, then
/// the remaining factors: the leader-major order used for printing.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Monomial(Vec<(BasisElement, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(b: BasisElement) -> Self {
        Monomial(vec![(b, 1)])
    }

    pub fn var_pow(b: BasisElement, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(b, e)])
        }
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` factors,
    /// merging repeats and dropping zero exponents.
    pub fn from_factors(factors: impl IntoIterator<Item = (BasisElement, u32)>) -> Self {
        let mut v: Vec<(BasisElement, u32)> = factors.into_iter().filter(|f| f.1 > 0).collect();
        v.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(BasisElement, u32)> = Vec::with_capacity(v.len());
        for (b, e) in v {
            match out.last_mut() {
                Some(last) if last.0 == b => last.1 += e,
                _ => out.push((b, e)),
            }
        }
        Monomial(out)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Factors in descending variable order.
    pub fn factors(&self) -> &[(BasisElement, u32)] {
        &self.0
    }

    pub fn exponent(&self, b: &BasisElement) -> u32 {
        self.0.iter().find(|(v, _)| v == b).map_or(0, |(_, e)| *e)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    /// Sum of the grading degrees of the factors, with multiplicity.
    pub fn weight(&self) -> i64 {
        self.0.iter().map(|(b, e)| b.degree() * *e as i64).sum()
    }

    pub fn largest(&self) -> Option<&BasisElement> {
        self.0.first().map(|(b, _)| b)
    }

    pub fn smallest(&self) -> Option<&BasisElement> {
        self.0.last().map(|(b, _)| b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits off the power of `b`: returns `(e, m)` with `self = b^e · m`.
    pub fn split(&self, b: &BasisElement) -> (u32, Monomial) {
        match self.0.iter().position(|(v, _)| v == b) {
            None => (0, self.clone()),
            Some(pos) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(pos);
                (e, Monomial(rest))
            }
        }
    }

    /// `∂/∂b`, as `(exponent, monomial)`; `None` if `b` does not occur.
    pub fn derivative(&self, b: &BasisElement) -> Option<(u32, Monomial)> {
        let pos = self.0.iter().position(|(v, _)| v == b)?;
        let mut rest = self.0.clone();
        let e = rest[pos].1;
        if e == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 -= 1;
        }
        Some((e, Monomial(rest)))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Factors print in ascending variable order, e.g. `e[1]^2*e[4]`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (pos, (b, e)) in self.0.iter().rev().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{b}")?;
            } else {
                write!(f, "{b}^{e}")?;
            }
        }
        Ok(())
    }
}
