use std::collections::btree_map::{self, BTreeMap};
use std::fmt;

use num_traits::{One, Zero};

use super::basis::BasisElement;
use crate::Scalar;

/// A finite linear combination of basis elements. Zero coefficients are
/// never stored, so the empty map is the zero vector.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    terms: BTreeMap<BasisElement, Scalar>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: BasisElement) -> Self {
        Self::term(b, Scalar::one())
    }

    pub fn term(b: BasisElement, c: Scalar) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, b: BasisElement, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        if c.is_zero() {
            return LieElement::zero();
        }
        LieElement {
            terms: self.terms.iter().map(|(b, v)| (b.clone(), v * c)).collect(),
        }
    }

    pub fn coeff(&self, b: &BasisElement) -> Scalar {
        self.terms.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElement, &Scalar)> {
        self.terms.iter()
    }

    /// Largest basis element with nonzero coefficient.
    pub fn upper_leader(&self) -> Option<&BasisElement> {
        self.terms.keys().next_back()
    }

    /// Smallest basis element with nonzero coefficient.
    pub fn lower_leader(&self) -> Option<&BasisElement> {
        self.terms.keys().next()
    }

    /// `Some((b, c))` when the element is `c·b` for a single basis element.
    pub fn as_single_term(&self) -> Option<(&BasisElement, &Scalar)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }
}

impl FromIterator<(BasisElement, Scalar)> for LieElement {
    fn from_iter<I: IntoIterator<Item = (BasisElement, Scalar)>>(iter: I) -> Self {
        let mut out = LieElement::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }
}

impl std::ops::Add<&LieElement> for &LieElement {
    type Output = LieElement;

    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Neg for &LieElement {
    type Output = LieElement;

    fn neg(self) -> LieElement {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (b, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Scalar::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (pos, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}*{b}")?;
            }
        }
        Ok(())
    }
}
