use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement, LieElement};
use crate::Scalar;

/// An element of the symmetric algebra S(𝔤): a sparse polynomial with
/// rational coefficients in the basis variables of one algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    alg: AlgebraSpec,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(alg: AlgebraSpec) -> Self {
        Polynomial {
            alg,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(alg: AlgebraSpec, c: Scalar) -> Self {
        Self::monomial(alg, Monomial::one(), c)
    }

    pub fn one(alg: AlgebraSpec) -> Self {
        Self::constant(alg, Scalar::one())
    }

    /// The degree-one polynomial `b`.
    pub fn var(alg: AlgebraSpec, b: BasisElement) -> Result<Self> {
        alg.validate(&b)?;
        Ok(Self::monomial(alg, Monomial::var(b), Scalar::one()))
    }

    /// `c · m`; the variables of `m` are assumed valid for `alg`.
    pub(crate) fn monomial(alg: AlgebraSpec, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(alg);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from terms, validating every variable.
    pub fn from_terms(
        alg: AlgebraSpec,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(alg);
        for (m, c) in terms {
            for (b, _) in m.factors() {
                alg.validate(b)?;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// A Lie element viewed as a linear polynomial.
    pub fn from_lie(alg: AlgebraSpec, x: &LieElement) -> Self {
        let mut p = Self::zero(alg);
        for (b, c) in x.iter() {
            p.add_term(Monomial::var(b.clone()), c.clone());
        }
        p
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.alg
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

    /// True for elements of 𝕜 (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one())
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    /// `self += c · m · other`.
    pub(crate) fn add_scaled_product(&mut self, c: &Scalar, m: &Monomial, other: &Polynomial) {
        if c.is_zero() {
            return;
        }
        for (m2, c2) in &other.terms {
            self.add_term(m.mul(m2), c * c2);
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Self::zero(self.alg);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Self::one(self.alg);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Every basis variable occurring with a nonzero coefficient.
    pub fn variables(&self) -> BTreeSet<BasisElement> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|(b, _)| b.clone()))
            .collect()
    }

    /// Largest exponent of `b` in any term.
    pub fn degree_in(&self, b: &BasisElement) -> u32 {
        self.terms.keys().map(|m| m.exponent(b)).max().unwrap_or(0)
    }

    /// The `b`-adic expansion `self = Σ_j h_j b^j`, as `j ↦ h_j` (zero
    /// coefficients omitted).
    pub fn expand_in(&self, b: &BasisElement) -> BTreeMap<u32, Polynomial> {
        let mut out: BTreeMap<u32, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(b);
            out.entry(e)
                .or_insert_with(|| Self::zero(self.alg))
                .add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient `h_d` of `b^d` in the `b`-adic expansion.
    pub fn coefficient_of_power(&self, b: &BasisElement, d: u32) -> Polynomial {
        let mut out = Self::zero(self.alg);
        for (m, c) in &self.terms {
            let (e, rest) = m.split(b);
            if e == d {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Formal partial derivative `∂/∂b`.
    pub fn derivative(&self, b: &BasisElement) -> Polynomial {
        let mut out = Self::zero(self.alg);
        for (m, c) in &self.terms {
            if let Some((e, rest)) = m.derivative(b) {
                out.add_term(rest, c * Scalar::from_integer(e.into()));
            }
        }
        out
    }

    /// Common grading weight of all terms, if the polynomial is nonzero
    /// and weight-homogeneous.
    pub fn homogeneous_weight(&self) -> Option<i64> {
        let mut it = self.terms.keys().map(Monomial::weight);
        let w = it.next()?;
        it.all(|v| v == w).then_some(w)
    }

    /// `{self, b}` for a single basis variable `b` (assumed valid).
    pub(crate) fn bracket_with_basis(&self, b: &BasisElement) -> Polynomial {
        let mut out = Self::zero(self.alg);
        let mut brackets: BTreeMap<&BasisElement, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            for (v, _) in m.factors() {
                let br = brackets.entry(v).or_insert_with(|| {
                    Polynomial::from_lie(self.alg, &self.alg.bracket_unchecked(v, b))
                });
                if br.is_zero() {
                    continue;
                }
                let (e, rest) = m.derivative(v).expect("factor occurs");
                out.add_scaled_product(&(c * Scalar::from_integer(e.into())), &rest, br);
            }
        }
        out
    }

    pub(crate) fn check_same_algebra(&self, other: &Polynomial) -> Result<()> {
        if self.alg == other.alg {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(self.alg, other.alg))
        }
    }
}

/// The Poisson bracket `{f, g} = Σ_{M,N} ∂f/∂M · ∂g/∂N · [M, N]`.
pub fn poisson_bracket(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    f.check_same_algebra(g)?;
    let alg = f.alg;
    let fvars = f.variables();
    let gvars = g.variables();
    let gders: Vec<(BasisElement, Polynomial)> =
        gvars.iter().map(|n| (n.clone(), g.derivative(n))).collect();
    let mut out = Polynomial::zero(alg);
    for m in &fvars {
        let fm = f.derivative(m);
        for (n, gn) in &gders {
            let br = alg.bracket_unchecked(m, n);
            if br.is_zero() {
                continue;
            }
            let prod = &fm * gn;
            out = &out + &(&prod * &Polynomial::from_lie(alg, &br));
        }
    }
    Ok(out)
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.alg, rhs.alg);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.alg, rhs.alg);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.alg, rhs.alg);
        let mut out = Polynomial::zero(self.alg);
        for (m, c) in &self.terms {
            out.add_scaled_product(c, m, rhs);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Canonical text: terms by descending monomial, e.g. `-1/2*e[7] + e[1]^2*e[4]`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (pos, (m, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            match (pos, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
