use std::fmt;

use crate::error::Result;
use crate::lie::AlgebraSpec;
use crate::poly::{d_op, DTuple, Polynomial, Sign};

/// Exponents of the upper-initial and the two separants of one generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Multiplier {
    pub initial_exp: u32,
    pub sep_plus_exp: u32,
    pub sep_minus_exp: u32,
}

impl Multiplier {
    pub fn is_trivial(&self) -> bool {
        self.initial_exp == 0 && self.sep_plus_exp == 0 && self.sep_minus_exp == 0
    }
}

/// `coeff · D_tuple(generators[generator])`, or a plain multiple of the
/// generator when `tuple` is `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CertificateTerm {
    pub coeff: Polynomial,
    pub generator: usize,
    pub tuple: Option<DTuple>,
}

/// The identity
/// `(∏ i₊^m · s₊^p · s₋^q) · input = remainder + Σ coeff · D_tuple(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub algebra: AlgebraSpec,
    pub generators: Vec<Polynomial>,
    pub input: Polynomial,
    pub remainder: Polynomial,
    pub multipliers: Vec<Multiplier>,
    pub terms: Vec<CertificateTerm>,
}

impl ReductionCertificate {
    /// The trivial certificate `1 · g = g`.
    pub fn identity(g: &Polynomial, generators: &[Polynomial]) -> Self {
        ReductionCertificate {
            algebra: g.algebra(),
            generators: generators.to_vec(),
            input: g.clone(),
            remainder: g.clone(),
            multipliers: vec![Multiplier::default(); generators.len()],
            terms: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty() && self.multipliers.iter().all(Multiplier::is_trivial)
    }

    /// The product `∏ i₊,f^m · s₊,f^p · s₋,f^q`.
    pub fn multiplier(&self) -> Result<Polynomial> {
        let mut out = Polynomial::one(self.algebra);
        for (f, m) in self.generators.iter().zip(&self.multipliers) {
            if m.initial_exp > 0 {
                out = &out * &f.initial(Sign::Plus)?.pow(m.initial_exp);
            }
            if m.sep_plus_exp > 0 {
                out = &out * &f.separant(Sign::Plus)?.pow(m.sep_plus_exp);
            }
            if m.sep_minus_exp > 0 {
                out = &out * &f.separant(Sign::Minus)?.pow(m.sep_minus_exp);
            }
        }
        Ok(out)
    }

    /// `Σ coeff · D_tuple(f)`, recomputed from the generators.
    pub fn combination(&self) -> Result<Polynomial> {
        let mut out = Polynomial::zero(self.algebra);
        for t in &self.terms {
            let f = self.generators.get(t.generator).ok_or_else(|| {
                crate::Error::Schema(format!("generator index {} out of range", t.generator))
            })?;
            let applied = match &t.tuple {
                Some(tuple) => d_op(f, tuple)?,
                None => f.clone(),
            };
            out = &out + &(&t.coeff * &applied);
        }
        Ok(out)
    }
}

/// Expands both sides of the certificate identity exactly.
pub fn verify_certificate(alg: AlgebraSpec, c: &ReductionCertificate) -> bool {
    let check = || -> Result<bool> {
        if c.algebra != alg
            || c.input.algebra() != alg
            || c.remainder.algebra() != alg
            || c.multipliers.len() != c.generators.len()
            || c.generators
                .iter()
                .any(|f| f.algebra() != alg || f.is_constant())
            || c.terms.iter().any(|t| t.coeff.algebra() != alg)
        {
            return Ok(false);
        }
        let lhs = &c.multiplier()? * &c.input;
        let rhs = &c.remainder + &c.combination()?;
        Ok(lhs == rhs)
    };
    check().unwrap_or(false)
}

impl fmt::Display for ReductionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mult = self.multiplier().map_err(|_| fmt::Error)?;
        write!(f, "({mult}) * ({}) = {}", self.input, self.remainder)?;
        for t in &self.terms {
            let g = &self.generators[t.generator];
            match &t.tuple {
                Some(tuple) => {
                    let entries: Vec<String> =
                        tuple.entries().iter().map(|b| b.to_string()).collect();
                    write!(f, " + ({}) * D[{}]({g})", t.coeff, entries.join(", "))?;
                }
                None => write!(f, " + ({}) * ({g})", t.coeff)?,
            }
        }
        Ok(())
    }
}
