use std::collections::BTreeMap;

use super::certificate::{CertificateTerm, ReductionCertificate};
use crate::dicksonian::{l_member_with_limit, DEFAULT_MAX_GAP};
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement};
use crate::poly::{d_lie, d_op, DTuple, Polynomial, Sign};
use crate::Scalar;

pub const DEFAULT_MAX_STEPS: usize = 1_000_000;

/// An ordered, nonempty sequence of nonconstant polynomials over one algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSequence {
    alg: AlgebraSpec,
    gens: Vec<Polynomial>,
}

impl GeneratorSequence {
    pub fn new(alg: AlgebraSpec, gens: Vec<Polynomial>) -> Result<Self> {
        if gens.is_empty() || gens.iter().any(Polynomial::is_constant) {
            return Err(Error::BadGenerators);
        }
        for f in &gens {
            if f.algebra() != alg {
                return Err(Error::AlgebraMismatch(alg, f.algebra()));
            }
        }
        Ok(GeneratorSequence { alg, gens })
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.alg
    }

    pub fn as_slice(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Polynomial> {
        self.gens.iter()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReduceOptions {
    pub max_steps: usize,
    pub max_gap: i64,
}

impl Default for ReduceOptions {
    fn default() -> Self {
        ReduceOptions {
            max_steps: DEFAULT_MAX_STEPS,
            max_gap: DEFAULT_MAX_GAP,
        }
    }
}

fn in_l_set(
    alg: AlgebraSpec,
    f: &Polynomial,
    v: &BasisElement,
    sign: Sign,
    max_gap: i64,
) -> Result<Option<DTuple>> {
    let leader = f.leader(sign)?;
    Ok(l_member_with_limit(alg, &leader, v, sign, max_gap)?.witness)
}

fn partially_reduced_wrt(
    alg: AlgebraSpec,
    g: &Polynomial,
    f: &Polynomial,
    max_gap: i64,
) -> Result<bool> {
    for v in g.variables() {
        for sign in [Sign::Plus, Sign::Minus] {
            if in_l_set(alg, f, &v, sign, max_gap)?.is_some() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn reduced_wrt(alg: AlgebraSpec, g: &Polynomial, f: &Polynomial, max_gap: i64) -> Result<bool> {
    let rank = f.rank(Sign::Plus)?;
    Ok(g.degree_in(&rank.leader) < rank.degree && partially_reduced_wrt(alg, g, f, max_gap)?)
}

fn check_alg(alg: AlgebraSpec, g: &Polynomial, lambda: &GeneratorSequence) -> Result<()> {
    if lambda.algebra() != alg {
        return Err(Error::AlgebraMismatch(alg, lambda.algebra()));
    }
    if g.algebra() != alg {
        return Err(Error::AlgebraMismatch(alg, g.algebra()));
    }
    Ok(())
}

pub fn is_partially_reduced(
    alg: AlgebraSpec,
    g: &Polynomial,
    lambda: &GeneratorSequence,
) -> Result<bool> {
    check_alg(alg, g, lambda)?;
    for f in lambda.iter() {
        if !partially_reduced_wrt(alg, g, f, DEFAULT_MAX_GAP)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_reduced(alg: AlgebraSpec, g: &Polynomial, lambda: &GeneratorSequence) -> Result<bool> {
    check_alg(alg, g, lambda)?;
    if g.is_constant() {
        return Ok(true);
    }
    for f in lambda.iter() {
        if !reduced_wrt(alg, g, f, DEFAULT_MAX_GAP)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_reduced_sequence(alg: AlgebraSpec, lambda: &GeneratorSequence) -> Result<bool> {
    if lambda.algebra() != alg {
        return Err(Error::AlgebraMismatch(alg, lambda.algebra()));
    }
    let gens = lambda.as_slice();
    for j in 0..gens.len() {
        for i in 0..j {
            if !reduced_wrt(alg, &gens[j], &gens[i], DEFAULT_MAX_GAP)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Reducer<'a> {
    alg: AlgebraSpec,
    gens: &'a [Polynomial],
    opts: ReduceOptions,
    cert: ReductionCertificate,
    steps: usize,
    trace: Vec<String>,
}

impl<'a> Reducer<'a> {
    fn new(alg: AlgebraSpec, g: &Polynomial, gens: &'a [Polynomial], opts: ReduceOptions) -> Self {
        Reducer {
            alg,
            gens,
            opts,
            cert: ReductionCertificate::identity(g, gens),
            steps: 0,
            trace: Vec::new(),
        }
    }

    fn tick(&mut self, line: String) -> Result<()> {
        self.trace.push(line);
        self.steps += 1;
        if self.steps > self.opts.max_steps {
            return Err(Error::NonTermination {
                limit: self.opts.max_steps,
                trace: self.trace.join("; "),
            });
        }
        Ok(())
    }

    /// Multiplies the whole identity by `m` and replaces the remainder.
    fn rescale(&mut self, m: &Polynomial, remainder: Polynomial) {
        for t in &mut self.cert.terms {
            t.coeff = &t.coeff * m;
        }
        self.cert.remainder = remainder;
    }

    /// Largest (smallest) variable of the remainder lying in some
    /// `L±(ℓ±(f))`, with the generator of smallest upper-rank among those
    /// that claim it and the witness tuple.
    fn offender(&self, sign: Sign) -> Result<Option<(BasisElement, usize, DTuple)>> {
        let mut vars: Vec<BasisElement> = self.cert.remainder.variables().into_iter().collect();
        if sign == Sign::Plus {
            vars.reverse();
        }
        for v in vars {
            let mut best: Option<(usize, DTuple)> = None;
            for (k, f) in self.gens.iter().enumerate() {
                if let Some(t) = in_l_set(self.alg, f, &v, sign, self.opts.max_gap)? {
                    let better = match &best {
                        None => true,
                        Some((b, _)) => f.rank(Sign::Plus)? < self.gens[*b].rank(Sign::Plus)?,
                    };
                    if better {
                        best = Some((k, t));
                    }
                }
            }
            if let Some((k, t)) = best {
                return Ok(Some((v, k, t)));
            }
        }
        Ok(None)
    }

    fn eliminate(&mut self, m: &BasisElement, k: usize, t: &DTuple) -> Result<()> {
        let f = &self.gens[k];
        let sign = t.sign();
        let leader = f.leader(sign)?;
        let alpha = d_lie(self.alg, &leader, t)?.coeff(m);
        if alpha == Scalar::from_integer(0.into()) {
            return Err(Error::Internal(format!(
                "zero coefficient of {m} in D_{t}({leader})"
            )));
        }
        let df = d_op(f, t)?;
        let s = f.separant(sign)?;
        let sm = &s * &Polynomial::var(self.alg, m.clone())?;
        let h = &df - &sm.scale(&alpha);
        let inside = h.variables().iter().all(|v| match sign {
            Sign::Plus => v < m,
            Sign::Minus => v > m,
        });
        if !inside {
            return Err(Error::Internal(format!(
                "D_{t}(f{k}) = {df} does not split around {m}"
            )));
        }
        let inv = crate::int(1) / &alpha;
        let u = h.scale(&-&inv);
        let parts: BTreeMap<u32, Polynomial> = self.cert.remainder.expand_in(m);
        let r = *parts
            .keys()
            .next_back()
            .expect("offender occurs in the remainder");
        let s_pow: Vec<Polynomial> = powers(&s, r);
        let sm_pow: Vec<Polynomial> = powers(&sm, r);
        let u_pow: Vec<Polynomial> = powers(&u, r);
        let mut next = Polynomial::zero(self.alg);
        let mut c = Polynomial::zero(self.alg);
        for (&j, hj) in &parts {
            let j = j as usize;
            let base = hj * &s_pow[r as usize - j];
            next = &next + &(&base * &u_pow[j]);
            let mut geo = Polynomial::zero(self.alg);
            for a in 0..j {
                geo = &geo + &(&sm_pow[a] * &u_pow[j - 1 - a]);
            }
            c = &c + &(&base * &geo);
        }
        let c = c.scale(&inv);
        self.rescale(&s_pow[r as usize], next);
        self.cert.terms.push(CertificateTerm {
            coeff: c,
            generator: k,
            tuple: Some(t.clone()),
        });
        let mult = &mut self.cert.multipliers[k];
        match sign {
            Sign::Plus => mult.sep_plus_exp += r,
            Sign::Minus => mult.sep_minus_exp += r,
        }
        self.tick(format!("eliminate {m}^{r} with D_{t}(f{k})"))
    }

    fn partial(&mut self) -> Result<()> {
        loop {
            let mut progressed = false;
            for sign in [Sign::Plus, Sign::Minus] {
                while let Some((m, k, t)) = self.offender(sign)? {
                    self.eliminate(&m, k, &t)?;
                    progressed = true;
                }
            }
            if !progressed {
                return Ok(());
            }
        }
    }

    fn pseudo_divide(&mut self, k: usize) -> Result<bool> {
        let f = &self.gens[k];
        let rank = f.rank(Sign::Plus)?;
        let g = &self.cert.remainder;
        let r = g.degree_in(&rank.leader);
        if r < rank.degree || g.is_constant() {
            return Ok(false);
        }
        let hr = g.coefficient_of_power(&rank.leader, r);
        let lead = Polynomial::var(self.alg, rank.leader.clone())?.pow(r - rank.degree);
        let q = &hr * &lead;
        let init = f.initial(Sign::Plus)?;
        let next = &(&init * g) - &(&q * f);
        self.rescale(&init, next);
        self.cert.terms.push(CertificateTerm {
            coeff: q,
            generator: k,
            tuple: None,
        });
        self.cert.multipliers[k].initial_exp += 1;
        self.tick(format!("pseudo-divide by f{k} in {}^{r}", rank.leader))?;
        Ok(true)
    }
}

fn powers(p: &Polynomial, r: u32) -> Vec<Polynomial> {
    let mut out = vec![Polynomial::one(p.algebra())];
    for i in 0..r as usize {
        out.push(&out[i] * p);
    }
    out
}

pub fn partial_reduce(
    alg: AlgebraSpec,
    g: &Polynomial,
    lambda: &GeneratorSequence,
) -> Result<(Polynomial, ReductionCertificate)> {
    partial_reduce_with(alg, g, lambda, ReduceOptions::default())
}

pub fn partial_reduce_with(
    alg: AlgebraSpec,
    g: &Polynomial,
    lambda: &GeneratorSequence,
    opts: ReduceOptions,
) -> Result<(Polynomial, ReductionCertificate)> {
    check_alg(alg, g, lambda)?;
    let mut red = Reducer::new(alg, g, lambda.as_slice(), opts);
    red.partial()?;
    Ok((red.cert.remainder.clone(), red.cert))
}

pub fn full_reduce(
    alg: AlgebraSpec,
    g: &Polynomial,
    lambda: &GeneratorSequence,
) -> Result<(Polynomial, ReductionCertificate)> {
    full_reduce_with(alg, g, lambda, ReduceOptions::default())
}

pub fn full_reduce_with(
    alg: AlgebraSpec,
    g: &Polynomial,
    lambda: &GeneratorSequence,
    opts: ReduceOptions,
) -> Result<(Polynomial, ReductionCertificate)> {
    check_alg(alg, g, lambda)?;
    if !is_reduced_sequence(alg, lambda)? {
        return Err(Error::NotReducedSequence);
    }
    let gens = lambda.as_slice();
    let mut order: Vec<usize> = (0..gens.len()).collect();
    let ranks = gens
        .iter()
        .map(|f| f.rank(Sign::Plus))
        .collect::<Result<Vec<_>>>()?;
    order.sort_by(|&a, &b| ranks[b].cmp(&ranks[a]));
    let mut red = Reducer::new(alg, g, gens, opts);
    red.partial()?;
    loop {
        let mut changed = false;
        for &k in &order {
            while red.pseudo_divide(k)? {
                red.partial()?;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok((red.cert.remainder.clone(), red.cert))
}
