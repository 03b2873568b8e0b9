use std::fmt;

use super::polynomial::Polynomial;
use super::rank::Sign;
use crate::error::{Error, Result};
use crate::lie::{AlgebraSpec, BasisElement, LieElement};

/// A nonempty tuple of basis elements of strictly positive (`Plus`) or
/// strictly negative (`Minus`) degree: the index of an operator `D_t`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DTuple {
    alg: AlgebraSpec,
    sign: Sign,
    entries: Vec<BasisElement>,
}

impl DTuple {
    pub fn new(alg: AlgebraSpec, entries: Vec<BasisElement>, sign: Sign) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidTuple("tuple must be nonempty".into()));
        }
        for b in &entries {
            alg.validate(b)?;
            let d = b.degree();
            let ok = match sign {
                Sign::Plus => d > 0,
                Sign::Minus => d < 0,
            };
            if !ok {
                return Err(Error::InvalidTuple(format!(
                    "{b} has degree {d}, incompatible with sign {sign}"
                )));
            }
        }
        Ok(DTuple { alg, sign, entries })
    }

    /// Infers the sign from the first entry.
    pub fn infer(alg: AlgebraSpec, entries: Vec<BasisElement>) -> Result<Self> {
        let sign = match entries.first().map(BasisElement::degree) {
            Some(d) if d < 0 => Sign::Minus,
            _ => Sign::Plus,
        };
        Self::new(alg, entries, sign)
    }

    pub(crate) fn new_unchecked(alg: AlgebraSpec, entries: Vec<BasisElement>, sign: Sign) -> Self {
        DTuple { alg, sign, entries }
    }

    pub fn algebra(&self) -> AlgebraSpec {
        self.alg
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn entries(&self) -> &[BasisElement] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sum of the entry degrees.
    pub fn degree(&self) -> i64 {
        self.entries.iter().map(BasisElement::degree).sum()
    }
}

impl fmt::Debug for DTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for DTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (pos, b) in self.entries.iter().enumerate() {
            if pos > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str(")")
    }
}

/// `D_t(f) = {{{f, t_1}, t_2}, …, t_r}`.
pub fn d_op(f: &Polynomial, t: &DTuple) -> Result<Polynomial> {
    if f.algebra() != t.alg {
        return Err(Error::AlgebraMismatch(f.algebra(), t.alg));
    }
    let mut cur = f.clone();
    for b in &t.entries {
        if cur.is_zero() {
            break;
        }
        cur = cur.bracket_with_basis(b);
    }
    Ok(cur)
}

/// The iterated Lie bracket `[[[m, t_1], t_2], …, t_r]`.
pub fn d_lie(alg: AlgebraSpec, m: &BasisElement, t: &DTuple) -> Result<LieElement> {
    alg.validate(m)?;
    if alg != t.alg {
        return Err(Error::AlgebraMismatch(alg, t.alg));
    }
    Ok(alg.iterated_bracket(m, &t.entries))
}

/// `D_t^±(m)`: the extreme basis element of the iterated bracket, or `None`
/// when it vanishes.
pub fn d_leader(alg: AlgebraSpec, m: &BasisElement, t: &DTuple) -> Result<Option<BasisElement>> {
    let x = d_lie(alg, m, t)?;
    Ok(match t.sign {
        Sign::Plus => x.upper_leader().cloned(),
        Sign::Minus => x.lower_leader().cloned(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::lie::BasisElement::E;

    #[test]
    fn d_op_examples() {
        let w = AlgebraSpec::witt_positive();
        let e = |n| Polynomial::var(w, E(n)).unwrap();
        let t = DTuple::new(w, vec![E(3)], Sign::Plus).unwrap();
        assert_eq!(
            d_op(&e(1).pow(2), &t).unwrap(),
            (&e(1) * &e(4)).scale(&int(4))
        );
        assert!(d_op(&Polynomial::constant(w, int(7)), &t)
            .unwrap()
            .is_zero());
        let t2 = DTuple::new(w, vec![E(2), E(2)], Sign::Plus).unwrap();
        assert_eq!(d_op(&e(1), &t2).unwrap(), -&e(5));
    }

    #[test]
    fn d_leader_examples() {
        let w = AlgebraSpec::witt();
        let plus = |v| DTuple::new(w, v, Sign::Plus).unwrap();
        assert_eq!(d_leader(w, &E(1), &plus(vec![E(2)])).unwrap(), Some(E(3)));
        assert_eq!(d_leader(w, &E(1), &plus(vec![E(1)])).unwrap(), None);
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        let t = DTuple::new(h2, vec![BasisElement::dh([0, 1])], Sign::Minus).unwrap();
        assert_eq!(d_leader(h2, &BasisElement::dh([1, 0]), &t).unwrap(), None);
    }

    #[test]
    fn tuple_validation() {
        let w = AlgebraSpec::witt();
        assert!(DTuple::new(w, vec![], Sign::Plus).is_err());
        assert!(DTuple::new(w, vec![E(0)], Sign::Plus).is_err());
        assert!(DTuple::new(w, vec![E(1), E(-1)], Sign::Plus).is_err());
        assert!(DTuple::new(w, vec![E(-1), E(-3)], Sign::Minus).is_ok());
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        assert!(DTuple::new(h2, vec![BasisElement::dh([0, 1])], Sign::Plus).is_err());
    }
}
