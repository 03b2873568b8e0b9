//! Structure constants of the built-in algebras.

use super::algebra::{AlgebraSpec, Family};
use super::basis::{BasisElement, Sl2Root};
use super::element::LieElement;
use super::multi_index::MultiIndex;
use super::special;
use crate::error::Result;
use crate::{int, Scalar};

impl AlgebraSpec {
    /// The Lie bracket `[a, b]` of two basis elements.
    pub fn bracket_basis(&self, a: &BasisElement, b: &BasisElement) -> Result<LieElement> {
        self.validate(a)?;
        self.validate(b)?;
        Ok(self.bracket_unchecked(a, b))
    }

    /// Bracket of two elements already known to be valid for this algebra.
    pub(crate) fn bracket_unchecked(&self, a: &BasisElement, b: &BasisElement) -> LieElement {
        use BasisElement::*;
        match (self.family(), a, b) {
            (Family::Witt | Family::WittPositive | Family::CartanW1, E(n), E(m)) => {
                LieElement::term(E(n + m), int(m - n))
            }
            (Family::Virasoro, E(n), E(m)) => {
                let mut out = LieElement::term(E(n + m), int(m - n));
                if n + m == 0 {
                    out.add_term(Z, Scalar::new((n * n * n - n).into(), 12.into()));
                }
                out
            }
            (Family::Virasoro, _, _) => LieElement::zero(),
            (Family::CartanW, W { exp: i, dir: k }, W { exp: j, dir: m }) => {
                w_bracket(i, *k, j, *m)
            }
            (Family::SpecialS, _, _) => {
                let wa = special::expand(a);
                let wb = special::expand(b);
                let w = bracket_w_elements(&wa, &wb);
                special::project(self.rank(), &w)
                    .expect("bracket of two divergence-free fields is divergence-free")
            }
            (Family::HamiltonianH, DH(i), DH(j)) => hamiltonian_bracket(i, j),
            (Family::ContactK, DK(i), DK(j)) => contact_bracket(i, j),
            (Family::LoopSl2, Loop { root: x, power: p }, Loop { root: y, power: q }) => {
                loop_bracket(*x, *p, *y, *q)
            }
            (Family::ExampleD, Y, X(i)) => LieElement::basis(X(i + 1)),
            (Family::ExampleD, X(i), Y) => LieElement::term(X(i + 1), int(-1)),
            (Family::ExampleD, _, _) => LieElement::zero(),
            _ => unreachable!("elements validated against {self}"),
        }
    }

    /// Bilinear extension of [`AlgebraSpec::bracket_basis`].
    pub fn bracket(&self, a: &LieElement, b: &LieElement) -> Result<LieElement> {
        let mut out = LieElement::zero();
        for (x, c) in a.iter() {
            for (y, d) in b.iter() {
                let br = self.bracket_basis(x, y)?;
                out.add_scaled(&br, &(c * d));
            }
        }
        Ok(out)
    }

    /// `[[a,b],c] + [[b,c],a] + [[c,a],b]`; zero in every Lie algebra.
    pub fn jacobi_residual(
        &self,
        a: &BasisElement,
        b: &BasisElement,
        c: &BasisElement,
    ) -> Result<LieElement> {
        for x in [a, b, c] {
            self.validate(x)?;
        }
        let mut out = self.bracket_element_basis(&self.bracket_unchecked(a, b), c);
        out.add_scaled(
            &self.bracket_element_basis(&self.bracket_unchecked(b, c), a),
            &int(1),
        );
        out.add_scaled(
            &self.bracket_element_basis(&self.bracket_unchecked(c, a), b),
            &int(1),
        );
        Ok(out)
    }

    /// Left-normed iterated bracket `[[[m, t_1], t_2], …, t_r]`.
    pub fn iterated_bracket(&self, m: &BasisElement, tuple: &[BasisElement]) -> LieElement {
        let mut cur = LieElement::basis(m.clone());
        for t in tuple {
            cur = self.bracket_element_basis(&cur, t);
            if cur.is_zero() {
                break;
            }
        }
        cur
    }

    /// `[x, t]` for a Lie element `x` and a basis element `t`, both valid.
    pub(crate) fn bracket_element_basis(&self, x: &LieElement, t: &BasisElement) -> LieElement {
        let mut out = LieElement::zero();
        for (b, c) in x.iter() {
            out.add_scaled(&self.bracket_unchecked(b, t), c);
        }
        out
    }
}

/// `[x^i ∂_k, x^j ∂_m] = j_k x^{i+j-1_k} ∂_m − i_m x^{i+j-1_m} ∂_k`.
pub(crate) fn w_bracket(i: &MultiIndex, k: u8, j: &MultiIndex, m: u8) -> LieElement {
    let mut out = LieElement::zero();
    let sum = i.add(j);
    let jk = j.get(k as usize);
    if jk != 0 {
        let exp = sum.dec(k as usize).expect("j_k ≠ 0 implies (i+j)_k ≥ 1");
        out.add_term(BasisElement::W { exp, dir: m }, int(jk as i64));
    }
    let im = i.get(m as usize);
    if im != 0 {
        let exp = sum.dec(m as usize).expect("i_m ≠ 0 implies (i+j)_m ≥ 1");
        out.add_term(BasisElement::W { exp, dir: k }, int(-(im as i64)));
    }
    out
}

/// Bracket of two combinations of `W` basis elements.
pub(crate) fn bracket_w_elements(a: &LieElement, b: &LieElement) -> LieElement {
    let mut out = LieElement::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            if let (BasisElement::W { exp: i, dir: k }, BasisElement::W { exp: j, dir: m }) = (x, y)
            {
                out.add_scaled(&w_bracket(i, *k, j, *m), &(c * d));
            }
        }
    }
    out
}

/// `x^{i+j-1_a-1_b}` if the coefficient is nonzero.
fn shifted(sum: &MultiIndex, coeff: i64, dec: &[usize]) -> Option<MultiIndex> {
    if coeff == 0 {
        return None;
    }
    let mut exp = sum.clone();
    for &pos in dec {
        exp = exp
            .dec(pos)
            .expect("nonzero structure constant implies a nonnegative exponent");
    }
    Some(exp)
}

fn hamiltonian_bracket(i: &MultiIndex, j: &MultiIndex) -> LieElement {
    let m = i.len() / 2;
    let sum = i.add(j);
    let mut out = LieElement::zero();
    for l in 1..=m {
        let coeff = i.get(m + l) as i64 * j.get(l) as i64 - i.get(l) as i64 * j.get(m + l) as i64;
        if let Some(exp) = shifted(&sum, coeff, &[l, m + l]) {
            // D_H has kernel 𝕜: constant terms vanish.
            if !exp.is_zero() {
                out.add_term(BasisElement::DH(exp), int(coeff));
            }
        }
    }
    out
}

fn contact_bracket(i: &MultiIndex, j: &MultiIndex) -> LieElement {
    let n = i.len();
    let m = (n - 1) / 2;
    let sum = i.add(j);
    let mut out = LieElement::zero();
    for l in 1..=m {
        let coeff = i.get(m + l) as i64 * j.get(l) as i64 - i.get(l) as i64 * j.get(m + l) as i64;
        if let Some(exp) = shifted(&sum, coeff, &[l, m + l]) {
            out.add_term(BasisElement::DK(exp), int(coeff));
        }
    }
    let (i_n, j_n) = (i.get(n) as i64, j.get(n) as i64);
    let mut coeff = 2 * (j_n - i_n);
    for l in 1..=2 * m {
        coeff += i_n * j.get(l) as i64 - i.get(l) as i64 * j_n;
    }
    if let Some(exp) = shifted(&sum, coeff, &[n]) {
        out.add_term(BasisElement::DK(exp), int(coeff));
    }
    out
}

fn loop_bracket(x: Sl2Root, p: i64, y: Sl2Root, q: i64) -> LieElement {
    use Sl2Root::*;
    let (root, c) = match (x, y) {
        (E, F) => (H, 1),
        (F, E) => (H, -1),
        (H, E) => (E, 2),
        (E, H) => (E, -2),
        (H, F) => (F, -2),
        (F, H) => (F, 2),
        _ => return LieElement::zero(),
    };
    LieElement::term(BasisElement::Loop { root, power: p + q }, int(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::BasisElement::*;

    fn q(a: i64, b: i64) -> Scalar {
        Scalar::new(a.into(), b.into())
    }

    #[test]
    fn witt_brackets() {
        let w = AlgebraSpec::witt();
        assert_eq!(
            w.bracket_basis(&E(1), &E(2)).unwrap(),
            LieElement::basis(E(3))
        );
        assert!(w.bracket_basis(&E(4), &E(4)).unwrap().is_zero());
    }

    #[test]
    fn virasoro_central_term() {
        // n = −2, m = 2: (2 − (−2)) e_0 + ((−8 + 2)/12) z
        let v = AlgebraSpec::virasoro();
        let expect: LieElement = [(E(0), int(4)), (Z, q(-1, 2))].into_iter().collect();
        assert_eq!(v.bracket_basis(&E(-2), &E(2)).unwrap(), expect);
        assert!(v.bracket_basis(&Z, &E(3)).unwrap().is_zero());
    }

    #[test]
    fn cartan_w_bracket() {
        let w2 = AlgebraSpec::cartan_w(2).unwrap();
        let a = BasisElement::w([0, 1], 1);
        let b = BasisElement::w([1, 0], 1);
        assert_eq!(
            w2.bracket_basis(&a, &b).unwrap(),
            LieElement::basis(a.clone())
        );
    }

    #[test]
    fn loop_and_example_d() {
        let l = AlgebraSpec::loop_sl2();
        let e = BasisElement::loop_elem(Sl2Root::E, 1);
        let f = BasisElement::loop_elem(Sl2Root::F, -2);
        assert_eq!(
            l.bracket_basis(&e, &f).unwrap(),
            LieElement::basis(BasisElement::loop_elem(Sl2Root::H, -1))
        );
        let d = AlgebraSpec::example_d();
        assert_eq!(d.bracket_basis(&Y, &X(3)).unwrap(), LieElement::basis(X(4)));
        assert_eq!(
            d.bracket_basis(&X(3), &Y).unwrap(),
            LieElement::term(X(4), int(-1))
        );
        assert!(d.bracket_basis(&X(1), &X(2)).unwrap().is_zero());
    }

    #[test]
    fn hamiltonian_constant_dropped() {
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        let a = BasisElement::dh([1, 0]);
        let b = BasisElement::dh([0, 1]);
        assert!(h2.bracket_basis(&a, &b).unwrap().is_zero());
    }

    #[test]
    fn jacobi_examples() {
        let w = AlgebraSpec::witt();
        assert!(w.jacobi_residual(&E(1), &E(2), &E(3)).unwrap().is_zero());
        let v = AlgebraSpec::virasoro();
        assert!(v.jacobi_residual(&E(-2), &E(1), &E(1)).unwrap().is_zero());
        let h2 = AlgebraSpec::hamiltonian(2).unwrap();
        let r = h2
            .jacobi_residual(
                &BasisElement::dh([2, 0]),
                &BasisElement::dh([1, 1]),
                &BasisElement::dh([0, 2]),
            )
            .unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn axioms_on_small_windows() {
        let algs = [
            AlgebraSpec::virasoro(),
            AlgebraSpec::cartan_w(2).unwrap(),
            AlgebraSpec::special_s(2).unwrap(),
            AlgebraSpec::special_s(3).unwrap(),
            AlgebraSpec::hamiltonian(2).unwrap(),
            AlgebraSpec::hamiltonian(4).unwrap(),
            AlgebraSpec::contact(3).unwrap(),
            AlgebraSpec::loop_sl2(),
            AlgebraSpec::example_d(),
        ];
        for alg in algs {
            let window = alg.enumerate_window(-2, 1);
            for a in &window {
                for b in &window {
                    let ab = alg.bracket_basis(a, b).unwrap();
                    let ba = alg.bracket_basis(b, a).unwrap();
                    assert_eq!(ab, -&ba, "{alg}: [{a}, {b}]");
                    let d = a.degree() + b.degree();
                    assert!(ab.iter().all(|(t, _)| t.degree() == d), "{alg}: [{a}, {b}]");
                    for c in &window {
                        let r = alg.jacobi_residual(a, b, c).unwrap();
                        assert!(r.is_zero(), "{alg}: ({a}, {b}, {c}) -> {r}");
                    }
                }
            }
        }
    }

    #[test]
    fn rejects_foreign_elements() {
        let w = AlgebraSpec::witt_positive();
        assert!(w.bracket_basis(&E(0), &E(1)).is_err());
        assert!(w.bracket_basis(&Z, &E(1)).is_err());
    }
}
