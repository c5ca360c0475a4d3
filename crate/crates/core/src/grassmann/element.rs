use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::Zero;

use super::word::{Gen, Word};
use crate::ring::{OddFamily, Poly, Registry, Scalar, Var};

/// An element of the Grassmann algebra over `Q[commuting generators]`: a finite sum of
/// polynomial coefficients times canonical wedge words of primal/dual odd generators.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    terms: BTreeMap<Word, Poly>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Self::scalar(Poly::one())
    }

    pub fn scalar(p: Poly) -> Self {
        Self::term(Word::unit(), p)
    }

    pub fn term(w: Word, p: Poly) -> Self {
        let mut e = Element::zero();
        e.add_term(w, p);
        e
    }

    pub fn gen(g: Gen) -> Self {
        Self::term(Word::single(g), Poly::one())
    }

    pub fn primal(f: OddFamily, i: usize) -> Self {
        Self::gen(Gen::primal(f, i))
    }

    pub fn dual(f: OddFamily, i: usize) -> Self {
        Self::gen(Gen::dual(f, i))
    }

    /// `Σ_i coeffs[i]·f̂_i`, a homogeneous element of wedge degree one.
    pub fn linear(f: OddFamily, coeffs: &[Poly]) -> Self {
        let mut e = Element::zero();
        for (i, c) in coeffs.iter().enumerate() {
            e.add_term(Word::single(Gen::primal(f, i)), c.clone());
        }
        e
    }

    pub fn add_term(&mut self, w: Word, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(p);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn sub_term(&mut self, w: Word, p: Poly) {
        self.add_term(w, -p);
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

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Poly)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Word, Poly)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, w: &Word) -> Poly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// The polynomial coefficient of the unit word, if the element has no other terms.
    pub fn as_scalar(&self) -> Option<Poly> {
        match self.terms.len() {
            0 => Some(Poly::zero()),
            1 => self.terms.get(&Word::unit()).cloned(),
            _ => None,
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_scalar().is_some_and(|p| p.is_one())
    }

    /// Distinct wedge degrees occurring in the element.
    pub fn wedge_degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Word::len).collect()
    }

    pub fn is_homogeneous(&self, degree: usize) -> bool {
        self.terms.keys().all(|w| w.len() == degree)
    }

    pub fn max_poly_degree(&self) -> u32 {
        self.terms.values().map(Poly::total_degree).max().unwrap_or(0)
    }

    pub fn families(&self) -> BTreeSet<OddFamily> {
        self.terms.keys().flat_map(|w| w.families().collect::<Vec<_>>()).collect()
    }

    pub fn gens(&self) -> BTreeSet<Gen> {
        self.terms.keys().flat_map(|w| w.gens().to_vec()).collect()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.values().flat_map(|p| p.vars()).collect()
    }

    pub fn mentions_family(&self, f: OddFamily) -> bool {
        self.terms.keys().any(|w| w.families().any(|g| g == f))
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        self.map_coeffs(|p| p.scale(c))
    }

    pub fn scale_poly(&self, p: &Poly) -> Element {
        self.map_coeffs(|q| q * p)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> Element {
        let mut out = Element::zero();
        for (w, p) in &self.terms {
            out.add_term(w.clone(), f(p));
        }
        out
    }

    /// Keeps only the terms whose word satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Word) -> bool) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| keep(w))
                .map(|(w, p)| (w.clone(), p.clone()))
                .collect(),
        }
    }

    /// Renames every generator of family `from` (primal and dual) to family `to`.
    pub fn rename_family(&self, from: OddFamily, to: OddFamily) -> Element {
        self.map_gens(|g| if g.family() == from { g.with_family(to) } else { g })
    }

    /// Applies a generator relabelling and re-canonicalizes each word.
    pub fn map_gens(&self, f: impl Fn(Gen) -> Gen) -> Element {
        let mut out = Element::zero();
        for (w, p) in &self.terms {
            let mapped: Vec<Gen> = w.gens().iter().map(|&g| f(g)).collect();
            if let Some((neg, w2)) = Word::from_product(&mapped) {
                out.add_term(w2, if neg { -p } else { p.clone() });
            }
        }
        out
    }

    pub fn rename_vars(&self, map: &BTreeMap<Var, Var>) -> Element {
        self.map_coeffs(|p| p.rename(map))
    }

    /// Canonical text rendering: terms in ascending word order, coefficients in descending monomial order.
    pub fn render(&self, reg: &Registry) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|(w, p)| {
                if w.is_empty() {
                    format!("({})", p.render(reg))
                } else {
                    format!("({})·{}", p.render(reg), w.render(reg))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter())
            .finish()
    }
}

impl From<Poly> for Element {
    fn from(p: Poly) -> Self {
        Element::scalar(p)
    }
}

impl<'a> AddAssign<&'a Element> for Element {
    fn add_assign(&mut self, rhs: &'a Element) {
        for (w, p) in &rhs.terms {
            self.add_term(w.clone(), p.clone());
        }
    }
}

impl<'a> SubAssign<&'a Element> for Element {
    fn sub_assign(&mut self, rhs: &'a Element) {
        for (w, p) in &rhs.terms {
            self.add_term(w.clone(), -p);
        }
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for Element {
    type Output = Element;
    fn add(mut self, rhs: Element) -> Element {
        self += &rhs;
        self
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(mut self, rhs: Element) -> Element {
        self -= &rhs;
        self
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.map_coeffs(|p| -p)
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}

/// The wedge product.
impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        let mut out = Element::zero();
        for (wa, pa) in &self.terms {
            for (wb, pb) in &rhs.terms {
                if let Some((neg, w)) = wa.wedge(wb) {
                    let p = pa * pb;
                    out.add_term(w, if neg { -p } else { p });
                }
            }
        }
        out
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

/// Wedge product of a sequence, left to right.
pub fn wedge_all<'a>(factors: impl IntoIterator<Item = &'a Element>) -> Element {
    factors.into_iter().fold(Element::one(), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: OddFamily = OddFamily(0);

    #[test]
    fn square_zero_and_anticommutation() {
        let f1 = Element::primal(F, 0);
        let f2 = Element::primal(F, 1);
        assert!((&f1 * &f1).is_zero());
        assert_eq!(&f2 * &f1, -(&f1 * &f2));
    }

    #[test]
    fn even_pairs_multiply_out() {
        let one = Element::one();
        let a = &one + &(&Element::primal(F, 0) * &Element::dual(F, 0));
        let b = &one + &(&Element::primal(F, 1) * &Element::dual(F, 1));
        let prod = &a * &b;
        assert_eq!(prod.len(), 4);
        // f1 f1* f2 f2* is already in canonical order, so no sign appears.
        let top = Word::from_product(&[
            Gen::primal(F, 0),
            Gen::dual(F, 0),
            Gen::primal(F, 1),
            Gen::dual(F, 1),
        ])
        .unwrap();
        assert!(!top.0);
        assert_eq!(prod.coeff(&top.1), Poly::one());
    }
}
