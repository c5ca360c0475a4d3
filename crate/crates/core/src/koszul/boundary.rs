use std::collections::BTreeMap;

use crate::dual_element::FunctionalElement;
use crate::error::{Error, Result};
use crate::grassmann::{Element, Gen, Word};
use crate::ring::{scalar, OddFamily, Poly};

/// Which generators of a family the boundary acts on.
///
/// `Primal` families live in a complex `C(x, f̂)`: `∂ f̂_i = f_i` as an odd derivation.
/// `Dual` families live in `C(x_*, f̂_*)`: `∂` is left multiplication by `−Σ_i f_i f̂^i_*`.
/// `Both` is used for mixed kernels where a family appears on both sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Primal,
    Dual,
    Both,
}

impl Side {
    fn primal(self) -> bool {
        matches!(self, Side::Primal | Side::Both)
    }

    fn dual(self) -> bool {
        matches!(self, Side::Dual | Side::Both)
    }
}

/// Binding of odd families to their polynomial images under `∂`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct BoundaryAssignment {
    map: BTreeMap<OddFamily, (Vec<Poly>, Side)>,
}

impl BoundaryAssignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn assign(mut self, family: OddFamily, images: Vec<Poly>, side: Side) -> Self {
        self.map.insert(family, (images, side));
        self
    }

    pub fn primal(self, family: OddFamily, images: Vec<Poly>) -> Self {
        self.assign(family, images, Side::Primal)
    }

    pub fn dual(self, family: OddFamily, images: Vec<Poly>) -> Self {
        self.assign(family, images, Side::Dual)
    }

    pub fn both(self, family: OddFamily, images: Vec<Poly>) -> Self {
        self.assign(family, images, Side::Both)
    }

    pub fn get(&self, family: OddFamily) -> Option<(&[Poly], Side)> {
        self.map.get(&family).map(|(v, s)| (v.as_slice(), *s))
    }

    /// Every primal generator `∂` acts on, with its image.
    pub fn primal_gens(&self) -> Vec<(Gen, &Poly)> {
        self.map
            .iter()
            .filter(|(_, (_, side))| side.primal())
            .flat_map(|(f, (imgs, _))| imgs.iter().enumerate().map(move |(i, p)| (Gen::primal(*f, i), p)))
            .collect()
    }

    pub fn images(&self) -> impl Iterator<Item = &Poly> {
        self.map.values().flat_map(|(v, _)| v.iter())
    }

    fn image(&self, g: Gen) -> Result<&Poly> {
        let (imgs, side) = self
            .map
            .get(&g.family())
            .ok_or_else(|| Error::usage(format!("boundary: family {} is unassigned", g.family().0)))?;
        let ok = if g.is_dual() { side.dual() } else { side.primal() };
        if !ok {
            return Err(Error::usage(format!(
                "boundary: {} generators of family {} are not in the complex",
                if g.is_dual() { "dual" } else { "primal" },
                g.family().0
            )));
        }
        imgs.get(g.index())
            .ok_or_else(|| Error::usage(format!("boundary: index {} exceeds family arity", g.index() + 1)))
    }

    fn check(&self, e: &Element) -> Result<()> {
        for g in e.gens() {
            self.image(g)?;
        }
        Ok(())
    }
}

/// `∂` on an element: the odd derivation on primal generators plus left multiplication by
/// `−Σ_i f_i f̂^i_*` for every dual-side family. `∂∘∂ = 0`.
pub fn boundary(ba: &BoundaryAssignment, e: &Element) -> Result<Element> {
    ba.check(e)?;
    let mut out = Element::zero();
    for (w, p) in e.terms() {
        let gens = w.gens();
        for (pos, &g) in gens.iter().enumerate() {
            if g.is_dual() {
                continue;
            }
            let img = ba.image(g)?;
            let mut rest: Vec<Gen> = gens.to_vec();
            rest.remove(pos);
            let word = Word::from_product(&rest).expect("subword of a canonical word").1;
            out.add_term(word, (p * img).scale(&scalar::sign(pos)));
        }
    }
    for (f, (imgs, side)) in &ba.map {
        if !side.dual() {
            continue;
        }
        let mut omega = Element::zero();
        for (i, img) in imgs.iter().enumerate() {
            omega.sub_term(Word::single(Gen::dual(*f, i)), img.clone());
        }
        out += &(&omega * e);
    }
    Ok(out)
}

/// A chain in either the primal complex `C(x, f̂)` or the dual complex `C(x_*, f̂_*)`.
#[derive(Debug, Clone, PartialEq)]
pub enum ComplexElement {
    Primal(Element),
    Dual(FunctionalElement),
}

impl ComplexElement {
    pub fn boundary(&self, ba: &BoundaryAssignment) -> Result<ComplexElement> {
        Ok(match self {
            ComplexElement::Primal(e) => ComplexElement::Primal(boundary(ba, e)?),
            ComplexElement::Dual(fe) => ComplexElement::Dual(fe.boundary(ba)?),
        })
    }

    pub fn element(&self) -> &Element {
        match self {
            ComplexElement::Primal(e) => e,
            ComplexElement::Dual(fe) => fe.terms(),
        }
    }
}
