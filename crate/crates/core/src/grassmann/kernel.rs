use std::collections::BTreeMap;

use super::element::Element;
use super::word::Gen;
use crate::error::{Error, Result};
use crate::ring::{OddFamily, Poly, Var};

/// The exponent `exp(a(y)x_* + ĝb(y)f̂_*)` read as an algebra homomorphism:
/// `x_k ↦ a_k(y)`, `f̂_i ↦ Σ_j ĝ_j b^j_i(y)`. Generators outside the domain are fixed,
/// as are all dual generators.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct SubstitutionKernel {
    commuting: BTreeMap<Var, Poly>,
    odd: BTreeMap<Gen, Element>,
}

impl SubstitutionKernel {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn map_var(mut self, v: Var, image: Poly) -> Self {
        self.commuting.insert(v, image);
        self
    }

    /// Sends the primal generator `g` to `image`, which must be homogeneous of wedge degree one.
    pub fn map_odd(mut self, g: Gen, image: Element) -> Result<Self> {
        if g.is_dual() {
            return Err(Error::usage("kernels rebind primal generators only"));
        }
        if !image.is_homogeneous(1) {
            return Err(Error::usage(format!(
                "odd image of {g:?} must have wedge degree one"
            )));
        }
        self.odd.insert(g, image);
        Ok(self)
    }

    /// The zero kernel `1_{f̂}(0)` on the first `arity` generators of `family`.
    pub fn zero_family(family: OddFamily, arity: usize) -> Self {
        let mut k = Self::identity();
        for i in 0..arity {
            k.odd.insert(Gen::primal(family, i), Element::zero());
        }
        k
    }

    /// Renames primal generators of `from` to `to`, index by index.
    pub fn rename_family(from: OddFamily, to: OddFamily, arity: usize) -> Self {
        let mut k = Self::identity();
        for i in 0..arity {
            k.odd.insert(Gen::primal(from, i), Element::primal(to, i));
        }
        k
    }

    pub fn apply_poly(&self, p: &Poly) -> Poly {
        if self.commuting.is_empty() {
            return p.clone();
        }
        p.subst(&self.commuting)
    }

    pub fn apply(&self, e: &Element) -> Element {
        let mut out = Element::zero();
        for (w, p) in e.terms() {
            let mut acc = Element::scalar(self.apply_poly(p));
            for &g in w.gens() {
                let img = match self.odd.get(&g) {
                    Some(img) => img.clone(),
                    None => Element::gen(g),
                };
                acc = &acc * &img;
                if acc.is_zero() {
                    break;
                }
            }
            out += &acc;
        }
        out
    }

    /// The kernel equal to applying `self` first and then `next`.
    pub fn then(&self, next: &SubstitutionKernel) -> SubstitutionKernel {
        let mut out = SubstitutionKernel::identity();
        for (v, img) in &self.commuting {
            out.commuting.insert(*v, next.apply_poly(img));
        }
        for (v, img) in &next.commuting {
            out.commuting.entry(*v).or_insert_with(|| img.clone());
        }
        for (g, img) in &self.odd {
            out.odd.insert(*g, next.apply(img));
        }
        for (g, img) in &next.odd {
            out.odd.entry(*g).or_insert_with(|| img.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F: OddFamily = OddFamily(0);
    const G: OddFamily = OddFamily(1);

    #[test]
    fn identity_kernel_is_noop() {
        let e = &Element::primal(F, 0) * &Element::dual(F, 1);
        assert_eq!(SubstitutionKernel::identity().apply(&e), e);
    }

    #[test]
    fn zero_kernel_kills_family() {
        let e = &Element::one() + &(&Element::primal(F, 0) * &Element::primal(G, 0));
        assert!(SubstitutionKernel::zero_family(F, 1).apply(&e).is_one());
    }

    #[test]
    fn rejects_even_images() {
        assert!(SubstitutionKernel::identity()
            .map_odd(Gen::primal(F, 0), Element::one())
            .is_err());
    }
}
