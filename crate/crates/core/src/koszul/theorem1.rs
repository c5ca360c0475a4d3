//! The four chain maps between `C(x, f̂)`, `C(x, f̂, F̂)` and their dual counterparts.

use super::boundary::{BoundaryAssignment, ComplexElement};
use crate::error::{Error, Result};
use crate::grassmann::{drop_family, dual_full_product, exp_substitution, top_contract, Element};
use crate::ring::{scalar, OddFamily, Poly, Scalar};

/// Tag naming which complex a chain lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Space {
    /// `C(x, f̂_x)`
    Primal,
    /// `C(x, f̂_x, F̂_x)`
    PrimalExtended,
    /// `C(x_*, f̂^x_*)`
    Dual,
    /// `C(x_*, f̂^x_*, F̂^x_*)`
    DualExtended,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    /// `C(x, f̂, F̂) → C(x, f̂)`, `c ↦ ⊤_F̂ det‖F̂_*‖ c`
    MultDualDet,
    /// `C(x_*, f̂_*) → C(x_*, f̂_*, F̂_*)`, `c ↦ det‖F̂_*‖ c`
    ProjectDualDet,
    /// `C(x, f̂) → C(x, f̂, F̂)`, `c ↦ (F̂)^0 c`
    EmbedUnit,
    /// `C(x_*, f̂_*, F̂_*) → C(x_*, f̂_*)`, `c ↦ ⊤_F̂ (F̂)^0 c`
    ProjectUnit,
}

impl MapKind {
    pub const ALL: [MapKind; 4] = [
        MapKind::MultDualDet,
        MapKind::ProjectDualDet,
        MapKind::EmbedUnit,
        MapKind::ProjectUnit,
    ];

    pub fn domain(self) -> Space {
        match self {
            MapKind::MultDualDet => Space::PrimalExtended,
            MapKind::ProjectDualDet => Space::Dual,
            MapKind::EmbedUnit => Space::Primal,
            MapKind::ProjectUnit => Space::DualExtended,
        }
    }

    pub fn codomain(self) -> Space {
        match self {
            MapKind::MultDualDet => Space::Primal,
            MapKind::ProjectDualDet => Space::DualExtended,
            MapKind::EmbedUnit => Space::PrimalExtended,
            MapKind::ProjectUnit => Space::Dual,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MapKind::MultDualDet => "mult_dual_det",
            MapKind::ProjectDualDet => "project_dual_det",
            MapKind::EmbedUnit => "embed_unit",
            MapKind::ProjectUnit => "project_unit",
        }
    }
}

/// A chain together with the complex it belongs to.
#[derive(Debug, Clone, PartialEq)]
pub struct Tagged {
    pub space: Space,
    pub value: ComplexElement,
}

/// Families and boundary images for the maps: `f̂`, its primed copy, `F̂`, its primed copy.
#[derive(Debug, Clone)]
pub struct Theorem1 {
    pub f: OddFamily,
    pub f_prime: OddFamily,
    pub big: OddFamily,
    pub big_prime: OddFamily,
    pub fpolys: Vec<Poly>,
    pub bigpolys: Vec<Poly>,
}

impl Theorem1 {
    fn s(&self) -> usize {
        self.fpolys.len()
    }

    fn t(&self) -> usize {
        self.bigpolys.len()
    }

    /// `x^0 det‖F̂'_*‖ exp(f̂_x f̂'_*)` and `x^0 (F̂_x)^0 exp(f̂_x f̂'_*)`.
    pub fn kernels(&self) -> (Element, Element) {
        let ex = self.exp_into(self.f_prime, self.f);
        (&dual_full_product(self.big_prime, self.t()) * &ex, ex)
    }

    /// Boundary assignments under which each kernel is closed.
    pub fn kernel_assignments(&self) -> (BoundaryAssignment, BoundaryAssignment) {
        let k1 = BoundaryAssignment::new()
            .primal(self.f, self.fpolys.clone())
            .dual(self.f_prime, self.fpolys.clone())
            .dual(self.big_prime, self.bigpolys.clone());
        let k2 = BoundaryAssignment::new()
            .primal(self.f, self.fpolys.clone())
            .dual(self.f_prime, self.fpolys.clone())
            .primal(self.big, self.bigpolys.clone());
        (k1, k2)
    }

    /// The boundary of `space`.
    pub fn assignment(&self, space: Space) -> BoundaryAssignment {
        let ba = BoundaryAssignment::new();
        match space {
            Space::Primal => ba.primal(self.f, self.fpolys.clone()),
            Space::PrimalExtended => ba
                .primal(self.f, self.fpolys.clone())
                .primal(self.big, self.bigpolys.clone()),
            Space::Dual => ba.dual(self.f, self.fpolys.clone()),
            Space::DualExtended => ba
                .dual(self.f, self.fpolys.clone())
                .dual(self.big, self.bigpolys.clone()),
        }
    }

    /// Sign `σ` with `∂∘φ = σ·φ∘∂`: the determinant maps shift wedge degree by `|F|`
    /// and are chain maps in the graded sense.
    pub fn commutation_sign(&self, kind: MapKind) -> Scalar {
        match kind {
            MapKind::MultDualDet | MapKind::ProjectDualDet => scalar::sign(self.t()),
            MapKind::EmbedUnit | MapKind::ProjectUnit => scalar::one(),
        }
    }

    /// `exp(Σ_i src_i ∧ dst^i_*)`, i.e. the kernel `exp(dst src_*)` written with `src` primal
    /// on the left and duals of `dst`.
    fn exp_into(&self, dual_of: OddFamily, primal: OddFamily) -> Element {
        let images: Vec<Element> = (0..self.s()).map(|i| Element::primal(primal, i)).collect();
        exp_substitution(dual_of, &images)
    }

    /// Applies a map through its defining contraction kernel.
    pub fn apply(&self, kind: MapKind, c: &Tagged) -> Result<Tagged> {
        self.check_domain(kind, c)?;
        let (k1, k2) = self.kernels();
        let value = match (kind, &c.value) {
            (MapKind::MultDualDet, ComplexElement::Primal(e)) => {
                let renamed = e.rename_family(self.f, self.f_prime).rename_family(self.big, self.big_prime);
                let body = &k1 * &renamed;
                ComplexElement::Primal(top_contract(self.big_prime, &top_contract(self.f_prime, &body)))
            }
            (MapKind::EmbedUnit, ComplexElement::Primal(e)) => {
                let body = &k2 * &e.rename_family(self.f, self.f_prime);
                ComplexElement::Primal(top_contract(self.f_prime, &body))
            }
            (MapKind::ProjectDualDet, ComplexElement::Dual(fe)) => {
                let kernel = &dual_full_product(self.big, self.t()) * &self.exp_into(self.f, self.f_prime);
                let body = &kernel * &fe.terms().rename_family(self.f, self.f_prime);
                ComplexElement::Dual(fe.with_terms(top_contract(self.f_prime, &body)))
            }
            (MapKind::ProjectUnit, ComplexElement::Dual(fe)) => {
                let renamed = fe
                    .terms()
                    .rename_family(self.f, self.f_prime)
                    .rename_family(self.big, self.big_prime);
                let body = &self.exp_into(self.f, self.f_prime) * &renamed;
                let out = top_contract(self.big_prime, &top_contract(self.f_prime, &body));
                ComplexElement::Dual(fe.with_terms(out))
            }
            _ => unreachable!("domain checked"),
        };
        Ok(Tagged {
            space: kind.codomain(),
            value,
        })
    }

    /// Applies a map through its simplified right-hand form.
    pub fn apply_direct(&self, kind: MapKind, c: &Tagged) -> Result<Tagged> {
        self.check_domain(kind, c)?;
        let det = dual_full_product(self.big, self.t());
        let value = match (kind, &c.value) {
            (MapKind::MultDualDet, ComplexElement::Primal(e)) => ComplexElement::Primal(top_contract(self.big, &(&det * e))),
            (MapKind::EmbedUnit, ComplexElement::Primal(e)) => ComplexElement::Primal(e.clone()),
            (MapKind::ProjectDualDet, ComplexElement::Dual(fe)) => ComplexElement::Dual(fe.with_terms(&det * fe.terms())),
            (MapKind::ProjectUnit, ComplexElement::Dual(fe)) => {
                ComplexElement::Dual(fe.with_terms(drop_family(self.big, fe.terms())))
            }
            _ => unreachable!("domain checked"),
        };
        Ok(Tagged {
            space: kind.codomain(),
            value,
        })
    }

    fn check_domain(&self, kind: MapKind, c: &Tagged) -> Result<()> {
        let side_ok = matches!(
            (&c.value, c.space),
            (ComplexElement::Primal(_), Space::Primal | Space::PrimalExtended)
                | (ComplexElement::Dual(_), Space::Dual | Space::DualExtended)
        );
        if c.space != kind.domain() || !side_ok {
            return Err(Error::usage(format!(
                "{} expects a chain in {:?}, got {:?}",
                kind.name(),
                kind.domain(),
                c.space
            )));
        }
        Ok(())
    }
}
