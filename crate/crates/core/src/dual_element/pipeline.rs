use std::sync::Arc;

use super::functional::{canonical_functional, functional_eval, recurrent_functional, FunctionalElement, ProductFunctional};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::grassmann::{bordered_det, drop_family, Element};
use crate::koszul::{homotopy_witness, BoundaryAssignment, IdentityReport, Status, WitnessOutcome};
use crate::quotient::{charpoly_t, groebner, quotient_basis, Annihilator, AnnihilatorMode, GroebnerBasis, MonomialOrder, QuotientBasis};
use crate::ring::{Poly, Scalar};

#[derive(Debug, Clone, Default)]
pub struct DualElementOptions {
    pub order: MonomialOrder,
    pub mode: AnnihilatorMode,
    /// Initial values per variable; the canonical `(0, …, 0, 1)` when absent.
    pub initials: Option<Vec<Vec<Scalar>>>,
}

/// Everything the construction produced along the way.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub groebner: GroebnerBasis,
    pub quotient: QuotientBasis,
    /// One monic `T_j(x_j)` per variable with `T_j = Σ_i f_i G^i_j`.
    pub annihilators: Vec<Annihilator>,
    /// `s × n` cofactor matrix `G`.
    pub g: Vec<Vec<Poly>>,
}

impl Certificate {
    /// Re-expands `T_j(x_j) = Σ_i f_i G^i_j` for every `j`.
    pub fn cofactors_hold(&self, f: &[Poly]) -> bool {
        self.annihilators.iter().enumerate().all(|(j, a)| {
            let sum = f.iter().zip(&self.g).fold(Poly::zero(), |acc, (fi, row)| &acc + &(fi * &row[j]));
            sum == a.poly
        })
    }
}

#[derive(Debug, Clone)]
pub struct DualElement {
    pub e: FunctionalElement,
    pub certificate: Certificate,
    /// `∂[e] = 0`, decided by the finite-box criterion.
    pub cocycle: bool,
}

/// Builds `e(x_*, f̂^x_*) = ⊥_x ⊤_F̂x det‖[G(x), f̂^x_*; −F̂_x, 0]‖ L(x_*, F̂^x_*)` with
/// `L = l(x_*) (F̂_x)^0` for the annihilators `F = T` of each variable.
pub fn dual_element(ctx: &mut Context, f: &[Poly], opts: &DualElementOptions) -> Result<DualElement> {
    if f.is_empty() {
        return Err(Error::usage("system has no generators"));
    }
    let n = ctx.n();
    let s = f.len();
    let gb = groebner(f, opts.order);
    let qb = quotient_basis(&gb, &ctx.x)?;
    let mut annihilators = Vec::with_capacity(n);
    let mut factors = Vec::with_capacity(n);
    for j in 0..n {
        let a = charpoly_t(&gb, &qb, ctx.x[j], opts.mode)?;
        let l = match &opts.initials {
            Some(all) => {
                let init = all
                    .get(j)
                    .ok_or_else(|| Error::usage(format!("missing initial values for variable {}", j + 1)))?;
                recurrent_functional(&a.poly, ctx.x[j], init.clone())?
            }
            None => canonical_functional(&a.poly, ctx.x[j])?,
        };
        factors.push(l);
        annihilators.push(a);
    }
    let g: Vec<Vec<Poly>> = (0..s)
        .map(|i| annihilators.iter().map(|a| a.cofactors[i].clone()).collect())
        .collect();

    let fx = ctx.odd("fx", s);
    let bx = ctx.odd("Fx", n);
    let oddrow: Vec<Element> = (0..n).map(|j| -Element::primal(bx, j)).collect();
    let full = drop_family(bx, &bordered_det(&g, &oddrow, fx)?);
    let short = bordered_det(&g, &vec![Element::zero(); n], fx)?;
    if full != short {
        return Err(Error::ContractViolation("bordered and shorthand dual elements disagree".into()));
    }
    let e = FunctionalElement::new(Arc::new(ProductFunctional::new(factors)), full);
    let ba = BoundaryAssignment::new().dual(fx, f.to_vec());
    let cocycle = e.boundary(&ba)?.is_zero();
    Ok(DualElement {
        e,
        certificate: Certificate {
            groebner: gb,
            quotient: qb,
            annihilators,
            g,
        },
        cocycle,
    })
}

/// The pairing together with its verdict against `1`.
#[derive(Debug, Clone)]
pub struct Pairing {
    pub value: Element,
    pub report: IdentityReport,
}

/// `⊤_y ⊤_f̂y det‖[∇f(x,y); f̂_x − f̂_y]‖ e(y_*, f̂^y_*)`, compared with `1` exactly and, failing
/// that, up to a boundary of commuting degree at most `bound` (default: the pairing's degree
/// plus `Σ_j deg T_j`).
pub fn pair_transgression(ctx: &mut Context, f: &[Poly], de: &DualElement, bound: Option<u32>) -> Result<Pairing> {
    let s = f.len();
    let fx = ctx.odd("fx", s);
    let fy = ctx.odd("fy", s);
    let tr = ctx.transgression(&[(f, Some(fx), Some(fy))])?;
    let e_y = de.e.rename(&ctx.x_to_y(), fx, fy);
    let value = functional_eval(&e_y, &tr, &[fy]);
    let instance = format!("f = ({})", crate::koszul::render_list(ctx, f));
    let status = if value.is_one() {
        Status::Equal
    } else {
        let extra: u32 = de.certificate.annihilators.iter().map(|a| a.degree() as u32).sum();
        let bound = bound.unwrap_or(value.max_poly_degree() + extra);
        let ba = BoundaryAssignment::new().primal(fx, f.to_vec());
        match homotopy_witness(&value, &Element::one(), &ba, bound)? {
            WitnessOutcome::Found(w) => Status::Homotopic {
                witness: w.render(&ctx.registry),
            },
            WitnessOutcome::NotFound => Status::NotFound { bound },
        }
    };
    Ok(Pairing {
        value,
        report: IdentityReport::new("theorem4.pairing", instance, status),
    })
}
