use std::sync::Arc;

use super::functional::{canonical_functional, FunctionalElement, ProductFunctional};
use crate::context::Context;
use crate::error::{Error, Result};
use crate::grassmann::{bordered_det, drop_family, exp_substitution, top_contract, transgression_det, Element};
use crate::koszul::{boundary, homotopy_witness, render_list, BoundaryAssignment, IdentityReport, Status, WitnessOutcome};
use crate::ring::{Monomial, Poly};

/// Checks, for `F = f G`:
/// (a) `⊤_F̂x exp(f̂_x G F̂^x_*) det‖[∇F; F̂_x−F̂_y]‖ = det‖[∇F; f̂_x G − F̂_y]‖`;
/// (b) that `det‖[∇F; f̂_x G − F̂_y]‖` and `det‖[G(y), f̂^y_*; −F̂_y, 0]‖` are cocycles;
/// (c) that the former is homotopic to `⊤_f̂y det‖[∇f; f̂_x−f̂_y]‖ det‖[G(y), f̂^y_*; −F̂_y, 0]‖`;
/// and, when every `F_j` is a monic polynomial in `x_j` alone, that the functional
/// `⊥_x ⊤_F̂x det‖[G(x), f̂^x_*; −F̂_x, 0]‖ L` built from `F` is a cocycle.
pub fn theorem3_compare(
    ctx: &mut Context,
    f: &[Poly],
    big: &[Poly],
    g: &[Vec<Poly>],
    bound: Option<u32>,
) -> Result<Vec<IdentityReport>> {
    let (s, t, n) = (f.len(), big.len(), ctx.n());
    if g.len() != s || g.iter().any(|row| row.len() != t) {
        return Err(Error::usage(format!("G must be {s} × {t}")));
    }
    for j in 0..t {
        let fg = f.iter().zip(g).fold(Poly::zero(), |acc, (fi, row)| &acc + &(fi * &row[j]));
        if fg != big[j] {
            return Err(Error::Precondition(format!("F_{} differs from (f G)_{}", j + 1, j + 1)));
        }
    }
    let instance = format!(
        "f = ({}), F = ({}), G = [{}]",
        render_list(ctx, f),
        render_list(ctx, big),
        g.iter().map(|row| format!("[{}]", render_list(ctx, row))).collect::<Vec<_>>().join(", ")
    );
    let fx = ctx.odd("fx", s);
    let fy = ctx.odd("fy", s);
    let bx = ctx.odd("Fx", t);
    let by = ctx.odd("Fy", t);
    let u = ctx.odd("u", n);
    let column = |j: usize| -> Vec<Poly> { g.iter().map(|row| row[j].clone()).collect() };

    let mut reports = Vec::new();
    let reg = ctx.registry.clone();

    // (a)
    let tr_big = ctx.transgression(&[(big, Some(bx), Some(by))])?;
    let images: Vec<Element> = (0..t).map(|j| Element::linear(fx, &column(j))).collect();
    let lhs = top_contract(bx, &(&exp_substitution(bx, &images) * &tr_big));
    let mut cols = ctx.columns(big, None, Some(by))?;
    for (j, c) in cols.iter_mut().enumerate() {
        c.odd += &Element::linear(fx, &column(j));
    }
    let mid = transgression_det(&cols, u, n)?;
    let diff = &lhs - &mid;
    reports.push(IdentityReport::compare("theorem3.equality", instance.clone(), diff.is_zero(), || diff.render(&reg)));

    // (b)
    let big_y = ctx.all_at_y(big);
    let f_y = ctx.all_at_y(f);
    let ba_mid = BoundaryAssignment::new().primal(fx, f.to_vec()).primal(by, big_y.clone());
    let d_mid = boundary(&ba_mid, &mid)?;
    reports.push(IdentityReport::compare("theorem3.cocycle_transgression", instance.clone(), d_mid.is_zero(), || {
        d_mid.render(&reg)
    }));
    let g_y: Vec<Vec<Poly>> = g.iter().map(|row| ctx.all_at_y(row)).collect();
    let oddrow: Vec<Element> = (0..t).map(|j| -Element::primal(by, j)).collect();
    let bordered = bordered_det(&g_y, &oddrow, fy)?;
    let ba_b = BoundaryAssignment::new().primal(by, big_y).dual(fy, f_y);
    let d_b = boundary(&ba_b, &bordered)?;
    reports.push(IdentityReport::compare("theorem3.cocycle_bordered", instance.clone(), d_b.is_zero(), || {
        d_b.render(&reg)
    }));

    // (c)
    let tr_f = ctx.transgression(&[(f, Some(fx), Some(fy))])?;
    let rhs = top_contract(fy, &(&tr_f * &bordered));
    let bound = bound.unwrap_or(mid.max_poly_degree().max(rhs.max_poly_degree()) + 4);
    let status = match homotopy_witness(&mid, &rhs, &ba_mid, bound)? {
        WitnessOutcome::Found(w) if w.is_zero() => Status::Equal,
        WitnessOutcome::Found(w) => Status::Homotopic { witness: w.render(&reg) },
        WitnessOutcome::NotFound => Status::NotFound { bound },
    };
    reports.push(IdentityReport::new("theorem3.homotopy", instance.clone(), status));

    // functional corollary
    if let Some(factors) = separable_functionals(ctx, big) {
        let oddrow: Vec<Element> = (0..t).map(|j| -Element::primal(bx, j)).collect();
        let terms = drop_family(bx, &bordered_det(g, &oddrow, fx)?);
        let e = FunctionalElement::new(Arc::new(ProductFunctional::new(factors)), terms);
        let ba = BoundaryAssignment::new().dual(fx, f.to_vec());
        let de = e.boundary(&ba)?;
        let closed = de.is_zero();
        reports.push(IdentityReport::compare("theorem3.functional_cocycle", instance, closed, || {
            de.terms().render(&reg)
        }));
    }
    Ok(reports)
}

/// Canonical functionals `l_j` when `F = (T_1(x_1), …, T_n(x_n))` with each `T_j` monic.
fn separable_functionals(ctx: &Context, big: &[Poly]) -> Option<Vec<crate::dual_element::Functional1D>> {
    if big.len() != ctx.n() {
        return None;
    }
    big.iter()
        .zip(&ctx.x)
        .map(|(p, &v)| {
            let d = p.degree_in(v);
            let univariate = p.vars().iter().all(|&w| w == v);
            let monic = p.coeff(&Monomial::var_pow(v, d)) == num_traits::One::one();
            if d == 0 || !univariate || !monic {
                return None;
            }
            canonical_functional(p, v).ok()
        })
        .collect()
}
