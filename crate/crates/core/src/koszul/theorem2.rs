use super::report::IdentityReport;
use crate::context::Context;
use crate::error::Result;
use crate::grassmann::{dual_full_product, exp_substitution, top_contract, Element};
use crate::ring::{scalar, Poly};

/// Both sides of one identity, for callers that want the elements themselves.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides {
    pub lhs: Element,
    pub rhs: Element,
}

fn primal_images(ctx: &mut Context, name: &str, arity: usize) -> Vec<Element> {
    let fam = ctx.odd(name, arity);
    (0..arity).map(|i| Element::primal(fam, i)).collect()
}

/// Identity 1): `⊤_f̂y ⊤_F̂y det‖[∇F ∇f; F̂x−F̂y f̂x−f̂y]‖ y^0 det‖f̂^y_*‖ exp(F̂'_y F̂^y_*)`
/// equals `⊤_F̂'x exp(F̂_x F̂'^x_*) det‖[∇F; F̂'x−F̂'y]‖`.
pub fn theorem2_identity1(ctx: &mut Context, f: &[Poly], big: &[Poly]) -> Result<Sides> {
    let (s, t) = (f.len(), big.len());
    let fx = ctx.odd("fx", s);
    let fy = ctx.odd("fy", s);
    let bx = ctx.odd("Fx", t);
    let by = ctx.odd("Fy", t);
    let bxp = ctx.odd("Fx'", t);
    let byp = ctx.odd("Fy'", t);

    let tr = ctx.transgression(&[(big, Some(bx), Some(by)), (f, Some(fx), Some(fy))])?;
    let images = primal_images(ctx, "Fy'", t);
    let body = &(&tr * &dual_full_product(fy, s)) * &exp_substitution(by, &images);
    let lhs = top_contract(by, &top_contract(fy, &body));

    let tr_prime = ctx.transgression(&[(big, Some(bxp), Some(byp))])?;
    let images = primal_images(ctx, "Fx", t);
    let rhs = top_contract(bxp, &(&exp_substitution(bxp, &images) * &tr_prime));
    Ok(Sides { lhs, rhs })
}

/// Identity 2): `⊤_f̂y det‖[∇f; f̂x−f̂y]‖ y^0 (F̂'_y)^0 exp(f̂'_y f̂^y_*)` equals
/// `(−1)^{|F||x|} ⊤_F̂'x ⊤_f̂'x x^0 det‖F̂'^x_*‖ exp(f̂_x f̂'^x_*) det‖[∇F ∇f; F̂'x−F̂'y f̂'x−f̂'y]‖`.
pub fn theorem2_identity2(ctx: &mut Context, f: &[Poly], big: &[Poly]) -> Result<Sides> {
    let (s, t, n) = (f.len(), big.len(), ctx.n());
    let fx = ctx.odd("fx", s);
    let fy = ctx.odd("fy", s);
    let fxp = ctx.odd("fx'", s);
    let fyp = ctx.odd("fy'", s);
    let bxp = ctx.odd("Fx'", t);
    let byp = ctx.odd("Fy'", t);

    let tr = ctx.transgression(&[(f, Some(fx), Some(fy))])?;
    let images = primal_images(ctx, "fy'", s);
    let lhs = top_contract(fy, &(&tr * &exp_substitution(fy, &images)));

    let tr_prime = ctx.transgression(&[(big, Some(bxp), Some(byp)), (f, Some(fxp), Some(fyp))])?;
    let images = primal_images(ctx, "fx", s);
    let kernel = &dual_full_product(bxp, t) * &exp_substitution(fxp, &images);
    let body = &kernel * &tr_prime;
    let rhs = top_contract(fxp, &top_contract(bxp, &body)).scale(&scalar::sign(t * n));
    Ok(Sides { lhs, rhs })
}

/// Checks identities 1) and 2) exactly.
pub fn verify_theorem2(ctx: &mut Context, f: &[Poly], big: &[Poly]) -> Result<[IdentityReport; 2]> {
    let instance = format!(
        "f = ({}), F = ({})",
        render_list(ctx, f),
        render_list(ctx, big)
    );
    let one = theorem2_identity1(ctx, f, big)?;
    let two = theorem2_identity2(ctx, f, big)?;
    let reg = &ctx.registry;
    let report = |name: &str, sides: &Sides| {
        let diff = &sides.lhs - &sides.rhs;
        IdentityReport::compare(name, instance.clone(), diff.is_zero(), || diff.render(reg))
    };
    Ok([report("theorem2.1", &one), report("theorem2.2", &two)])
}

pub(crate) fn render_list(ctx: &Context, ps: &[Poly]) -> String {
    ps.iter()
        .map(|p| p.render(&ctx.registry))
        .collect::<Vec<_>>()
        .join(", ")
}
