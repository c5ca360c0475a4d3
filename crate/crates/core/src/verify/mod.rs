//! Randomized and pinned verification suites behind `koszulkit verify`.

mod random;

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::context::Context;
use crate::dual_element::{
    canonical_functional, dual_element, pair_transgression, theorem3_compare, DualElementOptions, FunctionalElement,
    ProductFunctional,
};
use crate::error::Result;
use crate::grassmann::{
    bordered_det, bot_contract, dual_full_product, exp_substitution, top_contract, wedge_all, Element,
};
use crate::koszul::{
    boundary, render_list, verify_theorem2, BoundaryAssignment, ComplexElement, IdentityReport, MapKind, Space, Status,
    Tagged, Theorem1,
};
use crate::quotient::{eval_poly_at, is_zero_matrix, mul_matrix};
use crate::ring::{Poly, Registry};

pub use random::{element as random_element, nonzero_poly as random_nonzero_poly, poly as random_poly, rational as random_rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Lemma1,
    Lemma2,
    Lemma3,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Lemma1,
        Suite::Lemma2,
        Suite::Lemma3,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Thm4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Lemma1 => "lemma1",
            Suite::Lemma2 => "lemma2",
            Suite::Lemma3 => "lemma3",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
        }
    }

    /// Default dimension caps `(n, s, t)`, degree cap and instance count.
    fn defaults(self) -> (usize, usize, usize, u32, usize) {
        match self {
            Suite::Lemma1 => (3, 3, 3, 0, 25),
            Suite::Lemma2 => (0, 3, 3, 0, 25),
            Suite::Lemma3 => (3, 3, 0, 3, 25),
            Suite::Thm1 => (2, 2, 2, 2, 50),
            Suite::Thm2 => (2, 2, 2, 2, 25),
            Suite::Thm3 => (2, 2, 2, 2, 10),
            Suite::Thm4 => (2, 2, 0, 2, 0),
        }
    }
}

/// Caps supplied on the command line; unset fields fall back to each suite's defaults.
#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteParams {
    pub n: Option<usize>,
    pub s: Option<usize>,
    pub t: Option<usize>,
    pub deg: Option<u32>,
    pub instances: Option<usize>,
    pub seed: u64,
    pub degree_bound: Option<u32>,
}

/// A polynomial system supplied by the user instead of generated instances.
#[derive(Debug, Clone)]
pub struct System {
    pub ctx: Context,
    pub f: Vec<Poly>,
    pub big: Option<Vec<Poly>>,
    pub g: Option<Vec<Vec<Poly>>>,
}

/// One identity check with the size used to pick the smallest failing instance.
#[derive(Debug, Clone, Serialize)]
pub struct Checked {
    #[serde(flatten)]
    pub report: IdentityReport,
    #[serde(skip)]
    pub dimension: usize,
    #[serde(skip)]
    pub degree: u32,
}

impl Checked {
    fn new(report: IdentityReport, dimension: usize, degree: u32) -> Self {
        Checked {
            report,
            dimension,
            degree,
        }
    }
}

struct Resolved {
    n: usize,
    s: usize,
    t: usize,
    deg: u32,
    instances: usize,
    rng: ChaCha8Rng,
    degree_bound: Option<u32>,
}

fn resolve(suite: Suite, p: &SuiteParams) -> Resolved {
    let (n, s, t, deg, instances) = suite.defaults();
    // distinct stream per suite so `verify all` matches the individual runs
    let rng = ChaCha8Rng::seed_from_u64(p.seed ^ ((suite as u64 + 1) << 56));
    Resolved {
        n: p.n.unwrap_or(n),
        s: p.s.unwrap_or(s),
        t: p.t.unwrap_or(t),
        deg: p.deg.unwrap_or(deg),
        instances: p.instances.unwrap_or(instances),
        rng,
        degree_bound: p.degree_bound,
    }
}

/// Runs one suite. `system` replaces generated instances for the theorem suites.
pub fn run_suite(suite: Suite, params: &SuiteParams, system: Option<&System>, timings: bool) -> Result<Vec<Checked>> {
    let mut r = resolve(suite, params);
    let mut out = match suite {
        Suite::Lemma1 => lemma1(&mut r)?,
        Suite::Lemma2 => lemma2(&mut r)?,
        Suite::Lemma3 => lemma3(&mut r)?,
        Suite::Thm1 => thm1(&mut r)?,
        Suite::Thm2 => thm2(&mut r, system)?,
        Suite::Thm3 => thm3(&mut r, system, timings)?,
        Suite::Thm4 => thm4(&mut r, system, timings)?,
    };
    if !timings {
        for c in &mut out {
            c.report.elapsed_ms = None;
        }
    }
    Ok(out)
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_millis() as u64))
}

fn compare(name: &str, instance: String, lhs: &Element, rhs: &Element, reg: &Registry) -> IdentityReport {
    let diff = lhs - rhs;
    IdentityReport::compare(name, instance, diff.is_zero(), || diff.render(reg))
}

fn odd_registry(names: &[(&str, usize)]) -> Result<(Registry, Vec<crate::ring::OddFamily>)> {
    let mut reg = Registry::new();
    let fams = names
        .iter()
        .map(|(n, a)| reg.add_odd(n, (*a).max(1)))
        .collect::<Result<_>>()?;
    Ok((reg, fams))
}

/// `⊥_f̂ det‖f̂_*‖ det‖f̂a + ĝb‖` against the primed-copy route
/// `⊤_f̂' ⊤_ĝ' exp(ĝ ĝ'_*) det‖f̂'_*‖ det‖f̂'a + ĝ'b‖ exp(f̂' f̂_*)`.
fn lemma1(r: &mut Resolved) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    for n in 1..=r.n {
        for s in 1..=r.s {
            for t in 1..=r.t {
                let (reg, fams) = odd_registry(&[("f", s), ("g", t), ("f'", s), ("g'", t)])?;
                let (f, g, fp, gp) = (fams[0], fams[1], fams[2], fams[3]);
                for k in 0..r.instances {
                    let a = random::rational_matrix(&mut r.rng, s, n);
                    let b = random::rational_matrix(&mut r.rng, t, n);
                    let col = |m: &Vec<Vec<Poly>>, j: usize| -> Vec<Poly> { m.iter().map(|row| row[j].clone()).collect() };
                    let oddrow: Vec<Element> = (0..n).map(|j| Element::linear(g, &col(&b, j))).collect();
                    let lhs = bordered_det(&a, &oddrow, f)?;

                    let columns: Vec<Element> = (0..n)
                        .map(|j| &Element::linear(fp, &col(&a, j)) + &Element::linear(gp, &col(&b, j)))
                        .collect();
                    let g_imgs: Vec<Element> = (0..t).map(|j| Element::primal(g, j)).collect();
                    let f_imgs: Vec<Element> = (0..s).map(|i| Element::primal(fp, i)).collect();
                    let body = wedge_all(&[
                        exp_substitution(gp, &g_imgs),
                        dual_full_product(fp, s),
                        wedge_all(&columns),
                        exp_substitution(f, &f_imgs),
                    ]);
                    let rhs = top_contract(gp, &top_contract(fp, &body));
                    let instance = format!("n={n} s={s} t={t} #{k}");
                    out.push(Checked::new(compare("lemma1", instance, &lhs, &rhs, &reg), n + s + t, 0));
                }
            }
        }
    }
    Ok(out)
}

/// `⊥_f̂ det‖f̂_*‖ det‖f̂ − ĝb‖ = exp(ĝb f̂_*)` and `⊤_f̂ det‖f̂_*‖ det‖f̂ − ĝb‖ = 1`.
fn lemma2(r: &mut Resolved) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    for s in 1..=r.s {
        for t in 1..=r.t {
            let (reg, fams) = odd_registry(&[("f", s), ("g", t)])?;
            let (f, g) = (fams[0], fams[1]);
            for k in 0..r.instances {
                let b = random::rational_matrix(&mut r.rng, t, s);
                let gb: Vec<Element> = (0..s)
                    .map(|i| Element::linear(g, &b.iter().map(|row| row[i].clone()).collect::<Vec<_>>()))
                    .collect();
                let rows: Vec<Element> = (0..s).map(|i| &Element::primal(f, i) - &gb[i]).collect();
                let body = &dual_full_product(f, s) * &wedge_all(&rows);
                let instance = format!("s={s} t={t} #{k}");
                out.push(Checked::new(
                    compare("lemma2.1", instance.clone(), &bot_contract(f, &body), &exp_substitution(f, &gb), &reg),
                    s + t,
                    0,
                ));
                out.push(Checked::new(
                    compare("lemma2.2", instance, &top_contract(f, &body), &Element::one(), &reg),
                    s + t,
                    0,
                ));
            }
        }
    }
    Ok(out)
}

/// `∂[x^0 det‖f̂^x_*‖] = 0` on the dual side.
fn lemma3(r: &mut Resolved) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    for n in 1..=r.n {
        for s in 1..=r.s {
            let mut ctx = Context::new(n)?;
            let fx = ctx.odd("fx", s);
            for k in 0..r.instances {
                let f: Vec<Poly> = (0..s).map(|_| random::poly(&mut r.rng, &ctx.x, r.deg)).collect();
                let ba = BoundaryAssignment::new().dual(fx, f.clone());
                let d = boundary(&ba, &dual_full_product(fx, s))?;
                let instance = format!("n={n} s={s} #{k} f = ({})", render_list(&ctx, &f));
                out.push(Checked::new(
                    compare("lemma3", instance, &d, &Element::zero(), &ctx.registry),
                    n + s,
                    r.deg,
                ));
            }
        }
    }
    Ok(out)
}

/// Kernel closedness and the chain-map property of all four maps.
fn thm1(r: &mut Resolved) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    for k in 0..r.instances {
        let n = r.rng.gen_range(1..=r.n.max(1));
        let s = r.rng.gen_range(1..=r.s.max(1));
        let t = r.rng.gen_range(1..=r.t.max(1));
        let mut ctx = Context::new(n)?;
        let setup = Theorem1 {
            f: ctx.odd("fx", s),
            f_prime: ctx.odd("fx'", s),
            big: ctx.odd("Fx", t),
            big_prime: ctx.odd("Fx'", t),
            fpolys: (0..s).map(|_| random::poly(&mut r.rng, &ctx.x, r.deg)).collect(),
            bigpolys: (0..t).map(|_| random::poly(&mut r.rng, &ctx.x, r.deg)).collect(),
        };
        let dim = n + s + t;
        let instance = format!(
            "n={n} s={s} t={t} #{k} f = ({}), F = ({})",
            render_list(&ctx, &setup.fpolys),
            render_list(&ctx, &setup.bigpolys)
        );
        let (k1, k2) = setup.kernels();
        let (ba1, ba2) = setup.kernel_assignments();
        let reg = ctx.registry.clone();
        out.push(Checked::new(
            compare("theorem1.kernel_det", instance.clone(), &boundary(&ba1, &k1)?, &Element::zero(), &reg),
            dim,
            r.deg,
        ));
        out.push(Checked::new(
            compare("theorem1.kernel_unit", instance.clone(), &boundary(&ba2, &k2)?, &Element::zero(), &reg),
            dim,
            r.deg,
        ));
        let l = Arc::new(ProductFunctional::new(
            ctx.x
                .iter()
                .map(|&v| canonical_functional(&Poly::var(v).pow(2), v))
                .collect::<Result<_>>()?,
        ));
        for kind in MapKind::ALL {
            let space = kind.domain();
            let (fam_gens, dual) = match space {
                Space::Primal => (random::gens_of(setup.f, s, false), false),
                Space::PrimalExtended => {
                    let mut g = random::gens_of(setup.f, s, false);
                    g.extend(random::gens_of(setup.big, t, false));
                    (g, false)
                }
                Space::Dual => (random::gens_of(setup.f, s, true), true),
                Space::DualExtended => {
                    let mut g = random::gens_of(setup.f, s, true);
                    g.extend(random::gens_of(setup.big, t, true));
                    (g, true)
                }
            };
            let e = random::element(&mut r.rng, &fam_gens, &ctx.x, r.deg, 3);
            let value = if dual {
                ComplexElement::Dual(FunctionalElement::new(Arc::clone(&l), e))
            } else {
                ComplexElement::Primal(e)
            };
            let c = Tagged { space, value };
            let via_kernel = setup.apply(kind, &c)?;
            let direct = setup.apply_direct(kind, &c)?;
            let dc = Tagged {
                space,
                value: c.value.boundary(&setup.assignment(space))?,
            };
            let lhs = via_kernel.value.boundary(&setup.assignment(kind.codomain()))?;
            let rhs = setup.apply(kind, &dc)?.value.element().scale(&setup.commutation_sign(kind));
            let kernel_diff = via_kernel.value.element() - direct.value.element();
            let report = if !kernel_diff.is_zero() {
                IdentityReport::new(
                    format!("theorem1.{}", kind.name()),
                    instance.clone(),
                    Status::Failed {
                        diff: format!("kernel form − direct form = {}", kernel_diff.render(&reg)),
                    },
                )
            } else {
                compare(&format!("theorem1.{}", kind.name()), instance.clone(), lhs.element(), &rhs, &reg)
            };
            out.push(Checked::new(report, dim, r.deg));
        }
    }
    Ok(out)
}

fn thm2(r: &mut Resolved, system: Option<&System>) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    let mut run = |ctx: &mut Context, f: &[Poly], big: &[Poly], deg: u32| -> Result<()> {
        let dim = ctx.n() + f.len() + big.len();
        for rep in verify_theorem2(ctx, f, big)? {
            out.push(Checked::new(rep, dim, deg));
        }
        Ok(())
    };
    if let Some(sys) = system {
        let mut ctx = sys.ctx.clone();
        let big = sys.big.clone().unwrap_or_default();
        let deg = sys.f.iter().chain(&big).map(Poly::total_degree).max().unwrap_or(0);
        run(&mut ctx, &sys.f, &big, deg)?;
        return Ok(out);
    }
    // pinned: f = (x), F = (x); f = (x²), F = (x³); F empty
    let mut ctx = Context::new(1)?;
    let x = ctx.xv(0);
    run(&mut ctx, std::slice::from_ref(&x), std::slice::from_ref(&x), 1)?;
    run(&mut ctx, &[x.pow(2)], &[x.pow(3)], 3)?;
    run(&mut ctx, &[x.pow(2)], &[], 2)?;
    for _ in 0..r.instances {
        let n = r.rng.gen_range(1..=r.n.max(1));
        let s = r.rng.gen_range(1..=r.s.max(1));
        let t = r.rng.gen_range(0..=r.t);
        let mut ctx = Context::new(n)?;
        let f: Vec<Poly> = (0..s).map(|_| random::poly(&mut r.rng, &ctx.x, r.deg)).collect();
        let big: Vec<Poly> = (0..t).map(|_| random::poly(&mut r.rng, &ctx.x, r.deg)).collect();
        run(&mut ctx, &f, &big, r.deg)?;
    }
    Ok(out)
}

type Pinned3 = (Context, Vec<Poly>, Vec<Poly>, Vec<Vec<Poly>>);

/// Pinned systems `(f, F, G)` for the Theorem 3 comparison, over `x` or `x1, x2`.
fn thm3_pinned() -> Result<Vec<Pinned3>> {
    let c1 = Context::new(1)?;
    let x = c1.xv(0);
    let c2 = Context::new(2)?;
    let (x1, x2) = (c2.xv(0), c2.xv(1));
    Ok(vec![
        (c1.clone(), vec![x.clone()], vec![x.pow(2)], vec![vec![x.clone()]]),
        (
            c2,
            vec![x1.clone(), x2.clone()],
            vec![x1.pow(2), x2.pow(2)],
            vec![vec![x1.clone(), Poly::zero()], vec![Poly::zero(), x2.clone()]],
        ),
        (c1, vec![x.pow(2)], vec![x.pow(4)], vec![vec![x.pow(2)]]),
    ])
}

fn thm3(r: &mut Resolved, system: Option<&System>, timings: bool) -> Result<Vec<Checked>> {
    let mut out = Vec::new();
    let bound = r.degree_bound;
    let mut run = |ctx: &mut Context, f: &[Poly], big: &[Poly], g: &[Vec<Poly>]| -> Result<()> {
        let dim = ctx.n() + f.len() + big.len();
        let deg = big.iter().map(Poly::total_degree).max().unwrap_or(0);
        let (reports, ms) = timed(|| theorem3_compare(ctx, f, big, g, bound))?;
        for mut rep in reports {
            if timings {
                rep.elapsed_ms = Some(ms);
            }
            out.push(Checked::new(rep, dim, deg));
        }
        Ok(())
    };
    if let Some(sys) = system {
        let mut ctx = sys.ctx.clone();
        let (big, g) = match (&sys.big, &sys.g) {
            (Some(b), Some(g)) => (b.clone(), g.clone()),
            _ => return Err(crate::Error::Usage("theorem 3 needs F and G in the system file".into())),
        };
        run(&mut ctx, &sys.f, &big, &g)?;
        return Ok(out);
    }
    for (mut ctx, f, big, g) in thm3_pinned()? {
        run(&mut ctx, &f, &big, &g)?;
    }
    for _ in 0..r.instances {
        let n = r.rng.gen_range(1..=r.n.max(1));
        let s = r.rng.gen_range(1..=r.s.max(1));
        let t = r.rng.gen_range(1..=r.t.max(1));
        let mut ctx = Context::new(n)?;
        let fdeg = r.deg.div_ceil(2).max(1);
        let gdeg = r.deg.saturating_sub(fdeg);
        let f: Vec<Poly> = (0..s).map(|_| random::nonzero_poly(&mut r.rng, &ctx.x, fdeg)).collect();
        let g: Vec<Vec<Poly>> = (0..s)
            .map(|_| (0..t).map(|_| random::poly(&mut r.rng, &ctx.x, gdeg)).collect())
            .collect();
        let big: Vec<Poly> = (0..t)
            .map(|j| f.iter().zip(&g).fold(Poly::zero(), |acc, (fi, row)| &acc + &(fi * &row[j])))
            .collect();
        run(&mut ctx, &f, &big, &g)?;
    }
    Ok(out)
}

/// The pinned zero-dimensional systems of the Theorem 4 suite.
pub fn thm4_pinned() -> Result<Vec<(Context, Vec<Poly>)>> {
    let c1 = Context::new(1)?;
    let x = c1.xv(0);
    let c2 = Context::new(2)?;
    let (x1, x2) = (c2.xv(0), c2.xv(1));
    Ok(vec![
        (c1.clone(), vec![x.clone()]),
        (c1.clone(), vec![x.pow(2)]),
        (c1, vec![x.clone(), x.pow(2)]),
        (c2.clone(), vec![x1.clone(), x2.clone()]),
        (c2, vec![&x1.pow(2) - &x2, x2.pow(2)]),
    ])
}

/// Dual element construction, cocycle test, cofactor and Cayley–Hamilton checks, and the
/// transgression pairing for one system.
pub fn theorem4_checks(ctx: &mut Context, f: &[Poly], bound: Option<u32>, timings: bool) -> Result<Vec<Checked>> {
    let instance = format!("f = ({})", render_list(ctx, f));
    let dim = ctx.n() + f.len();
    let deg = f.iter().map(Poly::total_degree).max().unwrap_or(0);
    let ((de, pairing), ms) = timed(|| {
        let de = dual_element(ctx, f, &DualElementOptions::default())?;
        let pairing = pair_transgression(ctx, f, &de, bound)?;
        Ok((de, pairing))
    })?;
    let flag = |name: &str, ok: bool, what: &str| {
        let status = if ok {
            Status::Equal
        } else {
            Status::Failed { diff: what.to_string() }
        };
        Checked::new(IdentityReport::new(name, instance.clone(), status), dim, deg)
    };
    let mut ch = true;
    for a in &de.certificate.annihilators {
        let m = mul_matrix(&de.certificate.groebner, &de.certificate.quotient, a.var)?;
        ch &= is_zero_matrix(&eval_poly_at(&a.coeffs, &m));
    }
    let mut out = vec![
        flag("theorem4.cocycle", de.cocycle, "boundary of e is a nonzero functional"),
        flag(
            "theorem4.cofactors",
            de.certificate.cofactors_hold(f),
            "T_j differs from Σ_i f_i G^i_j",
        ),
        flag("theorem4.cayley_hamilton", ch, "T_j(M_j) is nonzero"),
    ];
    let mut rep = pairing.report;
    if timings {
        rep.elapsed_ms = Some(ms);
    }
    out.push(Checked::new(rep, dim, deg));
    Ok(out)
}

fn thm4(r: &mut Resolved, system: Option<&System>, timings: bool) -> Result<Vec<Checked>> {
    if let Some(sys) = system {
        let mut ctx = sys.ctx.clone();
        return theorem4_checks(&mut ctx, &sys.f, r.degree_bound, timings);
    }
    let mut out = Vec::new();
    for (mut ctx, f) in thm4_pinned()? {
        out.extend(theorem4_checks(&mut ctx, &f, r.degree_bound, timings)?);
    }
    Ok(out)
}
