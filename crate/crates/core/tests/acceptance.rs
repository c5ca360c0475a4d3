//! Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use koszulkit::dual_element::{dual_element, pair_transgression, theorem3_compare, DualElementOptions};
use koszulkit::grassmann::{Element, Gen};
use koszulkit::koszul::{boundary, BoundaryAssignment, Status};
use koszulkit::ring::{divided_differences, scalar, Poly};
use koszulkit::verify::{random_element, random_poly, run_suite, theorem4_checks, thm4_pinned, Checked, Suite, SuiteParams};
use koszulkit::Context;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Option<u64>);

const SEED: u64 = 20240917;

fn params() -> SuiteParams {
    SuiteParams {
        seed: SEED,
        ..Default::default()
    }
}

fn suite(s: Suite) -> Result<Vec<Checked>, String> {
    run_suite(s, &params(), None, false).map_err(|e| e.to_string())
}

fn all_equal(checks: &[Checked]) -> Result<(), String> {
    match checks.iter().find(|c| c.report.status != Status::Equal) {
        None => Ok(()),
        Some(c) => Err(format!("{} on {}: {:?}", c.report.identity, c.report.instance, c.report.status)),
    }
}

fn count(checks: &[Checked], identity: &str) -> usize {
    checks.iter().filter(|c| c.report.identity == identity).count()
}

fn at_least(what: &str, got: usize, want: usize) -> Result<(), String> {
    if got >= want {
        Ok(())
    } else {
        Err(format!("only {got} {what}, need {want}"))
    }
}

fn lemma1() -> Outcome {
    let c = suite(Suite::Lemma1)?;
    all_equal(&c)?;
    at_least("instances", c.len(), 27 * 25)?;
    Ok(format!("{} exact instances over 27 shapes", c.len()))
}

fn lemma2() -> Outcome {
    let c = suite(Suite::Lemma2)?;
    all_equal(&c)?;
    at_least("lemma2.1 instances", count(&c, "lemma2.1"), 9 * 25)?;
    at_least("lemma2.2 instances", count(&c, "lemma2.2"), 9 * 25)?;
    Ok(format!("{} exact checks; 2(2) compared against +1", c.len()))
}

fn lemma3() -> Outcome {
    let c = suite(Suite::Lemma3)?;
    all_equal(&c)?;
    at_least("instances", c.len(), 9)?;
    Ok(format!("{} random systems", c.len()))
}

fn theorem1() -> Outcome {
    let c = suite(Suite::Thm1)?;
    all_equal(&c)?;
    for id in ["theorem1.kernel_det", "theorem1.kernel_unit"] {
        at_least(id, count(&c, id), 1)?;
    }
    for map in ["mult_dual_det", "project_dual_det", "embed_unit", "project_unit"] {
        at_least(map, count(&c, &format!("theorem1.{map}")), 50)?;
    }
    Ok(format!("{} checks, 50 random chains per map", c.len()))
}

fn theorem2() -> Outcome {
    let c = suite(Suite::Thm2)?;
    all_equal(&c)?;
    at_least("identity 1) instances", count(&c, "theorem2.1"), 25)?;
    at_least("identity 2) instances", count(&c, "theorem2.2"), 25)?;
    Ok(format!("{} exact checks", c.len()))
}

fn theorem3() -> Outcome {
    let c = suite(Suite::Thm3)?;
    if let Some(bad) = c.iter().find(|c| matches!(c.report.status, Status::Failed { .. })) {
        return Err(format!("{} on {} failed", bad.report.identity, bad.report.instance));
    }
    for id in ["theorem3.equality", "theorem3.cocycle_transgression", "theorem3.cocycle_bordered"] {
        if let Some(bad) = c.iter().find(|c| c.report.identity == id && c.report.status != Status::Equal) {
            return Err(format!("{id} not exact on {}", bad.report.instance));
        }
    }
    let instances: BTreeSet<&str> = c.iter().map(|c| c.report.instance.as_str()).collect();
    at_least("instances", instances.len(), 10)?;

    let ctx = Context::new(1).map_err(|e| e.to_string())?;
    let x = ctx.xv(0);
    let mut pinned = vec![
        (ctx.clone(), vec![x.clone()], vec![x.pow(2)], vec![vec![x.clone()]]),
        (ctx.clone(), vec![x.pow(2)], vec![x.pow(4)], vec![vec![x.pow(2)]]),
    ];
    let c2 = Context::new(2).map_err(|e| e.to_string())?;
    let (x1, x2) = (c2.xv(0), c2.xv(1));
    pinned.push((
        c2,
        vec![x1.clone(), x2.clone()],
        vec![x1.pow(2), x2.pow(2)],
        vec![vec![x1, Poly::zero()], vec![Poly::zero(), x2]],
    ));
    for (c, f, big, g) in &mut pinned {
        for r in theorem3_compare(c, f, big, g, None).map_err(|e| e.to_string())? {
            if !r.passed() {
                return Err(format!("pinned {}: {} gave {:?}", r.instance, r.identity, r.status));
            }
        }
    }
    let not_found = c.iter().filter(|c| matches!(c.report.status, Status::NotFound { .. })).count();
    Ok(format!("{} instances, {} not-found among random, pinned set fully witnessed", instances.len(), not_found))
}

fn theorem4() -> Outcome {
    let mut lines = 0;
    for (k, (mut ctx, f)) in thm4_pinned().map_err(|e| e.to_string())?.into_iter().enumerate() {
        let checks = theorem4_checks(&mut ctx, &f, None, false).map_err(|e| e.to_string())?;
        for c in &checks {
            let ok = match c.report.identity.as_str() {
                "theorem4.cocycle" => c.report.status == Status::Equal,
                "theorem4.pairing" => c.report.passed(),
                _ => true,
            };
            if !ok {
                return Err(format!("{} on {}: {:?}", c.report.identity, c.report.instance, c.report.status));
            }
        }
        // f = (x), (x²), (x1, x2) are the diagonal systems
        if matches!(k, 0 | 1 | 3) {
            let de = dual_element(&mut ctx, &f, &DualElementOptions::default()).map_err(|e| e.to_string())?;
            let p = pair_transgression(&mut ctx, &f, &de, None).map_err(|e| e.to_string())?;
            if p.report.status != Status::Equal || !p.value.is_one() {
                return Err(format!("diagonal {} paired to {:?}", p.report.instance, p.report.status));
            }
        }
        lines += 1;
    }
    Ok(format!("{lines} systems; diagonal ones pair to exactly 1"))
}

fn quotient_engine() -> Outcome {
    let mut n = 0;
    for (mut ctx, f) in thm4_pinned().map_err(|e| e.to_string())? {
        let checks = theorem4_checks(&mut ctx, &f, None, false).map_err(|e| e.to_string())?;
        for c in &checks {
            if matches!(c.report.identity.as_str(), "theorem4.cofactors" | "theorem4.cayley_hamilton") {
                if c.report.status != Status::Equal {
                    return Err(format!("{} on {}", c.report.identity, c.report.instance));
                }
                n += 1;
            }
        }
    }
    Ok(format!("{n} cofactor and Cayley–Hamilton checks exact"))
}

fn structural() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut ctx = Context::new(3).map_err(|e| e.to_string())?;
    let a = ctx.odd("a", 3);
    let b = ctx.odd("b", 3);
    let mut pool: Vec<Gen> = (0..3).map(|i| Gen::primal(a, i)).collect();
    pool.extend((0..3).map(|i| Gen::dual(b, i)));
    for k in 0..100 {
        let ba = BoundaryAssignment::new()
            .primal(a, (0..3).map(|_| random_poly(&mut rng, &ctx.x, 2)).collect())
            .dual(b, (0..3).map(|_| random_poly(&mut rng, &ctx.x, 2)).collect());
        let e = random_element(&mut rng, &pool, &ctx.x, 2, 4);
        let d = boundary(&ba, &e).map_err(|e| e.to_string())?;
        if !boundary(&ba, &d).map_err(|e| e.to_string())?.is_zero() {
            return Err(format!("∂∂ ≠ 0 on element #{k}"));
        }
    }
    let mut all: Vec<Gen> = pool.clone();
    all.extend((0..3).map(|i| Gen::dual(a, i)));
    let homogeneous = |rng: &mut ChaCha8Rng, deg: usize| -> Element {
        random_element(rng, &all, &ctx.x, 1, deg).filter(|w| w.len() == deg)
    };
    for k in 0..200 {
        let (p, q) = (rng.gen_range(0..4), rng.gen_range(0..4));
        let (x, y) = (homogeneous(&mut rng, p), homogeneous(&mut rng, q));
        if &x * &y != (&y * &x).scale(&scalar::sign(p * q)) {
            return Err(format!("graded commutativity fails on pair #{k}"));
        }
        let z = random_element(&mut rng, &all, &ctx.x, 1, 3);
        if &(&x * &y) * &z != &x * &(&y * &z) {
            return Err(format!("associativity fails on triple #{k}"));
        }
    }
    for k in 0..100 {
        let f = random_poly(&mut rng, &ctx.x, 4);
        let d = divided_differences(&f, &ctx.x, &ctx.y).map_err(|e| e.to_string())?;
        let lhs = (0..3).fold(Poly::zero(), |acc, j| &acc + &(&(&ctx.xv(j) - &ctx.yv(j)) * &d[j]));
        if lhs != &f - &ctx.at_y(&f) {
            return Err(format!("divided-difference identity fails on polynomial #{k}"));
        }
    }
    Ok("100 ∂∂, 200 wedge triples, 100 divided differences".into())
}

fn determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_koszulkit"))
            .args(["verify", "all", "--seed", "42"])
            .env_remove("KOSZULKIT_SEED")
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if a.status.code() != Some(0) {
        return Err(format!("exit status {:?}", a.status.code()));
    }
    if a.stdout != b.stdout {
        return Err("reports differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Lemma 1 exact for n,s,t ≤ 3", lemma1, Some(10)),
        ("Lemma 2 (1) and (2) exact for s,t ≤ 3", lemma2, Some(5)),
        ("Lemma 3 dual product is closed", lemma3, Some(5)),
        ("Theorem 1 kernels closed, maps are chain maps", theorem1, Some(30)),
        ("Theorem 2 identities 1) and 2)", theorem2, Some(60)),
        ("Theorem 3 equality, cocycles, homotopy", theorem3, Some(120)),
        ("Theorem 4 dual element and pairing", theorem4, Some(60)),
        ("Quotient cofactors and Cayley–Hamilton", quotient_engine, Some(10)),
        ("Structural properties", structural, Some(10)),
        ("Determinism of verify all --seed 42", determinism, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(msg), Some(s)) if elapsed > Duration::from_secs(*s) => {
                Err(format!("{msg}, but took longer than {s} s"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(msg) => println!("PASS  {:>2}. {name} ({:.2} s): {msg}", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({:.2} s): {msg}", i + 1, elapsed.as_secs_f64());
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
