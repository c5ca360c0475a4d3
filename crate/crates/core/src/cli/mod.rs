//! Command-line front end: `verify`, `dual-element`, `pair`, `groebner`.

mod report;
mod system;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::dual_element::{dual_element, pair_transgression, DualElementOptions};
use crate::error::{Error, Result};
use crate::koszul::IdentityReport;
use crate::quotient::{groebner, quotient_basis, AnnihilatorMode};
use crate::ring::{Poly, Registry, Scalar};
use crate::verify::{run_suite, Checked, Suite, SuiteParams};

pub use report::{digest, smallest_failure, Report, Summary};
pub use system::{parse_system, SystemFile, MAX_FILE_BYTES};

/// Environment variable that overrides any `--seed` flag or `seed:` line.
pub const SEED_ENV: &str = "KOSZULKIT_SEED";

#[derive(Debug, Parser)]
#[command(name = "koszulkit", version, about = "Exact Koszul-complex identities and dual elements of polynomial systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lemma1,
    Lemma2,
    Lemma3,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check identities on random and pinned instances.
    Verify {
        suite: SuiteArg,
        /// Cap on the number of commuting variables.
        #[arg(long)]
        n: Option<usize>,
        /// Cap on the number of generators f.
        #[arg(long)]
        s: Option<usize>,
        /// Cap on the number of generators F.
        #[arg(long)]
        t: Option<usize>,
        /// Cap on polynomial degree.
        #[arg(long)]
        deg: Option<u32>,
        /// Random instances per shape.
        #[arg(long)]
        instances: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Commuting-degree bound for homotopy witnesses.
        #[arg(long)]
        degree_bound: Option<u32>,
        /// System file replacing the generated instances (thm2, thm3, thm4).
        #[arg(long)]
        file: Option<PathBuf>,
        /// Include wall-clock timings (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Construct the dual element of a zero-dimensional system and pair it with the transgression.
    DualElement {
        file: PathBuf,
        /// Also write the report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Use minimal polynomials instead of characteristic polynomials.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Evaluate the dual element and the product functional on a polynomial.
    Pair {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Reduced Gröbner basis with cofactors.
    Groebner { file: PathBuf },
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "koszulkit: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) | Error::Parse { .. } | Error::Precondition(_) => 2,
        Error::NotZeroDimensional(_) => 3,
        Error::ContractViolation(_) => 1,
    }
}

fn read_input(path: &Path) -> Result<(Vec<u8>, SystemFile)> {
    let bytes = std::fs::read(path).map_err(|e| Error::usage(format!("cannot read {}: {e}", path.display())))?;
    if bytes.len() > MAX_FILE_BYTES {
        return Err(Error::usage(format!("{} exceeds {} bytes", path.display(), MAX_FILE_BYTES)));
    }
    let text = std::str::from_utf8(&bytes).map_err(|_| Error::usage(format!("{} is not UTF-8", path.display())))?;
    let sf = parse_system(text)?;
    Ok((bytes, sf))
}

fn env_seed() -> Result<Option<u64>> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::usage(format!("{SEED_ENV} must be a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

#[derive(Serialize)]
struct VerifyBody<'a> {
    suites: Vec<&'static str>,
    params: &'a SuiteParams,
    summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    smallest_failure: Option<&'a Checked>,
    reports: &'a [Checked],
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Verify {
            suite,
            n,
            s,
            t,
            deg,
            instances,
            seed,
            degree_bound,
            file,
            timings,
        } => {
            let suites: Vec<Suite> = match suite {
                SuiteArg::Lemma1 => vec![Suite::Lemma1],
                SuiteArg::Lemma2 => vec![Suite::Lemma2],
                SuiteArg::Lemma3 => vec![Suite::Lemma3],
                SuiteArg::Thm1 => vec![Suite::Thm1],
                SuiteArg::Thm2 => vec![Suite::Thm2],
                SuiteArg::Thm3 => vec![Suite::Thm3],
                SuiteArg::Thm4 => vec![Suite::Thm4],
                SuiteArg::All => Suite::ALL.to_vec(),
            };
            let input = match &file {
                Some(path) => {
                    if suites.iter().any(|s| !matches!(s, Suite::Thm2 | Suite::Thm3 | Suite::Thm4)) {
                        return Err(Error::usage("--file applies to thm2, thm3 and thm4 only"));
                    }
                    Some(read_input(path)?)
                }
                None => None,
            };
            let file_seed = input.as_ref().and_then(|(_, sf)| sf.seed);
            let file_bound = input.as_ref().and_then(|(_, sf)| sf.bound);
            let params = SuiteParams {
                n,
                s,
                t,
                deg,
                instances,
                seed: env_seed()?.or(seed).or(file_seed).unwrap_or(0),
                degree_bound: degree_bound.or(file_bound),
            };
            let system = input.as_ref().map(|(_, sf)| &sf.system);
            let mut checks = Vec::new();
            for s in &suites {
                checks.extend(run_suite(*s, &params, system, timings)?);
            }
            let summary = Summary::of(&checks);
            let ok = summary.ok();
            let digest_input = match &input {
                Some((bytes, _)) => bytes.clone(),
                None => serde_json::to_vec(&(&params, suites.iter().map(|s| s.name()).collect::<Vec<_>>()))
                    .expect("params serialize"),
            };
            let body = VerifyBody {
                suites: suites.iter().map(|s| s.name()).collect(),
                params: &params,
                summary,
                smallest_failure: smallest_failure(&checks),
                reports: &checks,
            };
            emit(out, None, &Report::new("verify", &digest_input, body))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::DualElement {
            file,
            out: out_path,
            minimal,
            degree_bound,
        } => {
            let (bytes, sf) = read_input(&file)?;
            let mut ctx = sf.system.ctx.clone();
            let f = &sf.system.f;
            let opts = DualElementOptions {
                order: sf.order,
                mode: if minimal { AnnihilatorMode::Minimal } else { AnnihilatorMode::Characteristic },
                initials: None,
            };
            let de = dual_element(&mut ctx, f, &opts)?;
            let pairing = pair_transgression(&mut ctx, f, &de, degree_bound.or(sf.bound))?;
            let reg = &ctx.registry;
            let cert = CertificateJson {
                order: format!("{:?}", sf.order).to_lowercase(),
                quotient_basis: de
                    .certificate
                    .quotient
                    .monomials
                    .iter()
                    .map(|m| m.render(reg))
                    .collect(),
                annihilators: de
                    .certificate
                    .annihilators
                    .iter()
                    .map(|a| AnnihilatorJson {
                        var: reg.var_name(a.var),
                        t: a.poly.render(reg),
                        cofactors: render_polys(&a.cofactors, reg),
                    })
                    .collect(),
                g: de.certificate.g.iter().map(|row| render_polys(row, reg)).collect(),
                functionals: de
                    .e
                    .functional()
                    .factors()
                    .iter()
                    .map(|l| FunctionalJson {
                        var: reg.var_name(l.var()),
                        initials: l.initials().iter().map(Scalar::to_string).collect(),
                        recurrence: l.recurrence().iter().map(Scalar::to_string).collect(),
                    })
                    .collect(),
                e: de
                    .e
                    .terms()
                    .terms()
                    .map(|(w, m)| TermJson {
                        word: if w.is_empty() { "1".into() } else { w.render(reg) },
                        multiplier: m.render(reg),
                    })
                    .collect(),
                cocycle: de.cocycle,
            };
            let ok = de.cocycle && de.certificate.cofactors_hold(f) && pairing.report.passed();
            let body = DualBody {
                certificate: cert,
                pairing_value: pairing.value.render(reg),
                verdict: pairing.report,
            };
            emit(out, out_path.as_deref(), &Report::new("dual-element", &bytes, body))?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Pair { file, poly } => {
            let (mut bytes, sf) = read_input(&file)?;
            let mut ctx = sf.system.ctx.clone();
            let xs = ctx.x.clone();
            let h = system::parse_at(&poly, 0, &|name: &str| ctx.registry.lookup(name).filter(|v| xs.contains(v)))?;
            let opts = DualElementOptions {
                order: sf.order,
                ..Default::default()
            };
            let de = dual_element(&mut ctx, &sf.system.f, &opts)?;
            let reg = &ctx.registry;
            let l_value = de.e.functional().pair(&h);
            // one value per dual word of e, zeros included
            let e_values = de
                .e
                .terms()
                .terms()
                .map(|(w, m)| TermJson {
                    word: if w.is_empty() { "1".into() } else { w.render(reg) },
                    multiplier: de.e.functional().pair(&(m * &h)).render(reg),
                })
                .collect();
            let body = PairBody {
                poly: h.render(reg),
                l: l_value.render(reg),
                e: e_values,
            };
            bytes.extend_from_slice(poly.as_bytes());
            emit(out, None, &Report::new("pair", &bytes, body))?;
            Ok(0)
        }
        Command::Groebner { file } => {
            let (bytes, sf) = read_input(&file)?;
            let ctx = &sf.system.ctx;
            let reg = &ctx.registry;
            let gb = groebner(&sf.system.f, sf.order);
            let qb = quotient_basis(&gb, &ctx.x);
            let body = GroebnerBody {
                order: format!("{:?}", sf.order).to_lowercase(),
                basis: render_polys(&gb.basis, reg),
                leading: gb.leading_monomials().iter().map(|m| m.render(reg)).collect(),
                cofactors: gb.cofactors.iter().map(|c| render_polys(c, reg)).collect(),
                zero_dimensional: qb.is_ok(),
                quotient_basis: qb.ok().map(|q| q.monomials.iter().map(|m| m.render(reg)).collect()),
            };
            emit(out, None, &Report::new("groebner", &bytes, body))?;
            Ok(0)
        }
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, path: Option<&Path>, report: &Report<T>) -> Result<()> {
    let json = report.to_json();
    if let Some(p) = path {
        std::fs::write(p, &json).map_err(|e| Error::usage(format!("cannot write {}: {e}", p.display())))?;
    }
    out.write_all(json.as_bytes())
        .map_err(|e| Error::usage(format!("cannot write output: {e}")))
}

fn render_polys(ps: &[Poly], reg: &Registry) -> Vec<String> {
    ps.iter().map(|p| p.render(reg)).collect()
}

#[derive(Serialize)]
struct AnnihilatorJson {
    var: String,
    t: String,
    cofactors: Vec<String>,
}

#[derive(Serialize)]
struct FunctionalJson {
    var: String,
    initials: Vec<String>,
    recurrence: Vec<String>,
}

#[derive(Serialize)]
struct TermJson {
    word: String,
    multiplier: String,
}

#[derive(Serialize)]
struct CertificateJson {
    order: String,
    quotient_basis: Vec<String>,
    annihilators: Vec<AnnihilatorJson>,
    g: Vec<Vec<String>>,
    functionals: Vec<FunctionalJson>,
    e: Vec<TermJson>,
    cocycle: bool,
}

#[derive(Serialize)]
struct DualBody {
    certificate: CertificateJson,
    pairing_value: String,
    verdict: IdentityReport,
}

#[derive(Serialize)]
struct PairBody {
    poly: String,
    l: String,
    e: Vec<TermJson>,
}

#[derive(Serialize)]
struct GroebnerBody {
    order: String,
    basis: Vec<String>,
    leading: Vec<String>,
    cofactors: Vec<Vec<String>>,
    zero_dimensional: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    quotient_basis: Option<Vec<String>>,
}
