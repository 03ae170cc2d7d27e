//! Command line front end: one job per process, one JSON document out.
//!
//! Every subcommand prints a single JSON report carrying a `"schema"` field
//! of `"iwahori-kit/1"`, either to stdout or verbatim to `--out FILE`.
//! Running the same job twice produces byte-identical reports. Failures
//! still print a machine-readable JSON body; the exit code separates the
//! outcomes:
//!
//! * `0` success,
//! * `1` a verification that was asked for does not hold,
//! * `2` invalid input,
//! * `3` an enumeration was refused because its cost estimate exceeds the
//!   budget.
//!
//! The lattice commands resolve their budget from `--budget`, then the
//! `IWAHORI_BUDGET` environment variable, then a built-in default.
//!
//! Coweights are comma separated. GSp accepts either the full ambient
//! vector (all `2d` entries, anti-diagonal pair sums constant) or the first
//! `d` entries together with an explicit `--similitude` constant fixing the
//! rest.
//!
//! With `--cache DIR`, commands that multiply in the Hecke algebra persist
//! reduced words across processes: the directory holds one JSON file per
//! group and rank (`words-gl-3.json` and so on), each a sorted array of
//! `[[letters...], omega]` entries. Entries are replayed through the group
//! law on load and dropped unless they are genuine reduced words, so a
//! cache can only speed a job up, never change its output.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::affine_weyl;
use crate::bernstein;
use crate::characters;
use crate::hecke::HeckeCtx;
use crate::laurent::LaurentScalar;
use crate::lattice_models::{self, LatticeModelParams, ModelKind, DEFAULT_ENUMERATION_BUDGET};
use crate::root_data::{build_root_datum, Coweight, GroupKind, Root, RootDatum};
use crate::spherical;
use crate::{Error, Result};

/// Schema tag stamped on every report this binary prints.
pub const SCHEMA: &str = "iwahori-kit/1";

/// One fully parsed job: the command plus output and resource settings.
/// Each process runs exactly one job and prints exactly one document.
#[derive(Parser, Debug)]
#[command(
    name = "iwahori-kit",
    version,
    about = "Exact Iwahori-Hecke arithmetic for GL(d) and GSp(2d)"
)]
pub struct JobSpec {
    #[command(subcommand)]
    pub command: Command,

    /// Write the JSON report to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Directory for reduced-word caches, one file per group and rank.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache: Option<PathBuf>,

    /// Enumeration cost budget; overrides the IWAHORI_BUDGET variable.
    #[arg(long, global = true, value_name = "N")]
    pub budget: Option<u128>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the root datum: roots and coroots in ambient coordinates.
    #[command(name = "roots")]
    Roots {
        /// Group kind, GL or GSp.
        #[arg(long)]
        group: String,
        /// Rank parameter: GL(d) or GSp(2d).
        #[arg(long)]
        d: usize,
    },

    /// List the dominant coweights whose entries fit in a window.
    #[command(name = "lambda-set")]
    LambdaSet {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Lower entry bound of the window.
        #[arg(long, allow_hyphen_values = true)]
        n_minus: i64,
        /// Upper entry bound of the window.
        #[arg(long, allow_hyphen_values = true)]
        n_plus: i64,
    },

    /// List the admissible set of a dominant coweight, with reduced words.
    #[command(name = "admissible")]
    Admissible {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Dominant coweight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Similitude constant completing a half-length GSp coweight.
        #[arg(long, allow_hyphen_values = true)]
        similitude: Option<i64>,
    },

    /// Compute the central element z_lambda in the standard basis.
    #[command(name = "z")]
    Z {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Dominant coweight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Similitude constant completing a half-length GSp coweight.
        #[arg(long, allow_hyphen_values = true)]
        similitude: Option<i64>,
    },

    /// Compute the signed central sum attached to a dominant coweight:
    /// the alternating sign times the multiplicity-weighted sum of
    /// central elements over the dominant weights of its character.
    #[command(name = "theorem11")]
    Theorem11 {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Dominant coweight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// Similitude constant completing a half-length GSp coweight.
        #[arg(long, allow_hyphen_values = true)]
        similitude: Option<i64>,
    },

    /// Print the exact change of basis between central elements and
    /// double coset sums, one row per dominant coweight below the bound.
    #[command(name = "triangle")]
    Triangle {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Dominant coweight bounding the table, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        lambda_max: String,
        /// Similitude constant completing a half-length GSp coweight.
        #[arg(long, allow_hyphen_values = true)]
        similitude: Option<i64>,
    },

    /// Check that v^length(t^mu) z_mu e_K equals the double coset sum of
    /// t^mu for a minuscule dominant coweight, printing both operands.
    #[command(name = "verify-minuscule")]
    VerifyMinuscule {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Minuscule dominant coweight, comma separated.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Similitude constant completing a half-length GSp coweight.
        #[arg(long, allow_hyphen_values = true)]
        similitude: Option<i64>,
    },

    /// Enumerate a lattice model over a small finite field and report the
    /// point total and orbit size multiset.
    #[command(name = "count-points")]
    CountPoints {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Total coordinate sum of the GL chain members (omit for GSp).
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        /// Lower window bound.
        #[arg(long, allow_hyphen_values = true)]
        n_minus: i64,
        /// Upper window bound.
        #[arg(long, allow_hyphen_values = true)]
        n_plus: i64,
        /// Field size, one of 2, 3, 4.
        #[arg(long)]
        q: u64,
        /// Model shape: M (periodic tuples), Grass (one subspace), or N
        /// (growing chains).
        #[arg(long, default_value = "M")]
        model: String,
    },

    /// Enumerate a lattice model, stratify it, and compare the orbit sizes
    /// with the point counts predicted by the admissible sets.
    #[command(name = "match-strata")]
    MatchStrata {
        #[arg(long)]
        group: String,
        #[arg(long)]
        d: usize,
        /// Total coordinate sum of the GL chain members (omit for GSp).
        #[arg(long, allow_hyphen_values = true)]
        r: Option<i64>,
        /// Lower window bound.
        #[arg(long, allow_hyphen_values = true)]
        n_minus: i64,
        /// Upper window bound.
        #[arg(long, allow_hyphen_values = true)]
        n_plus: i64,
        /// Field size, one of 2, 3, 4.
        #[arg(long)]
        q: u64,
        /// Model shape: M (periodic tuples), Grass (one subspace), or N
        /// (growing chains).
        #[arg(long, default_value = "M")]
        model: String,
    },
}

/// Parses the process arguments and runs the job, returning the exit code.
pub fn main() -> i32 {
    match JobSpec::try_parse() {
        Ok(job) => run(&job),
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                0
            } else {
                print!(
                    "{}",
                    render(&error_body(&Error::InvalidInput(e.to_string())))
                );
                2
            }
        }
    }
}

/// Runs one parsed job end to end: dispatch, serialize, deliver.
pub fn run(job: &JobSpec) -> i32 {
    let started = Instant::now();
    let (body, code) = match dispatch(job) {
        Ok(pair) => pair,
        Err(e) => (error_body(&e), exit_code(&e)),
    };
    if matches!(
        job.command,
        Command::CountPoints { .. } | Command::MatchStrata { .. }
    ) {
        // stderr only, so the report bytes stay identical across reruns
        eprintln!("wall time: {:.1?}", started.elapsed());
    }
    let text = render(&body);
    match &job.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                print!("{}", render(&error_body(&Error::Io(e))));
                return 2;
            }
        }
        None => print!("{text}"),
    }
    code
}

fn dispatch(job: &JobSpec) -> Result<(Value, i32)> {
    let ok = |v: Value| (v, 0);
    match &job.command {
        Command::Roots { group, d } => roots_report(group, *d).map(ok),
        Command::LambdaSet {
            group,
            d,
            n_minus,
            n_plus,
        } => lambda_set_report(group, *d, *n_minus, *n_plus).map(ok),
        Command::Admissible {
            group,
            d,
            mu,
            similitude,
        } => admissible_report(group, *d, mu, *similitude).map(ok),
        Command::Z {
            group,
            d,
            lambda,
            similitude,
        } => z_report(job, group, *d, lambda, *similitude).map(ok),
        Command::Theorem11 {
            group,
            d,
            lambda,
            similitude,
        } => theorem11_report(job, group, *d, lambda, *similitude).map(ok),
        Command::Triangle {
            group,
            d,
            lambda_max,
            similitude,
        } => triangle_report(job, group, *d, lambda_max, *similitude).map(ok),
        Command::VerifyMinuscule {
            group,
            d,
            mu,
            similitude,
        } => verify_minuscule_report(job, group, *d, mu, *similitude),
        Command::CountPoints {
            group,
            d,
            r,
            n_minus,
            n_plus,
            q,
            model,
        } => count_points_report(job, group, *d, *r, *n_minus, *n_plus, *q, model).map(ok),
        Command::MatchStrata {
            group,
            d,
            r,
            n_minus,
            n_plus,
            q,
            model,
        } => match_strata_report(job, group, *d, *r, *n_minus, *n_plus, *q, model),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => 3,
        Error::VerificationFailed(_) | Error::TriangleResidual(_) => 1,
        _ => 2,
    }
}

fn kind_name(e: &Error) -> &'static str {
    match e {
        Error::InvalidRank(_) => "invalid-rank",
        Error::DatumMismatch { .. } => "datum-mismatch",
        Error::NonDominant(_) => "non-dominant",
        Error::VerificationFailed(_) => "verification-failed",
        Error::NotMinuscule(_) => "not-minuscule",
        Error::NoSuchReflection(_) => "no-such-reflection",
        Error::InvalidWindow { .. } => "invalid-window",
        Error::UnsupportedField(_) => "unsupported-field",
        Error::BudgetExceeded { .. } => "budget-exceeded",
        Error::InvalidModelParams(_) => "invalid-model-params",
        Error::TriangleResidual(_) => "triangle-residual",
        Error::InvalidInput(_) => "invalid-input",
        Error::Io(_) => "io",
        Error::Json(_) => "json",
    }
}

fn error_body(e: &Error) -> Value {
    let mut detail = json!({
        "kind": kind_name(e),
        "message": e.to_string(),
    });
    if let Error::BudgetExceeded { estimate, budget } = e {
        // u128 values travel as strings to stay exact in any JSON reader
        detail["estimate"] = Value::String(estimate.to_string());
        detail["budget"] = Value::String(budget.to_string());
    }
    json!({ "schema": SCHEMA, "error": detail })
}

fn render(body: &Value) -> String {
    let mut text = serde_json::to_string_pretty(body).expect("report serializes");
    text.push('\n');
    text
}

fn parse_entries(raw: &str) -> Result<Vec<i64>> {
    raw.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad coweight entry {s:?}")))
        })
        .collect()
}

/// Accepts a full ambient-length coweight, or for GSp the first `d`
/// entries together with an explicit similitude constant.
fn parse_coweight(rd: &RootDatum, raw: &str, similitude: Option<i64>) -> Result<Coweight> {
    let entries = parse_entries(raw)?;
    if entries.len() == rd.ambient {
        let cw = Coweight(entries);
        rd.validate_coweight(&cw)?;
        if let Some(c) = similitude {
            let got = rd.central_charge(&cw);
            if got != c {
                return Err(Error::InvalidInput(format!(
                    "coweight {cw} has similitude {got}, but --similitude {c} was given"
                )));
            }
        }
        return Ok(cw);
    }
    if rd.kind == GroupKind::Gsp && entries.len() == rd.d {
        let c = similitude.ok_or_else(|| {
            Error::InvalidInput(
                "a half-length GSp coweight needs --similitude to fix the other half".into(),
            )
        })?;
        return Ok(rd.complete_coweight(&entries, c));
    }
    Err(Error::DatumMismatch {
        got: entries,
        reason: format!(
            "expected {} entries, or {} with --similitude for GSp",
            rd.ambient, rd.d
        ),
    })
}

fn datum(group: &str, d: usize) -> Result<RootDatum> {
    build_root_datum(GroupKind::parse(group)?, d)
}

fn cache_file(dir: &Path, kind: GroupKind, d: usize) -> PathBuf {
    dir.join(format!(
        "words-{}-{}.json",
        kind.name().to_ascii_lowercase(),
        d
    ))
}

/// Builds a Hecke context, seeded from the word cache when one is given.
fn context(job: &JobSpec, group: &str, d: usize) -> Result<HeckeCtx> {
    let kind = GroupKind::parse(group)?;
    let ctx = HeckeCtx::new(kind, d)?;
    if let Some(dir) = &job.cache {
        if let Ok(text) = fs::read_to_string(cache_file(dir, kind, d)) {
            if let Ok(snapshot) = serde_json::from_str::<Value>(&text) {
                ctx.memo_from_json(&snapshot);
            }
        }
    }
    Ok(ctx)
}

/// Persists the reduced words the job accumulated. Advisory: a failed
/// write only leaves a note on stderr.
fn save_cache(job: &JobSpec, ctx: &HeckeCtx) {
    let Some(dir) = &job.cache else { return };
    let path = cache_file(dir, ctx.datum().kind, ctx.datum().d);
    let _ = fs::create_dir_all(dir);
    if let Err(e) = fs::write(&path, format!("{}\n", ctx.memo_to_json())) {
        eprintln!("note: cache write to {} failed: {e}", path.display());
    }
}

fn resolve_budget(flag: Option<u128>) -> Result<u128> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("IWAHORI_BUDGET") {
        Ok(s) => s.trim().parse::<u128>().map_err(|_| {
            Error::InvalidInput(format!(
                "IWAHORI_BUDGET must be a nonnegative integer, got {s:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ENUMERATION_BUDGET),
        Err(e) => Err(Error::InvalidInput(format!("IWAHORI_BUDGET: {e}"))),
    }
}

fn coweight_list(list: &[Coweight]) -> Value {
    Value::Array(list.iter().map(|cw| json!(cw.0)).collect())
}

fn scalar_json(c: &LaurentScalar) -> Value {
    Value::Array(c.iter().map(|(e, n)| json!([e, n])).collect())
}

fn roots_report(group: &str, d: usize) -> Result<Value> {
    let rd = datum(group, d)?;
    let root_vec = |r: &Root| {
        let mut v = vec![0i64; rd.ambient];
        v[r.i] += 1;
        v[r.j] -= 1;
        v
    };
    Ok(json!({
        "schema": SCHEMA,
        "command": "roots",
        "group": rd.kind.name(),
        "d": d,
        "ambient": rd.ambient,
        "rank": rd.rank(),
        "simple_roots": rd.simple_roots.iter().map(root_vec).collect::<Vec<_>>(),
        "positive_roots": rd.positive_roots.iter().map(root_vec).collect::<Vec<_>>(),
        "simple_coroots": coweight_list(&rd.simple_coroots),
        "positive_coroots": coweight_list(&rd.positive_coroots),
        "rho_hat_twice": rd.rho_hat_twice().0.clone(),
    }))
}

fn lambda_set_report(group: &str, d: usize, n_minus: i64, n_plus: i64) -> Result<Value> {
    let rd = datum(group, d)?;
    let lams = rd.lambda_set(n_minus, n_plus)?;
    Ok(json!({
        "schema": SCHEMA,
        "command": "lambda-set",
        "group": rd.kind.name(),
        "d": d,
        "n_minus": n_minus,
        "n_plus": n_plus,
        "count": lams.len(),
        "coweights": coweight_list(&lams),
    }))
}

fn admissible_report(group: &str, d: usize, mu: &str, similitude: Option<i64>) -> Result<Value> {
    let rd = datum(group, d)?;
    let mu = parse_coweight(&rd, mu, similitude)?;
    let elems = affine_weyl::admissible_set(&rd, &mu)?;
    let list: Vec<Value> = elems
        .iter()
        .map(|x| {
            let (word, k) = affine_weyl::reduced_word(&rd, x);
            json!({
                "word": word,
                "omega": k,
                "length": affine_weyl::length(&rd, x),
            })
        })
        .collect();
    Ok(json!({
        "schema": SCHEMA,
        "command": "admissible",
        "group": rd.kind.name(),
        "d": d,
        "mu": mu.0,
        "count": list.len(),
        "elements": list,
    }))
}

fn z_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    lambda: &str,
    similitude: Option<i64>,
) -> Result<Value> {
    let ctx = context(job, group, d)?;
    let lam = parse_coweight(ctx.datum(), lambda, similitude)?;
    let z = bernstein::bernstein_z(&ctx, &lam)?;
    let report = json!({
        "schema": SCHEMA,
        "command": "z",
        "group": ctx.datum().kind.name(),
        "d": d,
        "lambda": lam.0,
        "support": z.support_len(),
        "element": ctx.element_to_json(&z),
    });
    save_cache(job, &ctx);
    Ok(report)
}

fn theorem11_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    lambda: &str,
    similitude: Option<i64>,
) -> Result<Value> {
    let ctx = context(job, group, d)?;
    let lam = parse_coweight(ctx.datum(), lambda, similitude)?;
    let f = bernstein::nearby_cycles_function(&ctx, &lam)?;
    let len = ctx.datum().rho_pairing_twice(&lam)?;
    let sign = if len % 2 == 0 { 1 } else { -1 };
    let mults: Vec<Value> = characters::dominant_weight_multiplicities(ctx.datum(), &lam)?
        .iter()
        .map(|(mu, m)| json!({ "coweight": mu.0, "multiplicity": m }))
        .collect();
    let report = json!({
        "schema": SCHEMA,
        "command": "theorem11",
        "group": ctx.datum().kind.name(),
        "d": d,
        "lambda": lam.0,
        "length": len,
        "sign": sign,
        "multiplicities": mults,
        "support": f.support_len(),
        "element": ctx.element_to_json(&f),
    });
    save_cache(job, &ctx);
    Ok(report)
}

fn triangle_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    lambda_max: &str,
    similitude: Option<i64>,
) -> Result<Value> {
    let ctx = context(job, group, d)?;
    let lam = parse_coweight(ctx.datum(), lambda_max, similitude)?;
    let tm = spherical::triangle_matrix(&ctx, &lam)?;
    let entries: Vec<Value> = tm
        .entries
        .iter()
        .map(|row| Value::Array(row.iter().map(scalar_json).collect()))
        .collect();
    let report = json!({
        "schema": SCHEMA,
        "command": "triangle",
        "group": ctx.datum().kind.name(),
        "d": d,
        "lambda_max": lam.0,
        "labels": coweight_list(&tm.labels),
        "entries": entries,
    });
    save_cache(job, &ctx);
    Ok(report)
}

fn verify_minuscule_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    mu: &str,
    similitude: Option<i64>,
) -> Result<(Value, i32)> {
    let ctx = context(job, group, d)?;
    let rd = ctx.datum();
    let mu = parse_coweight(rd, mu, similitude)?;
    if !rd.is_dominant(&mu)? {
        return Err(Error::NonDominant(mu.0.clone()));
    }
    if !rd.is_minuscule(&mu)? {
        return Err(Error::NotMinuscule(mu.0.clone()));
    }
    let len = rd.rho_pairing_twice(&mu)?;
    let lhs = spherical::star_ik(&ctx, &bernstein::bernstein_z(&ctx, &mu)?)
        .scale(&LaurentScalar::v_power(len as i32));
    let rhs = spherical::double_coset_char(&ctx, &mu)?;
    let holds = lhs == rhs;
    let report = json!({
        "schema": SCHEMA,
        "command": "verify-minuscule",
        "group": rd.kind.name(),
        "d": d,
        "mu": mu.0,
        "length": len,
        "holds": holds,
        "message": if holds { "identity holds" } else { "identity fails" },
        "lhs": ctx.element_to_json(&lhs),
        "rhs": ctx.element_to_json(&rhs),
    });
    save_cache(job, &ctx);
    Ok((report, if holds { 0 } else { 1 }))
}

#[allow(clippy::too_many_arguments)]
fn lattice_params(
    group: &str,
    d: usize,
    r: Option<i64>,
    n_minus: i64,
    n_plus: i64,
    q: u64,
    model: &str,
) -> Result<LatticeModelParams> {
    let params = LatticeModelParams {
        kind: GroupKind::parse(group)?,
        d,
        r,
        n_minus,
        n_plus,
        q,
        model: ModelKind::parse(model)?,
    };
    params.validate()?;
    Ok(params)
}

fn lattice_params_json(params: &LatticeModelParams) -> Value {
    let mut v = json!({
        "group": params.kind.name(),
        "d": params.d,
        "model": params.model.name(),
        "n_minus": params.n_minus,
        "n_plus": params.n_plus,
        "q": params.q,
    });
    if let Some(r) = params.r {
        v["r"] = json!(r);
    }
    v
}

#[allow(clippy::too_many_arguments)]
fn count_points_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    r: Option<i64>,
    n_minus: i64,
    n_plus: i64,
    q: u64,
    model: &str,
) -> Result<Value> {
    let params = lattice_params(group, d, r, n_minus, n_plus, q, model)?;
    let budget = resolve_budget(job.budget)?;
    let estimate = lattice_models::estimate_cost(&params)?;
    let points = lattice_models::enumerate_points(&params, budget)?;
    let orbits = lattice_models::stratify(&params, &points)?;
    let mut sizes: Vec<u64> = orbits.iter().map(|o| o.len() as u64).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    Ok(json!({
        "schema": SCHEMA,
        "command": "count-points",
        "parameters": lattice_params_json(&params),
        "budget": budget.to_string(),
        "estimate": estimate.to_string(),
        "total_points": points.len(),
        "orbit_sizes": sizes,
    }))
}

#[allow(clippy::too_many_arguments)]
fn match_strata_report(
    job: &JobSpec,
    group: &str,
    d: usize,
    r: Option<i64>,
    n_minus: i64,
    n_plus: i64,
    q: u64,
    model: &str,
) -> Result<(Value, i32)> {
    let params = lattice_params(group, d, r, n_minus, n_plus, q, model)?;
    let budget = resolve_budget(job.budget)?;
    let estimate = lattice_models::estimate_cost(&params)?;
    let rd = build_root_datum(params.kind, params.d)?;
    let points = lattice_models::enumerate_points(&params, budget)?;
    let candidates = lattice_models::candidate_elements(&rd, &params)?;
    let report = lattice_models::match_strata(&params, &points, &rd, &candidates)?;
    let body = json!({
        "schema": SCHEMA,
        "command": "match-strata",
        "parameters": lattice_params_json(&params),
        "budget": budget.to_string(),
        "estimate": estimate.to_string(),
        "candidate_count": candidates.len(),
        "total_points": report.total_points,
        "orbit_sizes": report.orbit_sizes,
        "predicted_sizes": report.predicted_sizes,
        "verdict": if report.matches { "match" } else { "mismatch" },
    });
    Ok((body, if report.matches { 0 } else { 1 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(args: &[&str]) -> JobSpec {
        JobSpec::try_parse_from(args).unwrap()
    }

    #[test]
    fn coweight_parsing_accepts_both_gsp_forms() {
        let rd = datum("GSp", 2).unwrap();
        let full = parse_coweight(&rd, "1,1,0,0", None).unwrap();
        let half = parse_coweight(&rd, "1,1", Some(1)).unwrap();
        assert_eq!(full, half);
        assert_eq!(full, Coweight(vec![1, 1, 0, 0]));

        assert!(parse_coweight(&rd, "1,1", None).is_err());
        assert!(parse_coweight(&rd, "1,0,0,1", None).is_err());
        assert!(parse_coweight(&rd, "1,1,0,0", Some(5)).is_err());
        assert!(parse_coweight(&rd, "1,x", Some(1)).is_err());
    }

    #[test]
    fn negative_entries_parse_through_the_flag_layer() {
        let spec = job(&[
            "iwahori-kit",
            "lambda-set",
            "--group",
            "GL",
            "--d",
            "2",
            "--n-minus",
            "-1",
            "--n-plus",
            "1",
        ]);
        match spec.command {
            Command::LambdaSet { n_minus, n_plus, .. } => {
                assert_eq!((n_minus, n_plus), (-1, 1));
            }
            _ => panic!("wrong command"),
        }

        let rd = datum("GL", 3).unwrap();
        let cw = parse_coweight(&rd, "-1, 0, 2", None).unwrap();
        assert_eq!(cw, Coweight(vec![-1, 0, 2]));
    }

    #[test]
    fn reports_carry_the_schema_tag() {
        let v = roots_report("GL", 2).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["rank"], 1);
        assert_eq!(v["simple_roots"][0], json!([1, -1]));

        let v = lambda_set_report("GSp", 2, 0, 1).unwrap();
        assert_eq!(v["count"], 1);
        assert_eq!(v["coweights"], json!([[1, 1, 0, 0]]));

        let v = lambda_set_report("GL", 2, 0, 1).unwrap();
        assert_eq!(v["count"], 3);

        let v = admissible_report("GL", 4, "1,1,0,0", None).unwrap();
        assert_eq!(v["count"], 33);
    }

    #[test]
    fn unit_central_element_for_the_zero_coweight() {
        let spec = job(&[
            "iwahori-kit",
            "theorem11",
            "--group",
            "GL",
            "--d",
            "2",
            "--lambda",
            "0,0",
        ]);
        let (v, code) = dispatch(&spec).unwrap();
        assert_eq!(code, 0);
        assert_eq!(v["sign"], 1);
        assert_eq!(v["support"], 1);
        assert_eq!(v["element"], json!([{ "word": [], "omega": 0, "coeff": [[0, 1]] }]));
    }

    #[test]
    fn minuscule_identity_reports_both_operands() {
        let spec = job(&[
            "iwahori-kit",
            "verify-minuscule",
            "--group",
            "GSp",
            "--d",
            "2",
            "--mu",
            "1,1,0,0",
        ]);
        let (v, code) = dispatch(&spec).unwrap();
        assert_eq!(code, 0);
        assert_eq!(v["holds"], true);
        assert_eq!(v["message"], "identity holds");
        assert_eq!(v["lhs"], v["rhs"]);
        assert!(v["lhs"].as_array().unwrap().len() > 1);
    }

    #[test]
    fn non_minuscule_input_is_a_typed_error() {
        let spec = job(&[
            "iwahori-kit",
            "verify-minuscule",
            "--group",
            "GL",
            "--d",
            "2",
            "--mu",
            "2,0",
        ]);
        let e = dispatch(&spec).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        assert_eq!(error_body(&e)["error"]["kind"], "not-minuscule");
    }

    #[test]
    fn budget_errors_carry_exact_limits() {
        let e = Error::BudgetExceeded {
            estimate: u128::MAX,
            budget: 1,
        };
        assert_eq!(exit_code(&e), 3);
        let body = error_body(&e);
        assert_eq!(body["error"]["kind"], "budget-exceeded");
        assert_eq!(body["error"]["estimate"], u128::MAX.to_string());
        assert_eq!(body["error"]["budget"], "1");
    }

    #[test]
    fn lattice_reports_match_known_counts() {
        let spec = job(&[
            "iwahori-kit",
            "count-points",
            "--group",
            "GL",
            "--d",
            "2",
            "--r",
            "1",
            "--n-minus",
            "0",
            "--n-plus",
            "1",
            "--q",
            "2",
        ]);
        let (v, code) = dispatch(&spec).unwrap();
        assert_eq!(code, 0);
        assert_eq!(v["total_points"], 5);
        assert_eq!(v["orbit_sizes"], json!([2, 2, 1]));

        let spec = job(&[
            "iwahori-kit",
            "match-strata",
            "--group",
            "GL",
            "--d",
            "2",
            "--r",
            "1",
            "--n-minus",
            "0",
            "--n-plus",
            "1",
            "--q",
            "3",
            "--model",
            "N",
        ]);
        let (v, code) = dispatch(&spec).unwrap();
        assert_eq!(code, 0);
        assert_eq!(v["verdict"], "match");
        assert_eq!(v["total_points"], 7);
    }

    #[test]
    fn rendered_reports_are_stable_bytes() {
        let spec = job(&[
            "iwahori-kit",
            "z",
            "--group",
            "GL",
            "--d",
            "2",
            "--lambda",
            "1,0",
        ]);
        let (a, _) = dispatch(&spec).unwrap();
        let (b, _) = dispatch(&spec).unwrap();
        assert_eq!(render(&a), render(&b));
        assert!(render(&a).ends_with('\n'));
    }
}
