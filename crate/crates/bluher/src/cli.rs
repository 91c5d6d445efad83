//! Command-line front end: argument types, JSON and text rendering, and the
//! mapping from errors to exit codes.
//!
//! Exit codes: 0 on success, 2 for invalid parameters (composite p, reducible
//! modulus, a = 0, out-of-range encodings, a u in the excluded subfield),
//! 3 when a computation would need a field beyond the configured caps, 1 for
//! anything else.

use std::collections::BTreeMap;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldCtx;
use crate::oracle;
use crate::sequence::Instance;
use crate::solver;

const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Roots of the trinomial x^(q+1) + x + a over GF(p^n), q = p^k.
#[derive(Parser)]
#[command(name = "bluher", version)]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Find all roots of x^(q+1) + x + a in GF(p^n).
    Solve(SolveArgs),
    /// Count roots for every nonzero a in GF(p^n).
    Census(CensusArgs),
    /// Build an a with p^gcd(n,k) + 1 roots from a free parameter u.
    Param(ParamArgs),
    /// Compare the closed-form solver with brute-force enumeration.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// Parameters shared by every subcommand.
#[derive(Args)]
pub struct FieldArgs {
    /// Characteristic of the field, a prime.
    #[arg(long)]
    pub p: u64,
    /// Frobenius power: q = p^k.
    #[arg(long)]
    pub k: usize,
    /// Extension degree: the field is GF(p^n).
    #[arg(long)]
    pub n: usize,
    /// Modulus coefficients c0,c1,...,cn, constant term first, monic of
    /// degree n. Defaults to the lexicographically smallest irreducible.
    #[arg(long, value_delimiter = ',')]
    pub poly: Option<Vec<u64>>,
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    pub format: Format,
}

impl FieldArgs {
    fn ctx(&self) -> Result<Arc<FieldCtx>> {
        Ok(Arc::new(match &self.poly {
            Some(f) => FieldCtx::with_modulus(self.p, self.n, f)?,
            None => FieldCtx::new(self.p, self.n)?,
        }))
    }

    fn instance(&self, a: u64) -> Result<Instance> {
        let ctx = self.ctx()?;
        let a = ctx.from_encoding(a)?;
        Instance::from_elt(ctx, self.k, a)
    }
}

#[derive(Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Encoding of a (base-p digits of the coefficients, low to high).
    #[arg(long)]
    pub a: u64,
    /// Also brute-force the roots and fail loudly on any mismatch.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Args)]
pub struct CensusArgs {
    #[command(flatten)]
    pub field: FieldArgs,
}

#[derive(Args)]
pub struct ParamArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Encoding of the free parameter u.
    #[arg(long)]
    pub u: u64,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub field: FieldArgs,
    /// Encoding of a.
    #[arg(long)]
    pub a: u64,
}

/// Instance parameters echoed in every JSON document.
#[derive(Serialize)]
struct ParamsOut {
    p: u64,
    k: usize,
    n: usize,
    d: usize,
    m: usize,
    /// p^k, absent when it overflows 64 bits.
    q: Option<u64>,
    #[serde(rename = "Q")]
    big_q: u64,
    a: u64,
    modulus: Vec<u64>,
    /// Exponent used by the p^d + 1 pipeline, absent on overflow.
    s: Option<u128>,
}

impl ParamsOut {
    fn from_instance(inst: &Instance) -> Self {
        let ctx = inst.ctx();
        ParamsOut {
            p: inst.p(),
            k: inst.k(),
            n: inst.n(),
            d: inst.d(),
            m: inst.m(),
            q: inst.p().checked_pow(inst.k() as u32),
            big_q: inst.field_size(),
            a: ctx.encoding(inst.a()),
            modulus: ctx.modulus().to_vec(),
            s: inst.s(),
        }
    }
}

#[derive(Serialize)]
struct SolveOut {
    params: ParamsOut,
    case: String,
    count: u64,
    roots: Vec<u64>,
    diagnostics: BTreeMap<String, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_match: Option<bool>,
    version: String,
}

#[derive(Serialize)]
struct CensusOut {
    p: u64,
    k: usize,
    n: usize,
    q: Option<u64>,
    #[serde(rename = "Q")]
    big_q: u64,
    modulus: Vec<u64>,
    rows: Vec<oracle::CensusRow>,
    total_roots: u64,
    classified: u64,
    version: String,
}

#[derive(Serialize)]
struct ParamOut {
    p: u64,
    k: usize,
    n: usize,
    u: u64,
    modulus: Vec<u64>,
    a: u64,
    count: u64,
    roots: Vec<u64>,
    version: String,
}

#[derive(Serialize)]
struct VerifyOut {
    #[serde(flatten)]
    report: oracle::VerifyReport,
    version: String,
}

/// Dispatch a parsed command line and render its output.
pub fn run(cli: &Cli) -> Result<String> {
    match &cli.cmd {
        Cmd::Solve(args) => run_solve(args),
        Cmd::Census(args) => run_census(args),
        Cmd::Param(args) => run_param(args),
        Cmd::Verify(args) => run_verify(args),
    }
}

pub fn run_solve(args: &SolveArgs) -> Result<String> {
    let inst = args.field.instance(args.a)?;
    let sol = solver::solve(&inst)?;
    let oracle_match = if args.verify {
        let report = oracle::compare(&inst, &sol, &oracle::brute_roots(&inst)?);
        if !report.matches {
            return Err(Error::InternalCheckFailed(format!(
                "solver found roots {:?} but the oracle found {:?}",
                report.solver_roots, report.oracle_roots
            )));
        }
        Some(true)
    } else {
        None
    };
    let ctx = inst.ctx();
    let roots: Vec<u64> = sol.roots.iter().map(|x| ctx.encoding(x)).collect();
    if args.field.format == Format::Json {
        let out = SolveOut {
            params: ParamsOut::from_instance(&inst),
            case: sol.case.label().to_string(),
            count: sol.count,
            roots,
            diagnostics: sol.diagnostics,
            oracle_match,
            version: VERSION.to_string(),
        };
        return to_json(&out);
    }
    let mut s = header(&inst);
    s.push_str(&format!("case: {} ({} roots)\n", sol.case, sol.count));
    if roots.is_empty() {
        s.push_str("roots: none\n");
    } else {
        let pretty: Vec<String> = sol
            .roots
            .iter()
            .map(|x| format!("{} ({})", ctx.encoding(x), ctx.format_elt(x)))
            .collect();
        s.push_str(&format!("roots: {}\n", pretty.join(", ")));
    }
    if oracle_match == Some(true) {
        s.push_str("verified against brute force\n");
    }
    Ok(s.trim_end().to_string())
}

pub fn run_census(args: &CensusArgs) -> Result<String> {
    let ctx = args.field.ctx()?;
    let census = oracle::census_over(ctx, args.field.k)?;
    if args.field.format == Format::Json {
        let out = CensusOut {
            p: census.p,
            k: census.k,
            n: census.n,
            q: census.p.checked_pow(census.k as u32),
            big_q: census.p.pow(census.n as u32),
            modulus: census.modulus.clone(),
            rows: census.rows.clone(),
            total_roots: census.total_roots,
            classified: census.classified,
            version: VERSION.to_string(),
        };
        return to_json(&out);
    }
    let mut s = format!(
        "root counts of x^(q+1) + x + a over GF({}^{}), q = {}^{}\n",
        census.p, census.n, census.p, census.k
    );
    s.push_str("count  num_a\n");
    for row in &census.rows {
        s.push_str(&format!("{:<6} {}\n", row.count, row.num_a));
    }
    s.push_str(&format!(
        "total roots: {}, a values classified: {}\n",
        census.total_roots, census.classified
    ));
    Ok(s.trim_end().to_string())
}

pub fn run_param(args: &ParamArgs) -> Result<String> {
    let ctx = args.field.ctx()?;
    let u = ctx.from_encoding(args.u)?;
    let (a, roots) = solver::parametrize_a(&ctx, args.field.k, &u)?;
    let encs: Vec<u64> = roots.iter().map(|x| ctx.encoding(x)).collect();
    if args.field.format == Format::Json {
        let out = ParamOut {
            p: args.field.p,
            k: args.field.k,
            n: args.field.n,
            u: args.u,
            modulus: ctx.modulus().to_vec(),
            a: ctx.encoding(&a),
            count: encs.len() as u64,
            roots: encs,
            version: VERSION.to_string(),
        };
        return to_json(&out);
    }
    let mut s = format!(
        "u = {} ({}) over GF({}^{}), q = {}^{}\n",
        args.u,
        ctx.format_elt(&u),
        args.field.p,
        args.field.n,
        args.field.p,
        args.field.k
    );
    s.push_str(&format!("a = {} ({})\n", ctx.encoding(&a), ctx.format_elt(&a)));
    let pretty: Vec<String> = roots
        .iter()
        .map(|x| format!("{} ({})", ctx.encoding(x), ctx.format_elt(x)))
        .collect();
    s.push_str(&format!("{} roots: {}\n", pretty.len(), pretty.join(", ")));
    Ok(s.trim_end().to_string())
}

pub fn run_verify(args: &VerifyArgs) -> Result<String> {
    let inst = args.field.instance(args.a)?;
    let report = oracle::verify(&inst)?;
    let matches = report.matches;
    let rendered = if args.field.format == Format::Json {
        to_json(&VerifyOut { report, version: VERSION.to_string() })?
    } else {
        let mut s = header(&inst);
        s.push_str(&format!(
            "solver: {} roots {:?}\noracle: {} roots {:?}\nmatch: {}\n",
            report.solver_count,
            report.solver_roots,
            report.oracle_count,
            report.oracle_roots,
            report.matches
        ));
        s.trim_end().to_string()
    };
    if !matches {
        return Err(Error::InternalCheckFailed(
            "solver and oracle disagree; rerun with solve --verify for details".to_string(),
        ));
    }
    Ok(rendered)
}

fn header(inst: &Instance) -> String {
    let ctx = inst.ctx();
    let modulus: Vec<String> = ctx.modulus().iter().map(|c| c.to_string()).collect();
    format!(
        "x^(q+1) + x + a over GF({}^{}), q = {}^{}, modulus [{}], a = {} ({})\n",
        inst.p(),
        inst.n(),
        inst.p(),
        inst.k(),
        modulus.join(","),
        ctx.encoding(inst.a()),
        ctx.format_elt(inst.a())
    )
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::InternalCheckFailed(format!("serialization failed: {e}")))
}

/// Process exit code for an error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::NotPrime(_)
        | Error::NotIrreducible(_)
        | Error::AZero
        | Error::UInSmallField
        | Error::BadParameter(_)
        | Error::IncompatibleDegrees
        | Error::DegreeMismatch(_) => 2,
        Error::FieldTooLarge(_) => 3,
        _ => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::Parser;

    fn parse(line: &str) -> Cli {
        Cli::try_parse_from(line.split_whitespace()).unwrap()
    }

    #[test]
    fn solve_json_worked_example() {
        let cli = parse("bluher solve --p 2 --k 1 --n 3 --a 1");
        let out = run(&cli).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["case"], "pd1");
        assert_eq!(v["count"], 3);
        assert_eq!(v["roots"], serde_json::json!([2, 4, 6]));
        assert_eq!(v["params"]["Q"], 8);
        assert_eq!(v["params"]["modulus"], serde_json::json!([1, 1, 0, 1]));
        assert_eq!(v["params"]["s"], 1);
    }

    #[test]
    fn solve_text_and_verify() {
        let cli = parse("bluher solve --p 2 --k 1 --n 3 --a 1 --format text --verify");
        let out = run(&cli).unwrap();
        assert!(out.contains("case: pd1 (3 roots)"));
        assert!(out.contains("verified against brute force"));
    }

    #[test]
    fn census_json_gf8() {
        let cli = parse("bluher census --p 2 --k 1 --n 3");
        let out = run(&cli).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["total_roots"], 6);
        assert_eq!(v["rows"][2], serde_json::json!({"count": 3, "num_a": 1}));
    }

    #[test]
    fn param_json_gf8() {
        let cli = parse("bluher param --p 2 --k 1 --n 3 --u 2");
        let out = run(&cli).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["a"], 1);
        assert_eq!(v["roots"], serde_json::json!([2, 4, 6]));
    }

    #[test]
    fn verify_json_matches() {
        let cli = parse("bluher verify --p 3 --k 1 --n 2 --a 1");
        let out = run(&cli).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["matches"], true);
    }

    #[test]
    fn custom_modulus_changes_encodings() {
        // GF(8) with the other irreducible cubic x^3 + x^2 + 1.
        let cli = parse("bluher solve --p 2 --k 1 --n 3 --a 1 --poly 1,0,1,1");
        let out = run(&cli).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], 3);
        assert_ne!(v["roots"], serde_json::json!([2, 4, 6]));
    }

    #[test]
    fn exit_codes_by_error_class() {
        assert_eq!(exit_code(&Error::NotPrime(4)), 2);
        assert_eq!(exit_code(&Error::AZero), 2);
        assert_eq!(exit_code(&Error::UInSmallField), 2);
        assert_eq!(exit_code(&Error::FieldTooLarge("x".into())), 3);
        assert_eq!(exit_code(&Error::PipelineExhausted), 1);
        assert_eq!(exit_code(&Error::InternalCheckFailed("x".into())), 1);
    }

    #[test]
    fn bad_inputs_map_to_param_errors() {
        let cli = parse("bluher solve --p 4 --k 1 --n 3 --a 1");
        let err = run(&cli).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let cli = parse("bluher solve --p 2 --k 1 --n 3 --a 0");
        let err = run(&cli).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let cli = parse("bluher solve --p 2 --k 1 --n 3 --a 99");
        let err = run(&cli).unwrap_err();
        assert_eq!(exit_code(&err), 2);
        let cli = parse("bluher param --p 2 --k 1 --n 3 --u 1");
        let err = run(&cli).unwrap_err();
        assert_eq!(exit_code(&err), 2);
    }
}
