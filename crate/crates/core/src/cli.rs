//! Command-line front end: `fsle classify | embed | solve`.
//!
//! Exit codes: `0` success (for `solve`: solved and every component is a
//! fuzzy number), `1` solved but the solution is not a fuzzy vector, `2`
//! parse or solver failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::classify::classify;
use crate::embedding::{build_embedding, Embedding};
use crate::fuzzy::FuzzyNumber;
use crate::matrix::CrispMatrix;
use crate::problem::{MethodName, Problem, SolverBlock};
use crate::solve::{solve_fsle, SolveOptions};
use crate::verify::SolutionReport;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_FUZZY: i32 = 1;
pub const EXIT_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fsle",
    version,
    about = "Solve fuzzy linear systems Ax = b with a crisp H-matrix A"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify A as SDD, M-matrix, H-matrix or none (JSON output).
    Classify(InputArgs),
    /// Dump the embedded system S, its split and the row permutation (JSON output).
    Embed(InputArgs),
    /// Solve the fuzzy system and report the solution.
    Solve(SolveArgs),
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Problem file (JSON).
    #[arg(short, long, value_name = "PATH")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Solver; overrides the file's solver block.
    #[arg(long, value_enum)]
    pub method: Option<CliMethod>,
    /// AOR acceleration parameter.
    #[arg(long)]
    pub gamma: Option<f64>,
    /// AOR relaxation parameter.
    #[arg(long)]
    pub omega: Option<f64>,
    /// AOR relative residual target.
    #[arg(long)]
    pub tol: Option<f64>,
    /// AOR sweep limit.
    #[arg(long)]
    pub max_iter: Option<usize>,
    /// Also test whether S^-1 is entrywise nonnegative.
    #[arg(long)]
    pub check_inverse: bool,
    /// Include the embedding in the output.
    #[arg(long)]
    pub dump_embedding: bool,
    /// Solve even if A is not an H-matrix.
    #[arg(long)]
    pub force: bool,
    /// Print the report as JSON instead of a table.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CliMethod {
    Lu,
    Aor,
}

/// Everything `fsle embed` prints. Also a valid problem file.
#[derive(Debug, Serialize)]
pub struct EmbeddingDump<'a> {
    #[serde(rename = "A")]
    pub a: &'a CrispMatrix,
    pub b: &'a [FuzzyNumber],
    #[serde(flatten)]
    pub embedding: &'a Embedding,
    #[serde(rename = "P")]
    pub permutation_matrix: CrispMatrix,
    #[serde(rename = "Y_intercept")]
    pub rhs_intercepts: Vec<f64>,
    #[serde(rename = "Y_slope")]
    pub rhs_slopes: Vec<f64>,
}

impl<'a> EmbeddingDump<'a> {
    pub fn new(a: &'a CrispMatrix, b: &'a [FuzzyNumber], embedding: &'a Embedding) -> Self {
        EmbeddingDump {
            a,
            b,
            embedding,
            permutation_matrix: embedding.permutation.to_matrix(),
            rhs_intercepts: embedding.rhs_intercepts(),
            rhs_slopes: embedding.rhs_slopes(),
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Classify(args) => cmd_classify(&args, out),
        Command::Embed(args) => cmd_embed(&args, out),
        Command::Solve(args) => cmd_solve(&args, out),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

type CmdResult = Result<i32, String>;

fn load(args: &InputArgs) -> Result<Problem, String> {
    Problem::from_path(&args.input).map_err(|e| e.to_string())
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), String> {
    let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
    writeln!(out, "{text}").map_err(|e| e.to_string())
}

fn cmd_classify(args: &InputArgs, out: &mut dyn Write) -> CmdResult {
    let p = load(args)?;
    write_json(out, &classify(&p.a))?;
    Ok(EXIT_OK)
}

fn cmd_embed(args: &InputArgs, out: &mut dyn Write) -> CmdResult {
    let p = load(args)?;
    let e = build_embedding(&p.a, &p.b).map_err(|e| e.to_string())?;
    write_json(out, &EmbeddingDump::new(&p.a, &p.b, &e))?;
    Ok(EXIT_OK)
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> CmdResult {
    let p = load(&args.input)?;
    let overrides = SolverBlock {
        method: args.method.map(|m| match m {
            CliMethod::Lu => MethodName::Lu,
            CliMethod::Aor => MethodName::Aor,
        }),
        gamma: args.gamma,
        omega: args.omega,
        tol: args.tol,
        max_iter: args.max_iter,
    };
    let opts = SolveOptions {
        method: p.solver.merged(overrides).to_method(),
        check_inverse: args.check_inverse || p.flags.check_inverse,
        force: args.force,
    };
    let report = solve_fsle(&p.a, &p.b, &opts).map_err(|e| e.to_string())?;

    let embedding = if args.dump_embedding || p.flags.dump_embedding {
        Some(build_embedding(&p.a, &p.b).map_err(|e| e.to_string())?)
    } else {
        None
    };
    let dump = embedding
        .as_ref()
        .map(|e| EmbeddingDump::new(&p.a, &p.b, e));

    if args.json {
        let mut value = serde_json::to_value(&report).map_err(|e| e.to_string())?;
        if let Some(d) = &dump {
            value["embedding"] = serde_json::to_value(d).map_err(|e| e.to_string())?;
        }
        write_json(out, &value)?;
    } else {
        write_table(out, &report).map_err(|e| e.to_string())?;
        if let Some(d) = &dump {
            writeln!(out, "\nembedding:").map_err(|e| e.to_string())?;
            write_json(out, d)?;
        }
    }
    Ok(if report.all_fuzzy {
        EXIT_OK
    } else {
        EXIT_NOT_FUZZY
    })
}

/// Fixed-point rendering with rounding noise below 1e-10 suppressed.
fn fmt_coeff(v: f64) -> String {
    let s = format!("{v:.10}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

fn fmt_affine(c0: f64, c1: f64) -> String {
    let sign = if c1 < 0.0 && fmt_coeff(c1) != "0" {
        '-'
    } else {
        '+'
    };
    format!("{} {} {} r", fmt_coeff(c0), sign, fmt_coeff(c1.abs()))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_table(out: &mut dyn Write, r: &SolutionReport) -> std::io::Result<()> {
    let c = &r.classification;
    let verdict = serde_json::to_string(&c.verdict).unwrap_or_default();
    writeln!(
        out,
        "classification: {} (sdd: {}, m-matrix: {}, h-matrix: {})",
        verdict.trim_matches('"'),
        yes_no(c.flags.sdd),
        yes_no(c.flags.m_matrix),
        yes_no(c.flags.h_matrix)
    )?;
    writeln!(out, "permutation:    {:?}", r.permutation_used)?;
    let method = serde_json::to_string(&r.telemetry.method).unwrap_or_default();
    writeln!(
        out,
        "method:         {} ({} iterations)",
        method.trim_matches('"'),
        r.telemetry.iterations
    )?;
    writeln!(out)?;
    for (i, (x, v)) in r.solution.iter().zip(&r.per_component_validity).enumerate() {
        let mark = if v.valid {
            "fuzzy".to_string()
        } else {
            let names: Vec<String> = v
                .violations
                .iter()
                .map(|q| {
                    serde_json::to_string(q)
                        .unwrap_or_default()
                        .trim_matches('"')
                        .to_string()
                })
                .collect();
            format!("NOT FUZZY ({})", names.join(", "))
        };
        writeln!(
            out,
            "  x{:<3} lower(r) = {}, upper(r) = {}   {}",
            i + 1,
            fmt_affine(x.lower.intercept, x.lower.slope),
            fmt_affine(x.upper.intercept, x.upper.slope),
            mark
        )?;
    }
    writeln!(out)?;
    writeln!(out, "all fuzzy:              {}", yes_no(r.all_fuzzy))?;
    writeln!(out, "residual (intercepts):  {:.3e}", r.residual_intercept)?;
    writeln!(out, "residual (slopes):      {:.3e}", r.residual_slope)?;
    if let Some(nonneg) = r.s_inverse_nonneg {
        writeln!(out, "S^-1 >= 0:              {}", yes_no(nonneg))?;
    }
    Ok(())
}
