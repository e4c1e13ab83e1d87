//! Command dispatch for the `whitney` binary.
//!
//! Subcommands: `table` (triangle export), `verify` (numbered identity
//! suites), `eval` (single values), `normal-order` (expression from stdin),
//! `egf` (series coefficients), `dobinski` (numeric series evaluation).
//! Exit codes: 0 on success or all-pass, 1 on verification failure, 2 on
//! usage or parse errors.

pub mod suites;

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::ToPrimitive;

use crate::boson;
use crate::dowling;
use crate::exact::{lambda_eval, lambda_poly_to_strings, rat, LambdaPoly, Rational};
use crate::series;
use crate::triangles::{self, Family, Triangle, TriangleDoc, TriangleParams};

/// λ on the command line: either the token `symbolic` or a rational value.
#[derive(Clone, Debug, PartialEq)]
pub enum LambdaArg {
    Symbolic,
    Value(Rational),
}

impl LambdaArg {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LambdaArg::Symbolic => None,
            LambdaArg::Value(v) => Some(v),
        }
    }
}

fn parse_lambda(s: &str) -> Result<LambdaArg, String> {
    if s == "symbolic" {
        return Ok(LambdaArg::Symbolic);
    }
    let v: Rational = s
        .parse()
        .map_err(|e| format!("expected 'symbolic' or a rational like 1/2: {e}"))?;
    Ok(LambdaArg::Value(v))
}

fn parse_nonneg_rational(s: &str) -> Result<Rational, String> {
    let v: Rational = s
        .parse()
        .map_err(|e| format!("expected a rational like 3 or 1/2: {e}"))?;
    if v < rat(0) {
        return Err("must be nonnegative".into());
    }
    Ok(v)
}

fn parse_positive_int(s: &str) -> Result<u32, String> {
    let v: u32 = s.parse().map_err(|e| format!("expected a positive integer: {e}"))?;
    if v == 0 {
        return Err("must be at least 1".into());
    }
    Ok(v)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Parameter flags shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct CommonArgs {
    /// Modulus parameter m (positive integer).
    #[arg(long, default_value = "1", value_parser = parse_positive_int)]
    pub m: u32,

    /// Shift parameter r (nonnegative rational).
    #[arg(long, default_value = "0", value_parser = parse_nonneg_rational)]
    pub r: Rational,

    /// Deformation parameter: 'symbolic' keeps polynomials in L, a rational
    /// value substitutes before output.
    #[arg(long, default_value = "symbolic", value_parser = parse_lambda)]
    pub lambda: LambdaArg,
}

#[derive(Parser, Debug)]
#[command(
    name = "whitney",
    version,
    about = "Degenerate r-Whitney/r-Stirling triangles, Dowling polynomials, and a boson normal-ordering engine"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit a triangle as JSON (default) or CSV with header n,k,value.
    Table(TableArgs),
    /// Run a numbered identity suite (or 'all') and report pass/fail.
    Verify(VerifyArgs),
    /// Evaluate a single Whitney entry or Dowling polynomial.
    Eval(EvalArgs),
    /// Read one operator expression from stdin and print its normal form.
    NormalOrder(NormalOrderArgs),
    /// Print exponential generating function coefficients.
    Egf(EgfArgs),
    /// Evaluate a Dowling polynomial by its exponentially-weighted series.
    Dobinski(DobinskiArgs),
}

fn parse_family(s: &str) -> Result<Family, String> {
    Family::from_token(s).ok_or_else(|| {
        let tokens: Vec<&str> = Family::ALL.iter().map(|f| f.token()).collect();
        format!("unknown family; expected one of: {}", tokens.join(", "))
    })
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Triangle family.
    #[arg(long, value_parser = parse_family)]
    pub family: Family,

    /// Largest row index to emit.
    #[arg(long)]
    pub nmax: usize,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Suite id: a number from THEOREM_MAP.md, or 'all'.
    #[arg(long)]
    pub theorem: String,

    /// Largest row index exercised by the suite.
    #[arg(long, default_value_t = 8)]
    pub nmax: usize,

    /// Default is a text report ending in PASS or FAIL; json/csv switch to
    /// machine-readable reports (csv keeps the final verdict line).
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum EvalTarget {
    /// A second-kind Whitney entry W(n, k).
    Whitney,
    /// A Dowling polynomial D(n, x).
    Dowling,
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    #[arg(long, value_enum)]
    pub target: EvalTarget,

    /// Row index n.
    #[arg(long)]
    pub n: usize,

    /// Column index k (whitney target only).
    #[arg(long)]
    pub k: Option<usize>,

    /// Evaluation point x (dowling target only).
    #[arg(long, value_parser = |s: &str| s.parse::<Rational>().map_err(|e| e.to_string()))]
    pub x: Option<Rational>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct NormalOrderArgs {
    // Output is always the documented textual rendering; a numeric --lambda
    // substitutes into the coefficients first.
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum EgfKind {
    /// Column EGF of the second-kind triangle; n!·coeff(t^n) = W(n, k).
    Whitney,
    /// Dowling EGF at fixed x; n!·coeff(t^n) = D(n, x).
    Dowling,
}

#[derive(Args, Debug)]
pub struct EgfArgs {
    #[arg(long, value_enum)]
    pub kind: EgfKind,

    /// Truncation order (inclusive).
    #[arg(long)]
    pub order: usize,

    /// Column index k (whitney kind only).
    #[arg(long)]
    pub k: Option<usize>,

    /// Evaluation point x (dowling kind only).
    #[arg(long, value_parser = |s: &str| s.parse::<Rational>().map_err(|e| e.to_string()))]
    pub x: Option<Rational>,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Args, Debug)]
pub struct DobinskiArgs {
    /// Degree n.
    #[arg(long)]
    pub n: usize,

    /// Evaluation point (nonnegative; negative values are rejected, not
    /// extrapolated).
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,

    /// Truncation tolerance.
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,

    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,

    #[command(flatten)]
    pub common: CommonArgs,
}

/// Runs a parsed command against the given streams and returns the process
/// exit code (0 success / all-pass, 1 verification failure, 2 usage error).
pub fn run(
    cli: &Cli,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let result = match &cli.command {
        Command::Table(args) => run_table(args, stdout),
        Command::Verify(args) => run_verify(args, stdout),
        Command::Eval(args) => run_eval(args, stdout),
        Command::NormalOrder(args) => run_normal_order(args, stdin, stdout),
        Command::Egf(args) => run_egf(args, stdout),
        Command::Dobinski(args) => run_dobinski(args, stdout),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
    }
}

fn io_err(e: std::io::Error) -> String {
    format!("io failure: {e}")
}

fn run_table(args: &TableArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let params = TriangleParams::new(args.family, args.common.m, args.common.r.clone())
        .map_err(|e| e.to_string())?;
    let tri = Triangle::new(params);
    match args.format {
        OutputFormat::Csv => {
            let csv = triangles::triangle_to_csv(&tri, args.nmax, args.common.lambda.value());
            stdout.write_all(csv.as_bytes()).map_err(io_err)?;
        }
        OutputFormat::Json => {
            let doc = TriangleDoc::from_triangle(&tri, args.nmax, args.common.lambda.value());
            let json = serde_json::to_string(&doc).map_err(|e| e.to_string())?;
            writeln!(stdout, "{json}").map_err(io_err)?;
        }
    }
    Ok(0)
}

fn run_verify(args: &VerifyArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let opts = suites::SuiteOptions {
        nmax: args.nmax,
        m: args.common.m,
        r: args.common.r.clone(),
    };
    let reports = if args.theorem == "all" {
        suites::run_all(&opts)
    } else {
        vec![suites::run_suite(&args.theorem, &opts).ok_or_else(|| {
            format!(
                "unknown suite {:?}; known: {} or all",
                args.theorem,
                suites::known_ids().join(", ")
            )
        })?]
    };
    let all_passed = reports.iter().all(|r| r.all_passed());

    match args.format {
        Some(OutputFormat::Json) => {
            let doc = serde_json::json!({
                "nmax": args.nmax,
                "m": args.common.m,
                "r": args.common.r.to_string(),
                "suites": reports.iter().map(|r| serde_json::json!({
                    "id": r.id,
                    "passed": r.all_passed(),
                    "checks": r.checks.iter().map(|c| serde_json::json!({
                        "label": c.label,
                        "passed": c.passed,
                        "counterexample": c.counterexample,
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
                "all_pass": all_passed,
            });
            writeln!(stdout, "{doc}").map_err(io_err)?;
        }
        Some(OutputFormat::Csv) => {
            writeln!(stdout, "suite,check,result").map_err(io_err)?;
            for r in &reports {
                for c in &r.checks {
                    writeln!(
                        stdout,
                        "{},{},{}",
                        r.id,
                        c.label,
                        if c.passed { "pass" } else { "fail" }
                    )
                    .map_err(io_err)?;
                }
            }
            writeln!(stdout, "{}", if all_passed { "PASS" } else { "FAIL" }).map_err(io_err)?;
        }
        None => {
            for r in &reports {
                let verdict = if r.all_passed() { "pass" } else { "FAIL" };
                writeln!(stdout, "suite {}: {verdict}", r.id).map_err(io_err)?;
                if let Some(c) = r.first_failure() {
                    writeln!(
                        stdout,
                        "  first counterexample ({}): {}",
                        c.label,
                        c.counterexample.as_deref().unwrap_or("not recorded")
                    )
                    .map_err(io_err)?;
                }
            }
            writeln!(stdout, "{}", if all_passed { "PASS" } else { "FAIL" }).map_err(io_err)?;
        }
    }
    Ok(if all_passed { 0 } else { 1 })
}

fn render_value(p: &LambdaPoly, lambda: &LambdaArg) -> serde_json::Value {
    match lambda.value() {
        Some(v) => serde_json::Value::String(lambda_eval(p, v).to_string()),
        None => serde_json::Value::Array(
            lambda_poly_to_strings(p)
                .into_iter()
                .map(serde_json::Value::String)
                .collect(),
        ),
    }
}

fn render_value_text(p: &LambdaPoly, lambda: &LambdaArg) -> String {
    match lambda.value() {
        Some(v) => lambda_eval(p, v).to_string(),
        None => p.to_string(),
    }
}

fn run_eval(args: &EvalArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let value = match args.target {
        EvalTarget::Whitney => {
            let k = args.k.ok_or("--k is required for --target whitney")?;
            triangles::whitney_second(args.common.m, &args.common.r, args.n as i64, k as i64)
        }
        EvalTarget::Dowling => {
            let x = args.x.clone().ok_or("--x is required for --target dowling")?;
            dowling::dowling_poly(args.common.m, &args.common.r, args.n).eval_x(&x)
        }
    };
    match args.format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "target": match args.target { EvalTarget::Whitney => "whitney", EvalTarget::Dowling => "dowling" },
                "m": args.common.m,
                "r": args.common.r.to_string(),
                "n": args.n,
                "k": args.k,
                "x": args.x.as_ref().map(|x| x.to_string()),
                "value": render_value(&value, &args.common.lambda),
            });
            writeln!(stdout, "{doc}").map_err(io_err)?;
        }
        OutputFormat::Csv => {
            writeln!(stdout, "{}", render_value_text(&value, &args.common.lambda))
                .map_err(io_err)?;
        }
    }
    Ok(0)
}

fn run_normal_order(
    args: &NormalOrderArgs,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
) -> Result<i32, String> {
    let mut source = String::new();
    stdin.read_to_string(&mut source).map_err(io_err)?;
    let expr = boson::parse(source.trim_end_matches('\n')).map_err(|e| e.to_string())?;
    let mut nf = boson::normal_order(&expr);
    if let Some(v) = args.common.lambda.value() {
        nf = nf.substitute_lambda(v);
    }
    writeln!(stdout, "{nf}").map_err(io_err)?;
    Ok(0)
}

fn run_egf(args: &EgfArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let series = match args.kind {
        EgfKind::Whitney => {
            let k = args.k.ok_or("--k is required for --kind whitney")?;
            if args.order < k {
                return Err("--order must be at least --k".into());
            }
            series::whitney_egf(args.common.m, &args.common.r, k, args.order)
        }
        EgfKind::Dowling => {
            let x = args.x.clone().ok_or("--x is required for --kind dowling")?;
            series::dowling_egf(args.common.m, &args.common.r, &x, args.order)
        }
    };
    match args.format {
        OutputFormat::Json => {
            let coeffs: Vec<serde_json::Value> = series
                .coeffs()
                .iter()
                .map(|c| render_value(c, &args.common.lambda))
                .collect();
            let doc = serde_json::json!({
                "kind": match args.kind { EgfKind::Whitney => "whitney", EgfKind::Dowling => "dowling" },
                "m": args.common.m,
                "r": args.common.r.to_string(),
                "k": args.k,
                "x": args.x.as_ref().map(|x| x.to_string()),
                "order": args.order,
                "coefficients": coeffs,
            });
            writeln!(stdout, "{doc}").map_err(io_err)?;
        }
        OutputFormat::Csv => {
            writeln!(stdout, "n,value").map_err(io_err)?;
            for (n, c) in series.coeffs().iter().enumerate() {
                writeln!(stdout, "{n},{}", render_value_text(c, &args.common.lambda))
                    .map_err(io_err)?;
            }
        }
    }
    Ok(0)
}

fn run_dobinski(args: &DobinskiArgs, stdout: &mut dyn Write) -> Result<i32, String> {
    let lambda_value = match &args.common.lambda {
        LambdaArg::Value(v) => v.to_f64().ok_or("lambda out of f64 range")?,
        LambdaArg::Symbolic => {
            return Err(
                "dobinski requires a numeric --lambda (the series is evaluated, not symbolic)"
                    .into(),
            )
        }
    };
    let value = dowling::dobinski_eval(
        args.common.m,
        &args.common.r,
        args.n,
        args.x,
        lambda_value,
        args.tol,
    )
    .map_err(|e| e.to_string())?;
    match args.format {
        OutputFormat::Json => {
            let doc = serde_json::json!({
                "m": args.common.m,
                "r": args.common.r.to_string(),
                "n": args.n,
                "x": args.x,
                "lambda": lambda_value,
                "tol": args.tol,
                "value": value,
            });
            writeln!(stdout, "{doc}").map_err(io_err)?;
        }
        OutputFormat::Csv => {
            writeln!(stdout, "{value}").map_err(io_err)?;
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn run_cli(argv: &[&str], input: &str) -> (i32, String, String) {
        let cli = Cli::try_parse_from(argv).expect("argv parses");
        let mut stdin = Cursor::new(input.as_bytes().to_vec());
        let mut stdout = Vec::new();
        let mut stderr = Vec::new();
        let code = run(&cli, &mut stdin, &mut stdout, &mut stderr);
        (
            code,
            String::from_utf8(stdout).unwrap(),
            String::from_utf8(stderr).unwrap(),
        )
    }

    #[test]
    fn table_csv_contains_boundary_entry() {
        let (code, out, _) = run_cli(
            &[
                "whitney", "table", "--family", "whitney-second", "--m", "2", "--r", "1",
                "--nmax", "3", "--format", "csv",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("n,k,value"));
        assert!(out.lines().any(|l| l == "3,0,2*L^2-3*L+1"), "{out}");
    }

    #[test]
    fn table_json_round_trips() {
        let (code, out, _) = run_cli(
            &["whitney", "table", "--family", "stirling2-deg", "--nmax", "4"],
            "",
        );
        assert_eq!(code, 0);
        let doc: TriangleDoc = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(serde_json::to_string(&doc).unwrap(), out.trim());
        doc.decode().unwrap();
    }

    #[test]
    fn table_rejects_invalid_family_params() {
        let (code, _, err) = run_cli(
            &[
                "whitney", "table", "--family", "stirling1-deg", "--m", "2", "--nmax", "3",
            ],
            "",
        );
        assert_eq!(code, 2);
        assert!(err.contains("m = 1"), "{err}");
    }

    #[test]
    fn normal_order_golden_line() {
        let (code, out, _) = run_cli(&["whitney", "normal-order"], "a*ad");
        assert_eq!(code, 0);
        assert_eq!(out, "(1)*ad a + (1)\n");
    }

    #[test]
    fn normal_order_reports_offset() {
        let (code, _, err) = run_cli(&["whitney", "normal-order"], "a +* ad");
        assert_eq!(code, 2);
        assert!(err.contains("offset 3"), "{err}");
    }

    #[test]
    fn eval_whitney_entry() {
        let (code, out, _) = run_cli(
            &[
                "whitney", "eval", "--target", "whitney", "--n", "3", "--k", "0", "--m", "2",
                "--r", "1", "--format", "csv",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "2*L^2-3*L+1");
    }

    #[test]
    fn eval_requires_matching_flags() {
        let (code, _, err) = run_cli(&["whitney", "eval", "--target", "whitney", "--n", "3"], "");
        assert_eq!(code, 2);
        assert!(err.contains("--k"), "{err}");
    }

    #[test]
    fn dobinski_requires_numeric_lambda() {
        let (code, _, err) = run_cli(&["whitney", "dobinski", "--n", "2", "--x", "1.0"], "");
        assert_eq!(code, 2);
        assert!(err.contains("numeric --lambda"), "{err}");
    }

    #[test]
    fn verify_single_suite_prints_final_verdict() {
        let (code, out, _) = run_cli(
            &[
                "whitney", "verify", "--theorem", "12", "--nmax", "5", "--m", "2", "--r", "1",
            ],
            "",
        );
        assert_eq!(code, 0);
        assert_eq!(out.lines().last(), Some("PASS"));
    }

    #[test]
    fn egf_csv_lists_coefficients() {
        let (code, out, _) = run_cli(
            &[
                "whitney", "egf", "--kind", "whitney", "--k", "0", "--order", "3", "--m", "2",
                "--r", "1", "--format", "csv",
            ],
            "",
        );
        assert_eq!(code, 0);
        // 3!·coeff(t³) = (1)(1-λ)(1-2λ), so the raw coefficient is that over 6
        assert!(out.lines().any(|l| l.starts_with("3,")), "{out}");
    }
}
