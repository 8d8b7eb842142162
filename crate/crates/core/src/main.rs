//! Command-line front end for the genus pipeline.
//!
//! Exit codes: 0 when every cross-check passes, 1 when a computation
//! disagrees or smoothness cannot be certified, 2 for invalid input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use fermat_genus::cover::Weights;
use fermat_genus::curve::OverallVerdict;
use fermat_genus::report::{full_report, sweep, sweep_to_json, sweep_to_text, FullReport};
use serde_json::json;
use std::io::Write;
use std::ops::Range;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fermat-genus",
    version,
    about = "Genus of the curve x0^(amn) + x1^(an) - x2^(am) in the weighted plane P(1, m, n), \
             with exact smoothness certification and independent cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: charts, relations, resolution, smoothness, genus
    Report(SingleArgs),
    /// Run the pipeline over weight ranges and tabulate the outcomes
    Sweep(SweepArgs),
    /// Continued-fraction resolution data and the chart curves
    Resolve(SingleArgs),
    /// Smoothness certificate for every chart of the resolved surface
    Smoothness(SingleArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct SingleArgs {
    /// Shared factor a of the weights (a, m, n)
    #[arg(long)]
    a: i64,
    /// Weight m (coprime to n; swapped with n if given in the wrong order)
    #[arg(long)]
    m: i64,
    /// Weight n
    #[arg(long)]
    n: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add this value to the lattice-point count (testing aid)
    #[arg(long, default_value_t = 0, hide = true)]
    oracle_bias: i64,
}

#[derive(Args)]
struct SweepArgs {
    /// Range for a: "lo..hi" (half-open) or a single value
    #[arg(long, default_value = "1..3")]
    a: String,
    /// Range for m
    #[arg(long, default_value = "1..4")]
    m: String,
    /// Range for n
    #[arg(long, default_value = "2..6")]
    n: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add this value to the lattice-point count (testing aid)
    #[arg(long, default_value_t = 0, hide = true)]
    oracle_bias: i64,
}

fn parse_range(text: &str, what: &str) -> Result<Range<i64>, String> {
    let parse_end = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid {what} range {text:?}: {s:?} is not an integer"))
    };
    if let Some((lo, hi)) = text.split_once("..") {
        let (lo, hi) = (parse_end(lo)?, parse_end(hi)?);
        if lo >= hi {
            return Err(format!("invalid {what} range {text:?}: need lo < hi (half-open)"));
        }
        Ok(lo..hi)
    } else {
        let v = parse_end(text)?;
        Ok(v..v + 1)
    }
}

/// Builds weights from CLI input, swapping m and n when needed.
fn weights_from_args(a: i64, m: i64, n: i64) -> Result<(Weights, Option<String>), String> {
    let (m, n, note) = if m > n {
        (n, m, Some(format!("inputs had m > n; using m = {n}, n = {m}")))
    } else {
        (m, n, None)
    };
    let w = Weights::new(a, m, n).map_err(|e| e.to_string())?;
    Ok((w, note))
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn json_string(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn resolve_text(r: &FullReport) -> String {
    let mut s = format!("weights {}\n", r.weights);
    s.push_str(&format!("digits: {:?}\n", r.resolution.b));
    s.push_str(&format!("self-intersections: {:?}\n", r.resolution.self_intersections()));
    let rays: Vec<String> = r.resolution.rays.iter().map(|p| p.to_string()).collect();
    s.push_str(&format!("rays: {}\n", rays.join(", ")));
    for f in &r.chart_curves {
        s.push_str(&format!("  {f}\n"));
    }
    s.push_str(&format!(
        "chart recursion F_(j+1) = F_j(x^b y, 1/x): {}\n",
        if r.recursion_verified { "verified" } else { "FAILED" }
    ));
    s
}

fn smoothness_text(r: &FullReport) -> String {
    let mut s = format!("weights {}\n", r.weights);
    for c in &r.certificate.charts {
        s.push_str(&format!("{}: {} -> {}\n", c.chart, c.method, c.verdict));
        if let Some(note) = &c.new_line_note {
            s.push_str(&format!("    {note}\n"));
        }
    }
    s.push_str(&format!("overall: {}\n", r.certificate.overall));
    s
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Report(args) => {
            let (w, note) = weights_from_args(args.a, args.m, args.n)?;
            let r = full_report(&w, args.oracle_bias, note);
            let text = match args.format {
                Format::Text => r.to_text(),
                Format::Json => json_string(&r.to_json()),
            };
            emit(&text, &args.out)?;
            Ok(if r.passed() { 0 } else { 1 })
        }
        Command::Sweep(args) => {
            let a = parse_range(&args.a, "a")?;
            let m = parse_range(&args.m, "m")?;
            let n = parse_range(&args.n, "n")?;
            let cases = sweep(a, m, n, args.oracle_bias);
            if cases.is_empty() {
                return Err("the given ranges contain no valid weight triple".into());
            }
            let text = match args.format {
                Format::Text => sweep_to_text(&cases),
                Format::Json => json_string(&sweep_to_json(&cases)),
            };
            emit(&text, &args.out)?;
            Ok(if cases.iter().all(|c| c.passed) { 0 } else { 1 })
        }
        Command::Resolve(args) => {
            let (w, note) = weights_from_args(args.a, args.m, args.n)?;
            let r = full_report(&w, 0, note);
            let text = match args.format {
                Format::Text => resolve_text(&r),
                Format::Json => {
                    let v = r.to_json();
                    json_string(&json!({ "input": v["input"], "resolution": v["resolution"] }))
                }
            };
            emit(&text, &args.out)?;
            Ok(0)
        }
        Command::Smoothness(args) => {
            let (w, note) = weights_from_args(args.a, args.m, args.n)?;
            let r = full_report(&w, 0, note);
            let text = match args.format {
                Format::Text => smoothness_text(&r),
                Format::Json => {
                    let v = r.to_json();
                    json_string(&json!({ "input": v["input"], "smoothness": v["smoothness"] }))
                }
            };
            emit(&text, &args.out)?;
            Ok(if r.certificate.overall == OverallVerdict::Smooth { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
