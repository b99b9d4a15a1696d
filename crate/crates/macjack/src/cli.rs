//! Command-line front end: expansion queries, Pieri/norm tables, sweep
//! verification, and deterministic JSON/LaTeX/text emission.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::coeff::RatFunc;
use crate::conjecture_lab::{conjecture_sweep, Status, SweepBounds, SweepKind, VerificationReport};
use crate::error::{Error, Result};
use crate::jack::{conjecture11_sweep, limit_bridge, rodrigues_jack};
use crate::macdonald::{norm_closed_form_ratio, norm_ratio, pieri_expand, rodrigues};
use crate::partitions::Partition;
use crate::symmetric::SymFunc;

#[derive(Debug, Parser)]
#[command(name = "macjack", version, about = "Exact Macdonald and Jack polynomial computations")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand a Macdonald polynomial in the monomial basis.
    Expand(ExpandArgs),
    /// Run verification sweeps and write a report.
    Verify(VerifyArgs),
    /// Emit Pieri or norm tables.
    Table(TableArgs),
    /// Jack-side commands.
    Jack(JackArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    /// Monic.
    P,
    /// Integral form.
    J,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    Qt,
    Alpha,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, Args)]
struct ExpandArgs {
    /// Partition, e.g. "(2,1)".
    #[arg(long)]
    partition: String,
    #[arg(long, default_value_t = 3)]
    n_vars: usize,
    #[arg(long, value_enum, default_value_t = Basis::J)]
    basis: Basis,
    #[arg(long, value_enum, default_value_t = Side::Qt)]
    side: Side,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this path instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Number of worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Optional TOML config file; explicit flags win.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Named suite: proven, conjectures, or all.
    #[arg(long, conflicts_with = "conjecture")]
    suite: Option<String>,
    /// Single conjecture number: 4, 5, 8 or 11.
    #[arg(long)]
    conjecture: Option<u32>,
    #[arg(long)]
    n_vars: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    /// Inclusive kappa range, e.g. "0..4".
    #[arg(long)]
    kappa_range: Option<String>,
    /// Record wall-clock timings in the report (breaks byte-stability).
    #[arg(long, default_value_t = false)]
    timings: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct TableArgs {
    /// Table kind: pieri or norm.
    #[arg(long, default_value = "pieri")]
    kind: String,
    #[arg(long, default_value_t = 3)]
    n_vars: usize,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct JackArgs {
    #[command(subcommand)]
    command: JackCommand,
}

#[derive(Debug, Subcommand)]
enum JackCommand {
    /// Expand a Jack polynomial in the monomial basis.
    Expand(JackExpandArgs),
    /// Check the q = t^a limit against the alpha-side construction.
    Bridge(BridgeArgs),
}

#[derive(Debug, Args)]
struct JackExpandArgs {
    #[arg(long)]
    partition: String,
    #[arg(long, default_value_t = 3)]
    n_vars: usize,
    #[arg(long, value_enum, default_value_t = Basis::J)]
    basis: Basis,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Debug, Args)]
struct BridgeArgs {
    /// Integer value substituted for alpha (q = t^alpha).
    #[arg(long, default_value_t = 1)]
    alpha: u32,
    #[arg(long, default_value_t = 3)]
    max_degree: u32,
    #[arg(long, default_value_t = 3)]
    n_vars: usize,
    #[command(flatten)]
    out: OutputArgs,
}

/// Config-file fallbacks for long-running sweeps; any flag given on the
/// command line takes precedence.
#[derive(Debug, Default, Deserialize)]
struct FileConfig {
    n_vars: Option<usize>,
    max_degree: Option<u32>,
    kappa_range: Option<[i64; 2]>,
    jobs: Option<usize>,
}

// ---------------------------------------------------------------------------
// Emission
// ---------------------------------------------------------------------------

fn bracket(lam: &Partition) -> String {
    let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
    format!("m[{}]", parts.join(","))
}

fn latex_partition(lam: &Partition) -> String {
    let parts: Vec<String> = lam.parts().iter().map(|p| p.to_string()).collect();
    format!("m_{{({})}}", parts.join(","))
}

fn latex_coeff(c: &RatFunc) -> String {
    let mut s = c.render();
    s = s.replace("alpha", r"\alpha ").replace('*', r" ");
    // wrap multi-digit exponents for TeX
    let mut out = String::new();
    let mut chars = s.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '^' {
            let mut digits = String::new();
            while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                digits.push(chars.next().unwrap());
            }
            out.push('{');
            out.push_str(&digits);
            out.push('}');
        }
    }
    out
}

/// Terms in reverse-lexicographic partition order.
fn ordered_terms(f: &SymFunc) -> Vec<(&Partition, &RatFunc)> {
    let mut terms: Vec<_> = f.terms().collect();
    terms.reverse();
    terms
}

/// Canonical text form of a monomial-basis expansion, e.g. "(1-t)*m[1]".
pub fn render_expansion_text(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let pieces: Vec<String> = ordered_terms(f)
        .into_iter()
        .map(|(lam, c)| {
            if lam.is_empty() {
                if c.is_one() {
                    "1".to_string()
                } else {
                    format!("({})", c.render())
                }
            } else {
                format!("({})*{}", c.render(), bracket(lam))
            }
        })
        .collect();
    pieces.join(" + ")
}

fn render_expansion_latex(f: &SymFunc) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let pieces: Vec<String> = ordered_terms(f)
        .into_iter()
        .map(|(lam, c)| {
            if lam.is_empty() {
                latex_coeff(c)
            } else {
                format!(r"\left({}\right)\,{}", latex_coeff(c), latex_partition(lam))
            }
        })
        .collect();
    format!("$ {} $", pieces.join(" + "))
}

#[derive(Serialize)]
struct ExpansionTerm {
    partition: String,
    coefficient: String,
}

#[derive(Serialize)]
struct ExpansionReport {
    basis: String,
    side: String,
    partition: String,
    n_vars: usize,
    terms: Vec<ExpansionTerm>,
}

fn render_expansion_json(
    f: &SymFunc,
    basis: Basis,
    side: Side,
    lam: &Partition,
) -> Result<String> {
    let report = ExpansionReport {
        basis: match basis {
            Basis::P => "P".into(),
            Basis::J => "J".into(),
        },
        side: match side {
            Side::Qt => "qt".into(),
            Side::Alpha => "alpha".into(),
        },
        partition: lam.to_string(),
        n_vars: f.n_vars(),
        terms: ordered_terms(f)
            .into_iter()
            .map(|(l, c)| ExpansionTerm {
                partition: l.to_string(),
                coefficient: c.render(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&report).map_err(|e| Error::Invalid(e.to_string()))
}

fn emit(out: &OutputArgs, content: &str) -> Result<()> {
    let content = if content.ends_with('\n') {
        content.to_string()
    } else {
        format!("{content}\n")
    };
    match &out.out {
        Some(path) => {
            fs::write(path, content).map_err(|e| Error::Invalid(e.to_string()))?;
        }
        None => print!("{content}"),
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

fn parse_partition(s: &str) -> Result<Partition> {
    Partition::from_str(s)
}

fn cmd_expand(args: &ExpandArgs) -> Result<i32> {
    let lam = parse_partition(&args.partition)?;
    let f = match args.side {
        Side::Qt => match args.basis {
            Basis::J => rodrigues(&lam, args.n_vars)?,
            Basis::P => crate::macdonald::macdonald_p(&lam, args.n_vars)?,
        },
        Side::Alpha => match args.basis {
            Basis::J => rodrigues_jack(&lam, args.n_vars)?,
            Basis::P => crate::jack::jack_p(&lam, args.n_vars)?,
        },
    };
    let rendered = match args.out.format {
        Format::Text => render_expansion_text(&f),
        Format::Latex => render_expansion_latex(&f),
        Format::Json => render_expansion_json(&f, args.basis, args.side, &lam)?,
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

fn parse_kappa_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::Invalid(format!("bad kappa range: {s}")))?;
    let lo: i64 = a.trim().parse().map_err(|_| Error::Invalid(format!("bad kappa range: {s}")))?;
    let hi: i64 = b.trim().parse().map_err(|_| Error::Invalid(format!("bad kappa range: {s}")))?;
    if lo > hi {
        return Err(Error::Invalid(format!("empty kappa range: {s}")));
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct SweepSummary {
    verified: usize,
    refuted: usize,
    skipped: usize,
}

#[derive(Serialize)]
struct VerifyReport {
    suite: String,
    n_vars: usize,
    max_degree: u32,
    kappa_range: [i64; 2],
    summary: SweepSummary,
    reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    total_millis: Option<u128>,
}

fn load_config(out: &OutputArgs) -> Result<FileConfig> {
    match &out.config {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Error::Invalid(e.to_string()))?;
            toml::from_str(&text).map_err(|e| Error::Invalid(e.to_string()))
        }
        None => Ok(FileConfig::default()),
    }
}

fn configure_jobs(explicit: Option<usize>, file: &FileConfig) {
    if let Some(j) = explicit.or(file.jobs) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let file = load_config(&args.out)?;
    configure_jobs(args.out.jobs, &file);
    let bounds = SweepBounds {
        n_max: args.n_vars.or(file.n_vars).unwrap_or(3),
        deg_max: args.max_degree.or(file.max_degree).unwrap_or(4),
        kappa_range: match &args.kappa_range {
            Some(s) => parse_kappa_range(s)?,
            None => file.kappa_range.map(|[a, b]| (a, b)).unwrap_or((0, 3)),
        },
    };
    if bounds.n_max == 0 {
        return Err(Error::Invalid("n-vars must be positive".into()));
    }

    let proven_kinds = [SweepKind::Intertwining, SweepKind::TildePlain, SweepKind::GarsiaTesler];
    let conjecture_kinds = [
        SweepKind::Conjecture4,
        SweepKind::Conjecture5,
        SweepKind::Integrality,
        SweepKind::Conjecture8,
        SweepKind::Commuting,
    ];

    let (suite_name, kinds, with_c11): (String, Vec<SweepKind>, bool) =
        match (&args.suite, args.conjecture) {
            (Some(s), None) => match s.as_str() {
                "proven" => (s.clone(), proven_kinds.to_vec(), false),
                "conjectures" => (s.clone(), conjecture_kinds.to_vec(), true),
                "all" => (
                    s.clone(),
                    proven_kinds.iter().chain(&conjecture_kinds).copied().collect(),
                    true,
                ),
                other => return Err(Error::Invalid(format!("unknown suite: {other}"))),
            },
            (None, Some(c)) => match c {
                4 => ("conjecture-4".into(), vec![SweepKind::Conjecture4], false),
                5 => (
                    "conjecture-5".into(),
                    vec![SweepKind::Conjecture5, SweepKind::Integrality],
                    false,
                ),
                8 => (
                    "conjecture-8".into(),
                    vec![SweepKind::Conjecture8, SweepKind::Commuting],
                    false,
                ),
                11 => ("conjecture-11".into(), vec![], true),
                other => return Err(Error::Invalid(format!("unknown conjecture: {other}"))),
            },
            (None, None) => ("all".into(), proven_kinds.iter().chain(&conjecture_kinds).copied().collect(), true),
            (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        };

    let start = std::time::Instant::now();
    let mut reports = Vec::new();
    let mut hard_failure = false;
    for kind in &kinds {
        let batch = conjecture_sweep(*kind, &bounds);
        if kind.is_proven() && batch.iter().any(|r| r.status == Status::Refuted) {
            hard_failure = true;
        }
        reports.extend(batch);
    }
    if with_c11 {
        reports.extend(conjecture11_sweep(&bounds));
    }

    let summary = SweepSummary {
        verified: reports.iter().filter(|r| r.status == Status::Verified).count(),
        refuted: reports.iter().filter(|r| r.status == Status::Refuted).count(),
        skipped: reports.iter().filter(|r| r.status == Status::Skipped).count(),
    };
    let report = VerifyReport {
        suite: suite_name,
        n_vars: bounds.n_max,
        max_degree: bounds.deg_max,
        kappa_range: [bounds.kappa_range.0, bounds.kappa_range.1],
        summary,
        reports,
        total_millis: args.timings.then(|| start.elapsed().as_millis()),
    };

    let rendered = match args.out.format {
        Format::Json => serde_json::to_string_pretty(&report)
            .map_err(|e| Error::Invalid(e.to_string()))?,
        Format::Text | Format::Latex => {
            let mut lines = vec![format!(
                "suite {}: {} verified, {} refuted, {} skipped",
                report.suite, report.summary.verified, report.summary.refuted, report.summary.skipped
            )];
            for r in &report.reports {
                if r.status != Status::Verified {
                    lines.push(format!(
                        "{:?} {} {}: {}",
                        r.status,
                        r.conjecture,
                        r.case,
                        r.witness.as_deref().unwrap_or("")
                    ));
                }
            }
            lines.join("\n")
        }
    };
    emit(&args.out, &rendered)?;
    Ok(if hard_failure { 1 } else { 0 })
}

fn cmd_table(args: &TableArgs) -> Result<i32> {
    let n = args.n_vars;
    let mut lams = Vec::new();
    for deg in 0..=args.max_degree {
        lams.extend(Partition::all(deg, n));
    }
    let mut lines = Vec::new();
    match args.kind.as_str() {
        "pieri" => {
            for lam in &lams {
                for k in 1..=n {
                    let terms: Vec<String> = pieri_expand(lam, k, n)?
                        .into_iter()
                        .map(|(mu, c)| format!("{mu}: {}", c.render()))
                        .collect();
                    lines.push(format!("e{k} * P{lam} = {{ {} }}", terms.join(", ")));
                }
            }
        }
        "norm" => {
            for lam in &lams {
                let rec = norm_ratio(lam, n)?;
                let closed = norm_closed_form_ratio(lam, n)?;
                let mark = if rec == closed { "ok" } else { "MISMATCH" };
                lines.push(format!(
                    "{lam}: recursion = {}, closed = {}, {mark}",
                    rec.render(),
                    closed.render()
                ));
            }
        }
        other => return Err(Error::Invalid(format!("unknown table kind: {other}"))),
    }
    emit(&args.out, &lines.join("\n"))?;
    Ok(0)
}

fn cmd_jack_expand(args: &JackExpandArgs) -> Result<i32> {
    let lam = parse_partition(&args.partition)?;
    let f = match args.basis {
        Basis::J => rodrigues_jack(&lam, args.n_vars)?,
        Basis::P => crate::jack::jack_p(&lam, args.n_vars)?,
    };
    let rendered = match args.out.format {
        Format::Text => render_expansion_text(&f),
        Format::Latex => render_expansion_latex(&f),
        Format::Json => render_expansion_json(&f, args.basis, Side::Alpha, &lam)?,
    };
    emit(&args.out, &rendered)?;
    Ok(0)
}

fn cmd_jack_bridge(args: &BridgeArgs) -> Result<i32> {
    let n = args.n_vars;
    let mut lines = Vec::new();
    let mut all_ok = true;
    for deg in 0..=args.max_degree {
        for lam in Partition::all(deg, n) {
            let ok = limit_bridge(&lam, n, args.alpha)?;
            all_ok &= ok;
            lines.push(format!(
                "alpha={} N={} lambda={}: {}",
                args.alpha,
                n,
                lam,
                if ok { "equal" } else { "MISMATCH" }
            ));
        }
    }
    emit(&args.out, &lines.join("\n"))?;
    Ok(if all_ok { 0 } else { 1 })
}

/// Parse arguments and run; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let result = match &cli.command {
        Command::Expand(a) => cmd_expand(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Table(a) => cmd_table(a),
        Command::Jack(j) => match &j.command {
            JackCommand::Expand(a) => cmd_jack_expand(a),
            JackCommand::Bridge(a) => cmd_jack_bridge(a),
        },
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::VarSet;

    #[test]
    fn text_rendering_golden() {
        let j = rodrigues(&Partition::new(vec![1]).unwrap(), 2).unwrap();
        assert_eq!(render_expansion_text(&j), "(1-t)*m[1]");
        let one = SymFunc::one(2, VarSet::Qt);
        assert_eq!(render_expansion_text(&one), "1");
    }

    #[test]
    fn latex_rendering_compiles_shape() {
        let j = rodrigues(&Partition::new(vec![2]).unwrap(), 2).unwrap();
        let s = render_expansion_latex(&j);
        assert!(s.starts_with("$ ") && s.ends_with(" $"), "{s}");
        assert!(s.contains("m_{(2)}"), "{s}");
        assert!(!s.contains('*'), "{s}");
    }

    #[test]
    fn kappa_range_parsing() {
        assert_eq!(parse_kappa_range("0..4").unwrap(), (0, 4));
        assert_eq!(parse_kappa_range("-1 .. 2").unwrap(), (-1, 2));
        assert!(parse_kappa_range("3..1").is_err());
        assert!(parse_kappa_range("junk").is_err());
    }

    #[test]
    fn json_round_trips() {
        let lam = Partition::new(vec![1]).unwrap();
        let j = rodrigues(&lam, 2).unwrap();
        let s = render_expansion_json(&j, Basis::J, Side::Qt, &lam).unwrap();
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["basis"], "J");
        assert_eq!(v["terms"][0]["coefficient"], "1-t");
    }
}
