//! `aenergy`: spectra, energies and energy bounds from the command line.
//!
//! Exit codes: 0 ok, 1 reproduction mismatch, 2 bound violated, 64 usage.

use std::io::Write;
use std::process::ExitCode;

use aenergy::harness::{self, CorpusSpec, RandomSpec, SweepOptions, Table};
use aenergy::io::GraphSpec;
use aenergy::Error;
use aenergy_core::bounds::{self, AlphaFacts, GraphFacts, Sense, Side};
use aenergy_core::spectra::{self, graph_spectrum};
use aenergy_core::{BoundId, Evaluation, FamilySpec, MatrixKind};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const EXIT_MISMATCH: u8 = 1;
const EXIT_VIOLATION: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Graph specs: `name:params` (path, cycle, complete, bipartite, star,
/// doublestar, wheel, ladder, book, friendship, comb), `g6:<graph6>`, or
/// `file:<path>` holding graph6 or a 0-based edge list (`n m` header,
/// then `u v` per line).
#[derive(Parser, Debug)]
#[command(name = "aenergy", version, about = "A_alpha spectra, energies and energy bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Eigenvalues, largest first.
    Spectrum {
        graph: GraphSpec,
        #[arg(long, value_enum, default_value_t = Matrix::Aalpha)]
        matrix: Matrix,
        /// Required for `--matrix aalpha`.
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Energy, mean shift and sigma-index.
    Energy {
        graph: GraphSpec,
        #[arg(long, value_enum, default_value_t = Matrix::Aalpha)]
        kind: Matrix,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Every bound and relation at one alpha. Exits 2 if one is violated.
    Bounds {
        graph: GraphSpec,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Sweep a corpus over an alpha grid. Exits 2 on any violation.
    Verify {
        /// Every labeled graph up to this order (at most 7; 0 for none).
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Comma-separated alphas in [0, 1). Default: 0, 0.05, ..., 0.95 plus n/(2(n-1)).
        #[arg(long, value_delimiter = ',')]
        alphas: Option<Vec<f64>>,
        /// G(n, p) block as `n,p,count,seed`; repeatable.
        #[arg(long, value_parser = parse_random)]
        random: Vec<RandomSpec>,
        /// Add the standard random grid (n 8..20, p 0.2/0.5/0.8) with this many graphs per cell.
        #[arg(long)]
        random_grid: Option<usize>,
        /// Extra family graphs, e.g. `--family star:20`; repeatable.
        #[arg(long)]
        family: Vec<String>,
        /// Restrict to these bound ids (comma-separated).
        #[arg(long, value_delimiter = ',')]
        bounds: Option<Vec<String>>,
        /// Also check the equality cases; a failing case exits 1.
        #[arg(long)]
        equality: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, env = "AENERGY_JOBS", default_value_t = 1)]
        jobs: usize,
    },
    /// Recompute a published table. Exits 1 naming the first differing cell.
    Reproduce {
        #[arg(value_enum)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Matrix {
    Adj,
    Lap,
    Slap,
    Aalpha,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Target {
    Table1,
    Remark32,
    All,
}

fn parse_random(s: &str) -> Result<RandomSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n, p, count, seed] = parts[..] else {
        return Err("expected n,p,count,seed".into());
    };
    Ok(RandomSpec {
        n: n.parse().map_err(|e| format!("n: {e}"))?,
        p: p.parse().map_err(|e| format!("p: {e}"))?,
        count: count.parse().map_err(|e| format!("count: {e}"))?,
        seed: seed.parse().map_err(|e| format!("seed: {e}"))?,
    })
}

/// 10 significant digits; magnitudes below 1e-12 print as 0.
fn num(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let rounded: f64 = format!("{x:.9e}").parse().expect("float round trip");
    rounded.to_string()
}

fn kind(matrix: Matrix, alpha: Option<f64>) -> Result<MatrixKind, Failure> {
    Ok(match (matrix, alpha) {
        (Matrix::Adj, _) => MatrixKind::Adjacency,
        (Matrix::Lap, _) => MatrixKind::Laplacian,
        (Matrix::Slap, _) => MatrixKind::SignlessLaplacian,
        (Matrix::Aalpha, Some(a)) => MatrixKind::AAlpha(a),
        (Matrix::Aalpha, None) => return Err(Failure::Usage("--alpha is required for the A_alpha matrix".into())),
    })
}

fn kind_name(k: MatrixKind) -> String {
    match k {
        MatrixKind::Adjacency => "adj".into(),
        MatrixKind::Laplacian => "lap".into(),
        MatrixKind::SignlessLaplacian => "slap".into(),
        MatrixKind::AAlpha(a) => format!("aalpha({})", num(a)),
    }
}

enum Failure {
    Usage(String),
    Mismatch(String),
    Violation,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ReproductionFailure { .. } => Failure::Mismatch(e.to_string()),
            Error::Core(aenergy_core::Error::NoConvergence { .. } | aenergy_core::Error::NumericalInput) => {
                Failure::Mismatch(e.to_string())
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<aenergy_core::Error> for Failure {
    fn from(e: aenergy_core::Error) -> Self {
        Error::from(e).into()
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    let _ = std::io::stdout().lock().write_all(out.as_bytes());
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Mismatch(msg)) => {
            eprintln!("mismatch: {msg}");
            ExitCode::from(EXIT_MISMATCH)
        }
        Err(Failure::Violation) => {
            eprintln!("bound violated");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    use std::fmt::Write;
    match command {
        Command::Spectrum { graph, matrix, alpha, format } => {
            let g = graph.load()?;
            let k = kind(matrix, alpha)?;
            let s = graph_spectrum(&g, k)?;
            match format {
                Format::Json => {
                    let v = json!({ "graph": graph.to_string(), "matrix": kind_name(k), "eigenvalues": s.values() });
                    writeln!(out, "{v}").unwrap();
                }
                Format::Table | Format::Csv => {
                    let sep = if format == Format::Csv { "," } else { " " };
                    let vals: Vec<String> = s.values().iter().map(|&x| num(x)).collect();
                    writeln!(out, "{}", vals.join(sep)).unwrap();
                }
            }
        }
        Command::Energy { graph, kind: matrix, alpha, format } => {
            let g = graph.load()?;
            let k = kind(matrix, alpha)?;
            let r = spectra::energy(&g, k)?;
            let sigma = r.sigma_index();
            match format {
                Format::Json => {
                    let v = json!({
                        "graph": graph.to_string(),
                        "kind": kind_name(k),
                        "energy": r.energy,
                        "mean_shift": r.mean_shift,
                        "sigma_index": sigma,
                    });
                    writeln!(out, "{v}").unwrap();
                }
                Format::Csv => {
                    writeln!(out, "kind,energy,mean_shift,sigma_index").unwrap();
                    writeln!(out, "{},{},{},{sigma}", kind_name(k), num(r.energy), num(r.mean_shift)).unwrap();
                }
                Format::Table => {
                    writeln!(out, "energy      {}", num(r.energy)).unwrap();
                    writeln!(out, "mean_shift  {}", num(r.mean_shift)).unwrap();
                    writeln!(out, "sigma_index {sigma}").unwrap();
                }
            }
        }
        Command::Bounds { graph, alpha, format } => {
            if !(0.0..1.0).contains(&alpha) {
                return Err(Failure::Usage(format!("alpha {alpha} outside [0, 1)")));
            }
            let g = graph.load()?;
            let evals = bounds::evaluate_all(&GraphFacts::new(&g)?, &AlphaFacts::new(&g, alpha)?);
            write_bounds(out, &evals, format);
            if evals.iter().any(Evaluation::is_violation) {
                return Err(Failure::Violation);
            }
        }
        Command::Verify { max_n, alphas, random, random_grid, family, bounds, equality, format, jobs } => {
            let families = family
                .iter()
                .map(|f| aenergy::io::parse_family_spec(f))
                .collect::<Result<Vec<FamilySpec>, _>>()?;
            let mut corpus = CorpusSpec { exhaustive_max_n: max_n, random, families };
            if let Some(count) = random_grid {
                corpus.random.extend(CorpusSpec::random_grid(count));
            }
            let ids = match bounds {
                None => BoundId::ALL.to_vec(),
                Some(list) => list
                    .iter()
                    .map(|s| s.trim().parse::<BoundId>().map_err(|_| Failure::Usage(format!("unknown bound id `{s}`"))))
                    .collect::<Result<_, _>>()?,
            };
            let report = harness::sweep(&corpus, &SweepOptions { alphas, bounds: ids, jobs })?;
            match format {
                Format::Json => writeln!(out, "{}", report.to_json()).unwrap(),
                Format::Csv => out.push_str(&report.to_csv()),
                Format::Table => {
                    writeln!(out, "{:<10} {:>9} {:>10} {:>14} {:>10}", "bound", "count", "applicable", "min_slack", "violations")
                        .unwrap();
                    for (id, s) in report.entries() {
                        let min = s.min_slack.map(num).unwrap_or_else(|| "-".into());
                        writeln!(out, "{:<10} {:>9} {:>10} {:>14} {:>10}", id.as_str(), s.count, s.applicable, min, s.violations.len())
                            .unwrap();
                    }
                }
            }
            let mut failed_equality = None;
            if equality {
                let cases = harness::equality_suite()?;
                let failing: Vec<_> = cases.iter().filter(|c| !c.holds).collect();
                writeln!(out, "equality cases: {} checked, {} failing", cases.len(), failing.len()).unwrap();
                for c in &failing {
                    writeln!(out, "  {} alpha={} {} gap={:?}", c.graph, num(c.alpha), c.bound_id, c.gap).unwrap();
                }
                if !failing.is_empty() {
                    failed_equality = Some(format!("{} equality cases fail", failing.len()));
                }
            }
            if !report.passed() {
                return Err(Failure::Violation);
            }
            if let Some(msg) = failed_equality {
                return Err(Failure::Mismatch(msg));
            }
        }
        Command::Reproduce { target, format } => {
            let tables: Vec<Table> = match target {
                Target::Table1 => vec![harness::reproduce_table1()?],
                Target::Remark32 => vec![harness::reproduce_remark32()?],
                Target::All => vec![harness::reproduce_table1()?, harness::reproduce_remark32()?],
            };
            for t in &tables {
                match format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(t).unwrap()).unwrap(),
                    Format::Csv => {
                        writeln!(out, "table,row,alpha,column,value,expected,match").unwrap();
                        for c in &t.cells {
                            writeln!(
                                out,
                                "{},{},{},{},{},{},{}",
                                t.name,
                                c.row,
                                c.alpha,
                                c.column,
                                c.rendered(),
                                c.expected,
                                c.matches()
                            )
                            .unwrap();
                        }
                    }
                    Format::Table => write!(out, "{t}").unwrap(),
                }
            }
            for t in &tables {
                t.verify()?;
            }
        }
    }
    Ok(())
}

fn write_bounds(out: &mut String, evals: &[Evaluation], format: Format) {
    use std::fmt::Write;
    struct Row {
        id: BoundId,
        kind: &'static str,
        applicable: bool,
        branch: &'static str,
        value: Option<f64>,
        energy: Option<f64>,
        slack: Option<f64>,
        note: String,
    }
    let rows: Vec<Row> = evals
        .iter()
        .map(|e| match e {
            Evaluation::Bound(b) => Row {
                id: b.id,
                kind: if b.side == Side::Upper { "upper" } else { "lower" },
                applicable: true,
                branch: b.branch,
                value: Some(b.value),
                energy: Some(b.energy),
                slack: Some(b.slack),
                note: String::new(),
            },
            Evaluation::Relation(r) => Row {
                id: r.id,
                kind: if r.sense == Sense::AtMost { "lhs<=rhs" } else { "lhs>=rhs" },
                applicable: true,
                branch: "",
                value: Some(r.rhs),
                energy: Some(r.lhs),
                slack: Some(r.margin()),
                note: String::new(),
            },
            Evaluation::Inapplicable { id, reason } => Row {
                id: *id,
                kind: match id.side() {
                    Some(Side::Upper) => "upper",
                    Some(Side::Lower) => "lower",
                    None => "relation",
                },
                applicable: false,
                branch: "",
                value: None,
                energy: None,
                slack: None,
                note: reason.to_string(),
            },
        })
        .collect();
    let opt = |x: Option<f64>| x.map(num).unwrap_or_default();
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "bound_id": r.id.as_str(),
                        "kind": r.kind,
                        "applicable": r.applicable,
                        "branch": r.branch,
                        "value": r.value,
                        "energy": r.energy,
                        "slack": r.slack,
                        "reason": r.note,
                    })
                })
                .collect();
            writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap()).unwrap();
        }
        Format::Csv => {
            writeln!(out, "bound_id,kind,applicable,branch,value,energy,slack,reason").unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{},{}",
                    r.id,
                    r.kind,
                    r.applicable,
                    r.branch,
                    opt(r.value),
                    opt(r.energy),
                    opt(r.slack),
                    r.note
                )
                .unwrap();
            }
        }
        Format::Table => {
            writeln!(
                out,
                "{:<10} {:<9} {:<18} {:>16} {:>16} {:>16}  note",
                "bound", "kind", "branch", "value/rhs", "energy/lhs", "slack"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    out,
                    "{:<10} {:<9} {:<18} {:>16} {:>16} {:>16}  {}",
                    r.id.as_str(),
                    r.kind,
                    r.branch,
                    opt(r.value),
                    opt(r.energy),
                    opt(r.slack),
                    if r.applicable { "" } else { &r.note }
                )
                .unwrap();
            }
        }
    }
}
