//! Command-line front end for `hecke-center`.
//!
//! All output is assembled after the parallel work finishes and written once,
//! so it does not depend on scheduling or on `--jobs`.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hecke_center::center::{self, product_pairs, Report};
use hecke_center::universal::{DMatrixReport, FitResult, FitStatus, Universal};
use hecke_center::{BasisCache, BigInt, Error, IntPoly, Partition, StructTable};
use serde::Serialize;
use serde_json::json;

pub const CACHE_ENV: &str = "HECKE_CENTER_CACHE";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    /// A check ran and found violations; the witnesses are already in the output.
    #[error("verification failed")]
    Verification,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verification => 1,
            CliError::Core(
                Error::InvariantViolation(_)
                | Error::Construction { .. }
                | Error::BasisIncomplete { .. }
                | Error::Solve(_),
            ) => 1,
            _ => 2,
        }
    }
}

type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Parser, Debug)]
#[command(
    name = "hecke-center",
    version,
    about = "Exact computations in the center of the Hecke algebra of S_n"
)]
struct Cli {
    /// Maximum number of worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Directory for cached class-element bases.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the result to FILE instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the class element G[lambda](n) in the T_w basis.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Partition,
    },
    /// Expand G[lambda](n) G[mu](n) in the class-element basis.
    Mult(PairArgs),
    /// All products with |lambda| + |mu| <= max-size.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
    },
    /// Check positivity, parity, filtration, the defining properties of the
    /// class elements, the xi=0 oracle and the e_r identity.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
        /// Check e_r = sum of G[lambda] over |lambda| = r for r <= R.
        #[arg(long)]
        er: Option<usize>,
    },
    /// Top-degree table, graded checks and d-matrices through a grade.
    Universal {
        #[arg(long)]
        max_grade: usize,
    },
    /// Fit a structure constant in n; without --nu, fits b[lambda, mu](n).
    Fit {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Option<Partition>,
        /// Rank range LO:HI, inclusive.
        #[arg(long)]
        range: RankRange,
    },
    /// Product of class sums in the group algebra Z S_n.
    Oracle(PairArgs),
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    lambda: Partition,
    #[arg(long)]
    mu: Partition,
}

#[derive(Clone, Copy, Debug)]
struct RankRange {
    lo: usize,
    hi: usize,
}

impl std::str::FromStr for RankRange {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (lo, hi) = s
            .split_once(':')
            .ok_or_else(|| format!("expected LO:HI, got {s:?}"))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("{x:?}: {e}"));
        Ok(Self {
            lo: parse(lo)?,
            hi: parse(hi)?,
        })
    }
}

/// Runs the command line `args` (program name first). Normal output goes to
/// `out`, diagnostics and verification witnesses to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli, out, err) {
        Ok(()) => 0,
        Err(CliError::Verification) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        // Only the first call in a process configures the pool; later calls
        // (several runs in one test process) keep the existing one.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    let format = cli.format;
    let engine = engine(
        cli.cache.as_deref(),
        matches!(cli.command, Command::Verify { .. }),
    );
    let mut failed = Vec::new();
    let text = match cli.command {
        Command::Gamma { n, lambda } => {
            only(format, &[Format::Json], "gamma")?;
            let g = engine.center(n)?.gamma(&lambda)?;
            json_text(&json!({ "format": 1, "n": n, "lambda": lambda, "element": &*g }))
        }
        Command::Mult(PairArgs { n, lambda, mu }) => {
            only(format, &[Format::Json, Format::Pretty], "mult")?;
            let coords = engine.structure_constants(n, &lambda, &mu)?;
            match format.unwrap_or(Format::Json) {
                Format::Pretty => format!("{}\n", coords.to_pretty_string()),
                _ => json_text(
                    &json!({ "format": 1, "n": n, "lambda": lambda, "mu": mu, "coords": coords }),
                ),
            }
        }
        Command::Table { n, max_size } => {
            let center = engine.center(n)?;
            let table = StructTable::compute(&center, &product_pairs(n, max_size))?;
            let format = format.unwrap_or(Format::Json);
            return export_table(&table, max_size, format, cli.out.as_deref(), out);
        }
        Command::Verify { n, max_size, er } => {
            only(format, &[Format::Json], "verify")?;
            let center = engine.center(n)?;
            let mut reports = vec![
                center::verify_structure_constants(&center, max_size)?,
                center::verify_characterization(&center, max_size)?,
                center::verify_oracle(&center, max_size)?,
                center::verify_b_coeffs(&center, max_size)?,
            ];
            if let Some(r) = er {
                reports.push(center::verify_er_identity(&center, r)?);
            }
            failed.extend(witnesses(&reports));
            json_text(&json!({
                "format": 1,
                "n": n,
                "max_size": max_size,
                "passed": failed.is_empty(),
                "reports": reports,
            }))
        }
        Command::Universal { max_grade } => {
            only(format, &[Format::Json], "universal")?;
            let table = engine.graded_table(max_grade)?;
            let reports = vec![table.check(), engine.check_associativity(max_grade)?];
            failed.extend(witnesses(&reports));
            let d: Vec<DMatrixReport> = (1..=max_grade)
                .map(|k| engine.d_matrix(k))
                .collect::<std::result::Result<_, _>>()?;
            for m in &d {
                if !m.zero_triangularity.dominance_triangular {
                    failed.extend(
                        m.zero_triangularity
                            .witnesses
                            .iter()
                            .map(|w| format!("[d-matrix k={}] {w}", m.k)),
                    );
                }
            }
            let graded: Vec<_> = table
                .entries
                .iter()
                .map(|((a, b), top)| json!({ "lambda": a, "mu": b, "top": coords_json(top) }))
                .collect();
            json_text(&json!({
                "format": 1,
                "max_grade": max_grade,
                "passed": failed.is_empty(),
                "graded": graded,
                "reports": reports,
                "d_matrices": d,
            }))
        }
        Command::Fit {
            lambda,
            mu,
            nu,
            range,
        } => {
            only(format, &[Format::Json], "fit")?;
            let fit: FitResult = match &nu {
                Some(nu) => engine.fit_in_n(&lambda, &mu, nu, range.lo, range.hi)?,
                None => engine.fit_b_in_n(&lambda, &mu, range.lo, range.hi)?,
            };
            if fit.status == FitStatus::DegreeCapExceeded {
                failed.push(format!(
                    "[fit] no polynomial of degree <= {} validates on {:?}",
                    fit.degree_cap,
                    fit.samples.iter().map(|s| s.n).collect::<Vec<_>>()
                ));
            }
            #[derive(Serialize)]
            struct Versioned<'a> {
                format: u32,
                #[serde(flatten)]
                fit: &'a FitResult,
            }
            json_text(&Versioned {
                format: 1,
                fit: &fit,
            })
        }
        Command::Oracle(PairArgs { n, lambda, mu }) => {
            only(format, &[Format::Json, Format::Pretty], "oracle")?;
            let product = engine.center(n)?.class_sum_oracle(&lambda, &mu)?;
            match format.unwrap_or(Format::Json) {
                Format::Pretty => format!("{}\n", pretty_class_sums(&product)),
                _ => {
                    let product: Vec<_> = product
                        .iter()
                        .rev()
                        .map(|(nu, c)| json!({ "nu": nu, "c": c.to_string() }))
                        .collect();
                    json_text(
                        &json!({ "format": 1, "n": n, "lambda": lambda, "mu": mu, "product": product }),
                    )
                }
            }
        }
    };
    emit(&text, cli.out.as_deref(), out)?;
    for w in &failed {
        let _ = writeln!(err, "FAIL {w}");
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification)
    }
}

fn engine(cache: Option<&Path>, validate: bool) -> Universal {
    match cache {
        Some(dir) => Universal::new().with_cache(BasisCache::new(dir), validate),
        None => Universal::new(),
    }
}

fn only(format: Option<Format>, allowed: &[Format], command: &str) -> Result<()> {
    match format {
        Some(f) if !allowed.contains(&f) => Err(CliError::Usage(format!(
            "{command} does not support --format {}",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))),
        _ => Ok(()),
    }
}

fn witnesses(reports: &[Report]) -> Vec<String> {
    reports
        .iter()
        .flat_map(|r| {
            r.violations
                .iter()
                .map(move |v| format!("[{}] {v}", r.name))
        })
        .collect()
}

fn json_text(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("in-memory values serialize");
    s.push('\n');
    s
}

fn coords_json(coords: &BTreeMap<Partition, IntPoly>) -> Vec<serde_json::Value> {
    coords
        .iter()
        .map(|(nu, k)| json!({ "nu": nu, "k": k }))
        .collect()
}

fn pretty_class_sums(product: &BTreeMap<Partition, BigInt>) -> String {
    if product.is_empty() {
        return "0".into();
    }
    let mut terms: Vec<_> = product.iter().collect();
    terms.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| a.0.cmp(b.0)));
    terms
        .into_iter()
        .map(|(nu, c)| format!("{c}*C[{}]", nu.to_cli_string()))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> Result<()> {
    match dest {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        }),
        None => out
            .write_all(text.as_bytes())
            .map_err(|source| CliError::Io {
                path: PathBuf::from("<stdout>"),
                source,
            }),
    }
}

/// Writes a structure-constant table. Rows are sorted by `(lambda, mu, nu)` in
/// the canonical partition order and polynomials are written in ascending
/// powers of `x`, so identical tables give identical bytes.
pub fn export_table(
    table: &StructTable,
    max_size: usize,
    format: Format,
    dest: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    let rows = table
        .entries
        .iter()
        .flat_map(|((a, b), c)| c.coords.iter().map(move |(nu, k)| (a, b, nu, k)));
    let text = match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            let path = dest
                .map(Path::to_path_buf)
                .unwrap_or_else(|| PathBuf::from("<stdout>"));
            let csv_err = |source| CliError::Csv {
                path: path.clone(),
                source,
            };
            w.write_record(["lambda", "mu", "nu", "k_poly"])
                .map_err(csv_err)?;
            for (a, b, nu, k) in rows {
                w.write_record([
                    a.to_cli_string(),
                    b.to_cli_string(),
                    nu.to_cli_string(),
                    k.to_ascending_string(),
                ])
                .map_err(csv_err)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io {
                path: path.clone(),
                source: e.into_error(),
            })?;
            String::from_utf8(bytes).expect("csv of ASCII fields")
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .map(|(a, b, nu, k)| json!({ "lambda": a, "mu": b, "nu": nu, "k": k.to_ascending_string() }))
                .collect();
            json_text(&json!({ "format": 1, "n": table.n, "max_size": max_size, "rows": rows }))
        }
        Format::Pretty => {
            let mut s = String::new();
            for ((a, b), c) in &table.entries {
                s.push_str(&format!(
                    "G[{}]*G[{}] = {}\n",
                    a.to_cli_string(),
                    b.to_cli_string(),
                    c.to_pretty_string()
                ));
            }
            s
        }
    };
    emit(&text, dest, out)
}
