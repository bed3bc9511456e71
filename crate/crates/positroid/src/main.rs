use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use positroid::formats::{self, Order};
use positroid::json::{self, Status};
use positroid::parallel;
use positroid::tables::{A_TABLE, EHAT_TABLE};
use positroid::verify::{self, Suite, VerifyConfig};
use positroid_core::bijections::{check_q_matrix, XPoly};
use positroid_core::decperm::DecoratedPermutation;
use positroid_core::formulas::{self, Formula, MasterForm};
use positroid_core::{Error, LaurentPoly};
use serde_json::{json, Value};

/// Formatting into a `String` cannot fail.
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        let _ = std::fmt::Write::write_fmt($out, format_args!("{}\n", format_args!($($arg)*)));
    }};
}

macro_rules! outp {
    ($out:expr, $($arg:tt)*) => {{
        let _ = std::fmt::Write::write_fmt($out, format_args!($($arg)*));
    }};
}

/// Rank generating functions of the cells of the totally nonnegative
/// Grassmannian, and checks of their closed forms.
#[derive(Parser)]
#[command(name = "positroid", version)]
struct Cli {
    /// Maximum number of worker threads (default: one per core).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    A,
    Ehat,
    Etilde,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Oracles,
    Identities,
    Poset,
    Bijections,
    Permanent,
    Empirical,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    MasterProduct,
    MasterPartialFractions,
    AkAlternating,
    AkChains,
}

#[derive(Subcommand)]
enum Command {
    /// A_{k,n}(q), highest power first.
    Aknq {
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// The renormalized q-Eulerian polynomial q^{k-n} E_{k,n}(q), lowest power first.
    Ehat {
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Permutations by alignments, q^{k(n-k)} E_{k,n}(1/q), lowest power first.
    Etilde {
        k: usize,
        n: usize,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
    },
    /// Statistics of a decorated permutation such as "3,1,5,4,8,6,7,2 ccw=4,7 cw=6".
    Perm { encoding: String },
    /// Run a verification suite; exits 1 if any proven statement fails.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Size bound overriding each suite's default.
        #[arg(long)]
        max_n: Option<usize>,
        /// Seed for sampled checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Rational sample points per partial-fraction check.
        #[arg(long, default_value_t = 5)]
        samples: usize,
        /// Print the reports as a JSON array.
        #[arg(long)]
        json: bool,
    },
    /// Build the cyclic Bruhat order CB_{k,n}.
    Poset {
        k: usize,
        n: usize,
        /// Write DOT to PATH, or to stdout when PATH is omitted or "-".
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        dot: Option<PathBuf>,
        /// Write the JSON dump to PATH, or to stdout when PATH is omitted or "-".
        #[arg(long, num_args = 0..=1, default_missing_value = "-")]
        json: Option<PathBuf>,
        /// Largest n accepted.
        #[arg(long, default_value_t = positroid_core::poset::DEFAULT_BOUND)]
        bound: usize,
    },
    /// Truncated generating series as JSON.
    Series {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        x_order: usize,
        #[arg(long, default_value_t = 0)]
        y_order: usize,
        /// Row count k for the A_k(q,x) series.
        #[arg(long)]
        k: Option<usize>,
    },
    /// A table of polynomials; without a range, the published entries.
    Table {
        #[arg(value_enum)]
        family: Family,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long, value_enum, default_value_t = TableFormat::Text)]
        format: TableFormat,
    },
    /// Compare the permanent of a candidate q-matrix with A_{k,n}(q).
    ///
    /// FILE holds {"matrix": [[entry, ...], ...]}, where each entry lists the
    /// x-coefficients of a polynomial in x as {"q_terms": [...]} objects.
    Qperm { file: PathBuf },
}

/// Largest `n` for `table` and the single-polynomial commands.
const FORMULA_BOUND: usize = 200;
const TABLE_BOUND: usize = 40;

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    parallel::configure_threads(cli.threads);
    let mut out = String::new();
    let result = run(cli.command, &mut out);
    if let Err(e) = std::io::stdout().lock().write_all(out.as_bytes()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn check_kn(k: usize, n: usize) -> Result<(), Failure> {
    if k > n {
        return Err(Failure::Usage(format!(
            "k must not exceed n (got k = {k}, n = {n})"
        )));
    }
    Error::check_bound("n", n, FORMULA_BOUND)?;
    Ok(())
}

fn print_poly(out: &mut String, p: &LaurentPoly, descending: bool, format: PolyFormat) {
    match format {
        PolyFormat::Text if descending => outln!(out, "{}", p.descending()),
        PolyFormat::Text => outln!(out, "{p}"),
        PolyFormat::Json => outln!(out, "{}", json::poly_to_json(p)),
    }
}

fn write_out(out: &mut String, path: &Path, text: &str) -> Result<(), Failure> {
    if path == Path::new("-") {
        outp!(out, "{text}");
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

fn run(command: Command, out: &mut String) -> Result<(), Failure> {
    match command {
        Command::Aknq { k, n, format } => {
            check_kn(k, n)?;
            print_poly(out, &formulas::a_kn_closed(k, n)?, true, format);
        }
        Command::Ehat { k, n, format } => {
            check_kn(k, n)?;
            print_poly(out, &formulas::e_hat(k, n)?, false, format);
        }
        Command::Etilde { k, n, format } => {
            check_kn(k, n)?;
            print_poly(out, &formulas::e_tilde(k, n)?, false, format);
        }
        Command::Perm { encoding } => {
            let p: DecoratedPermutation = encoding.parse()?;
            let stats = json::perm_stats(&p)?;
            outln!(
                out,
                "{}",
                serde_json::to_string_pretty(&stats).expect("plain data serializes")
            );
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            samples,
            json,
        } => {
            let suite = match suite {
                SuiteArg::Tables => Suite::Tables,
                SuiteArg::Oracles => Suite::Oracles,
                SuiteArg::Identities => Suite::Identities,
                SuiteArg::Poset => Suite::Poset,
                SuiteArg::Bijections => Suite::Bijections,
                SuiteArg::Permanent => Suite::Permanent,
                SuiteArg::Empirical => Suite::Empirical,
                SuiteArg::All => Suite::All,
            };
            let cfg = VerifyConfig {
                max_n,
                seed,
                samples,
            };
            let reports = verify::run(suite, &cfg)?;
            if json {
                outln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&reports).expect("plain data serializes")
                );
            } else {
                for r in &reports {
                    let tag = match r.status {
                        Status::Pass => "PASS",
                        Status::Fail => "FAIL",
                        Status::Finding => "NOTE",
                    };
                    match &r.first_discrepancy {
                        Some(d) => outln!(out, "{tag} {} {} : {d}", r.check, r.parameters),
                        None => outln!(out, "{tag} {} {}", r.check, r.parameters),
                    }
                }
                let count = |s| reports.iter().filter(|r| r.status == s).count();
                outln!(
                    out,
                    "{suite}: {} checks, {} passed, {} failed, {} findings",
                    reports.len(),
                    count(Status::Pass),
                    count(Status::Fail),
                    count(Status::Finding)
                );
            }
            if reports.iter().any(json::CheckReport::failed) {
                return Err(Failure::Verification);
            }
        }
        Command::Poset {
            k,
            n,
            dot,
            json: json_path,
            bound,
        } => {
            let p = parallel::build_cb(k, n, bound)?;
            if let Some(path) = &dot {
                write_out(out, path, &formats::poset_dot(&p))?;
            }
            if let Some(path) = &json_path {
                let text = serde_json::to_string_pretty(&json::poset_to_json(&p))
                    .expect("plain data serializes");
                write_out(out, path, &(text + "\n"))?;
            }
            if dot.is_none() && json_path.is_none() {
                outln!(
                    out,
                    "CB_({k},{n}): {} elements, {} cover edges",
                    p.elements().len(),
                    p.edges().len()
                );
                outln!(out, "corank histogram: {:?}", p.corank_histogram());
            }
        }
        Command::Series {
            which,
            x_order,
            y_order,
            k,
        } => {
            Error::check_bound("x-order", x_order, 40)?;
            Error::check_bound("y-order", y_order, 40)?;
            let s = match which {
                Which::MasterProduct => {
                    formulas::master_series(x_order, y_order, MasterForm::Product)
                }
                Which::MasterPartialFractions => {
                    formulas::master_series(x_order, y_order, MasterForm::PartialFractions)
                }
                Which::AkAlternating | Which::AkChains => {
                    let k = k.ok_or_else(|| {
                        Failure::Usage("--k is required for the A_k series".into())
                    })?;
                    let formula = if matches!(which, Which::AkChains) {
                        Formula::AkChains
                    } else {
                        Formula::AkAlternating
                    };
                    formulas::a_k_series(k, x_order, formula)?.value
                }
            };
            outln!(out, "{}", json::series_to_json(&s));
        }
        Command::Table {
            family,
            n_min,
            n_max,
            format,
        } => table(out, family, n_min, n_max, format)?,
        Command::Qperm { file } => {
            let text = fs::read_to_string(&file)?;
            let v: Value =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(e.to_string()))?;
            let matrix = parse_q_matrix(&v)?;
            let r = check_q_matrix(&matrix)?;
            let mismatch = r.first_mismatch.as_ref().map(|(k, got, want)| {
                json!({"k": k, "permanent": json::poly_to_json(got), "A_kn": json::poly_to_json(want)})
            });
            let report = json!({
                "n": r.n,
                "permanent": r.permanent.iter().map(json::poly_to_json).collect::<Vec<_>>(),
                "first_mismatch": mismatch,
            });
            outln!(
                out,
                "{}",
                serde_json::to_string_pretty(&report).expect("plain data serializes")
            );
            if r.first_mismatch.is_some() {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn parse_q_matrix(v: &Value) -> Result<Vec<Vec<XPoly<LaurentPoly>>>, Failure> {
    let bad =
        || Failure::Usage("expected {\"matrix\": [[[{\"q_terms\": ...}, ...], ...], ...]}".into());
    let rows = v.get("matrix").and_then(Value::as_array).ok_or_else(bad)?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|entry| {
                    entry
                        .as_array()
                        .ok_or_else(bad)?
                        .iter()
                        .map(|c| json::poly_from_json(c).map_err(Failure::from))
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn table(
    out: &mut String,
    family: Family,
    n_min: Option<usize>,
    n_max: Option<usize>,
    format: TableFormat,
) -> Result<(), Failure> {
    let rows: Vec<(usize, usize, LaurentPoly)> = if n_min.is_none() && n_max.is_none() {
        match family {
            Family::A => A_TABLE
                .iter()
                .map(|&(k, n, _)| Ok((k, n, formulas::a_kn_closed(k, n)?)))
                .collect::<Result<_, Error>>()?,
            Family::Ehat => EHAT_TABLE
                .iter()
                .map(|&(k, n, _)| Ok((k, n, formulas::e_hat(k, n)?)))
                .collect::<Result<_, Error>>()?,
            Family::Etilde => EHAT_TABLE
                .iter()
                .map(|&(k, n, _)| Ok((k, n, formulas::e_tilde(k, n)?)))
                .collect::<Result<_, Error>>()?,
        }
    } else {
        let lo = n_min.unwrap_or(1).max(1);
        let hi = n_max.unwrap_or(lo);
        if lo > hi {
            return Err(Failure::Usage(format!("--n-min {lo} exceeds --n-max {hi}")));
        }
        Error::check_bound("table n", hi, TABLE_BOUND)?;
        let mut rows = Vec::new();
        for n in lo..=hi {
            for k in 1..=n {
                let p = match family {
                    Family::A => formulas::a_kn_closed(k, n)?,
                    Family::Ehat => formulas::e_hat(k, n)?,
                    Family::Etilde => formulas::e_tilde(k, n)?,
                };
                rows.push((k, n, p));
            }
        }
        rows
    };
    let (symbol, order) = match family {
        Family::A => ("A", Order::Descending),
        Family::Ehat => ("\\hat{E}", Order::Ascending),
        Family::Etilde => ("\\tilde{E}", Order::Ascending),
    };
    match format {
        TableFormat::Text => {
            for (k, n, p) in &rows {
                match order {
                    Order::Descending => outln!(out, "{k} {n} {}", p.descending()),
                    Order::Ascending => outln!(out, "{k} {n} {p}"),
                }
            }
        }
        TableFormat::Csv => outp!(out, "{}", formats::csv_table(&rows)),
        TableFormat::Latex => {
            let group = |k: usize, n: usize| if matches!(family, Family::A) { k } else { n };
            outp!(out, "{}", formats::latex_table(&rows, symbol, order, group));
        }
        TableFormat::Json => {
            let entries: Vec<Value> = rows
                .iter()
                .map(|(k, n, p)| json!({"k": k, "n": n, "polynomial": json::poly_to_json(p)}))
                .collect();
            outln!(
                out,
                "{}",
                serde_json::to_string_pretty(&entries).expect("plain data serializes")
            );
        }
    }
    Ok(())
}
