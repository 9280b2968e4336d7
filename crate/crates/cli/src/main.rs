//! `cphi` — command-line front end for the exact q-series engine:
//! coefficient computation along independent routes, rendered product-sum
//! formulas, the theta-decomposition table, and named verification suites.
//!
//! Exit codes: 0 success, 1 verification/computation failure, 2 usage
//! error, 3 enumeration cap exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cphi_core::decomp::h_table;
use cphi_core::exprat::ExpRat;
use cphi_core::frobenius::{
    catalog_formula, cphi_enumerate, cphi_formula_text, cphi_product, cphi_recursion, CPhiSeries,
};
use cphi_core::render::render_products;
use cphi_core::report::Report;
use cphi_core::suites;
use cphi_core::Error;

#[derive(Parser)]
#[command(
    name = "cphi",
    version,
    about = "Exact k-colored generalized Frobenius partition calculator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    /// Theta-decomposition table divided by the Euler product power
    Recursion,
    /// Constant zeta-term of the colored two-row product
    Product,
    /// Direct enumeration of the two-row arrays
    Enumerate,
    /// Hand-transcribed closed formula (k in {2,3,6,7,8})
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Jtp,
    Lemmas,
    Decomposition,
    Lemma42,
    Bs,
    Catalog,
    Congruences,
    Routes,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the coefficients cphi_k(0..terms) by a chosen route
    Cphi {
        /// Number of colors (k >= 1)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Number of coefficients
        #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Recursion)]
        method: MethodArg,
    },
    /// Enumerate the two-row arrays directly (slow; capped)
    Enumerate {
        /// Number of colors (k >= 1)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
        /// Number of coefficients
        #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u32).range(1..))]
        terms: u32,
        /// Maximum number of generated rows (default 10^7, or the
        /// CPHI_ENUM_CAP environment variable)
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print the theta-decomposition table at level k/2
    Htable {
        /// Number of colors (k >= 1)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: u32,
    },
    /// Print the CPhi_k formula as a sum of Pochhammer products
    Formula {
        /// Number of colors (k >= 2)
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        k: u32,
    },
    /// Run a named verification suite; exit 0 iff every check passes
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        /// Restrict suites that range over k (decomposition, routes)
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        k: Option<u32>,
        /// Precision / coefficient count (each suite has its own default)
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        terms: Option<i64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Error::CapExceeded { .. }) => {
            eprintln!("error: enumeration cap exceeded (raise --cap or CPHI_ENUM_CAP)");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cli: Cli) -> cphi_core::Result<ExitCode> {
    match cli.command {
        Command::Cphi { k, terms, method } => {
            let terms = terms as usize;
            let series = match method {
                MethodArg::Recursion => cphi_recursion(k, terms)?,
                MethodArg::Product => cphi_product(k, terms)?,
                MethodArg::Enumerate => cphi_enumerate(k, terms, None)?,
                MethodArg::Catalog => {
                    if ![2, 3, 6, 7, 8].contains(&k) {
                        return Ok(usage_error(&format!(
                            "--method catalog requires k in {{2,3,6,7,8}}, got {k}"
                        )));
                    }
                    catalog_formula(k, terms)?
                }
            };
            print_series(&series, cli.output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { k, terms, cap } => {
            let series = cphi_enumerate(k, terms as usize, cap)?;
            print_series(&series, cli.output);
            Ok(ExitCode::SUCCESS)
        }
        Command::Htable { k } => {
            let table = h_table(k);
            match cli.output {
                Output::Json => {
                    let entries: Vec<_> = table
                        .entries
                        .iter()
                        .map(|(&r, e)| {
                            serde_json::json!({
                                "residue": ExpRat::new(r, 2).to_string(),
                                "expression": e.to_string(),
                                "products": render_products(e),
                            })
                        })
                        .collect();
                    let doc = serde_json::json!({
                        "k": k,
                        "level": table.level.to_string(),
                        "entries": entries,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
                }
                Output::Text => {
                    println!("level {}", table.level);
                    for (&r, e) in table.entries.iter() {
                        println!("h[{}] = {e}", ExpRat::new(r, 2));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Formula { k } => {
            let formula = cphi_formula_text(k);
            match cli.output {
                Output::Json => {
                    let doc = serde_json::json!({ "k": k, "formula": formula });
                    println!("{}", serde_json::to_string(&doc).unwrap());
                }
                Output::Text => println!("{formula}"),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, k, terms } => {
            let reports = run_suite(suite, k, terms)?;
            match cli.output {
                Output::Json => {
                    println!("{}", serde_json::to_string_pretty(&reports).unwrap());
                }
                Output::Text => {
                    for r in &reports {
                        println!("{r}");
                    }
                }
            }
            if reports.iter().all(Report::is_pass) {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn run_suite(
    suite: SuiteArg,
    k: Option<u32>,
    terms: Option<i64>,
) -> cphi_core::Result<Vec<Report>> {
    Ok(match suite {
        SuiteArg::All => suites::suite_all(terms.unwrap_or(20))?,
        SuiteArg::Jtp => suites::suite_jtp(terms.unwrap_or(20)),
        SuiteArg::Lemmas => suites::suite_lemmas(terms.unwrap_or(12))?,
        SuiteArg::Decomposition => {
            let ks: Vec<u32> = match k {
                Some(k) => vec![k],
                None => (2..=8).collect(),
            };
            suites::suite_decomposition(&ks, terms.unwrap_or(10))?
        }
        SuiteArg::Lemma42 => suites::suite_lemma42(terms.unwrap_or(200)),
        SuiteArg::Bs => suites::suite_bs(terms.unwrap_or(60)),
        SuiteArg::Catalog => suites::suite_catalog(terms.unwrap_or(50) as usize)?,
        SuiteArg::Congruences => suites::suite_congruences(terms.unwrap_or(50) as usize)?,
        SuiteArg::Routes => {
            let series_terms = terms.unwrap_or(31) as usize;
            suites::suite_routes(k.unwrap_or(8), 9.min(series_terms), series_terms)?
        }
    })
}

fn print_series(series: &CPhiSeries, output: Output) {
    match output {
        Output::Json => println!("{}", serde_json::to_string(series).unwrap()),
        Output::Text => {
            let width = series
                .coeffs
                .iter()
                .map(|c| c.to_string().len())
                .max()
                .unwrap_or(1);
            println!("cphi_{}(n), n = 0..{}", series.k, series.coeffs.len() - 1);
            for (n, c) in series.coeffs.iter().enumerate() {
                println!("{n:>4}  {c:>width$}");
            }
        }
    }
}
