use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use slope_spectrum::audit::{audit_random, audit_type, AuditSummary};
use slope_spectrum::grassmann::ci_curve;
use slope_spectrum::oracles::{allocation_oracle, random_hn_type, split_bundle_e_s, syt_count_bruteforce};
use slope_spectrum::spectrum::full_spectrum_sup;
use slope_spectrum::{bundle_file, report, BigInt, Error, GrassmannSetup, HnType, Rational};

#[derive(Parser)]
#[command(name = "slopes", version, about = "Exact asymptotic slope spectra from Harder-Narasimhan data")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate nu_s for every s from a bundle file.
    Spectrum {
        file: PathBuf,
        /// Write `s,nu_num,nu_den,threshold_num,threshold_den` rows here.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Known values e_1,...,e_{r-1} (fractions allowed, e.g. `5,9/2,4,7/2`).
        #[arg(long = "e-s", value_delimiter = ',', allow_hyphen_values = true)]
        e_s: Option<Vec<String>>,
        /// Also print decimal approximations with this many digits.
        #[arg(long)]
        decimal: Option<usize>,
    },
    /// Intersection data of complete-intersection curves in Gr(s, V).
    Grassmann(GrassmannArgs),
    /// Run the invariant audit on a bundle file or on random types.
    Check {
        #[arg(required_unless_present = "random", conflicts_with = "random")]
        file: Option<PathBuf>,
        #[arg(long)]
        random: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
    },
    /// Run a brute-force oracle directly.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Args)]
struct GrassmannArgs {
    #[arg(long)]
    rank: usize,
    #[arg(long, allow_hyphen_values = true)]
    degree: BigInt,
    #[arg(long)]
    genus: u64,
    #[arg(long)]
    sub_rank: usize,
    #[arg(long, default_value_t = 1)]
    n: u64,
    /// Sweep n = 1..=N (CSV output covers the whole sweep).
    #[arg(long)]
    n_max: Option<u64>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    decimal: Option<usize>,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Best rank allocation across HN blocks, by enumeration.
    Allocation {
        file: PathBuf,
        #[arg(long)]
        s: usize,
    },
    /// Count standard Young tableaux of a rectangle by backtracking.
    Syt {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Maximal rank-s subbundle slope of a sum of line bundles.
    Split {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degrees: Vec<BigInt>,
        #[arg(long)]
        s: usize,
    },
    /// Print a seeded random HN type as a bundle file.
    Random {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        max_rank: usize,
        #[arg(long, default_value_t = 20)]
        max_abs_degree: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn read_bundle(path: &Path) -> Result<HnType, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
    bundle_file::parse(&text)
}

fn write_file(path: &Path, contents: &str) -> Result<(), Error> {
    fs::write(path, contents).map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}

fn parse_rational(text: &str) -> Result<Rational, Error> {
    text.trim()
        .parse::<Rational>()
        .map_err(|_| Error::InvalidArgument(format!("`{text}` is not an integer or fraction p/q")))
}

fn print_audit(summary: &AuditSummary) -> ExitCode {
    match &summary.violation {
        None => {
            println!(
                "all invariants hold: {} HN type(s), {} Grassmann setup(s), {} assertions",
                summary.types_checked, summary.setups_checked, summary.assertions
            );
            ExitCode::SUCCESS
        }
        Some(v) => {
            println!("invariant violated\n{v}");
            ExitCode::from(1)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Spectrum { file, csv, e_s, decimal } => {
            let v = read_bundle(&file)?;
            let e_s = e_s
                .map(|values| values.iter().map(|t| parse_rational(t)).collect::<Result<Vec<_>, _>>())
                .transpose()?;
            let report = full_spectrum_sup(&v, e_s.as_deref())?;
            print!("{}", report::spectrum_table(&report, decimal));
            if let Some(path) = csv {
                write_file(&path, &report::spectrum_csv(&report))?;
            }
        }
        Command::Grassmann(args) => {
            let setup = GrassmannSetup::new(args.rank, args.degree, args.genus, args.sub_rank)
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let levels: Vec<u64> = match args.n_max {
                Some(n_max) => (1..=n_max).collect(),
                None => vec![args.n],
            };
            let mut csv = report::grassmann_csv_header();
            for (k, &n) in levels.iter().enumerate() {
                let data = ci_curve(&setup, n).map_err(|e| match e {
                    Error::OutOfRange { .. } => Error::InvalidArgument(e.to_string()),
                    other => other,
                })?;
                if k > 0 {
                    println!();
                }
                print!("{}", report::grassmann_text(&setup, &data, args.decimal));
                csv.push_str(&report::grassmann_csv_row(&setup, &data));
            }
            if let Some(path) = args.csv {
                write_file(&path, &csv)?;
            }
        }
        Command::Check { file, random, seed, count } => {
            let summary = if random {
                audit_random(seed, count)
            } else {
                let path = file.expect("clap requires a file without --random");
                audit_type(&read_bundle(&path)?)
            };
            return Ok(print_audit(&summary));
        }
        Command::Oracle(oracle) => match oracle {
            OracleCommand::Allocation { file, s } => {
                let v = read_bundle(&file)?;
                let w = allocation_oracle(&v, s)?;
                let parts: Vec<String> = w.s_values.iter().map(ToString::to_string).collect();
                println!("s_values = [{}]", parts.join(", "));
                println!("objective = {}/{}", w.objective.numer(), w.objective.denom());
            }
            OracleCommand::Syt { rows, cols } => {
                println!("{}", syt_count_bruteforce(rows, cols)?);
            }
            OracleCommand::Split { degrees, s } => {
                let e = split_bundle_e_s(&degrees, s)?;
                println!("{}/{}", e.numer(), e.denom());
            }
            OracleCommand::Random {
                seed,
                max_rank,
                max_abs_degree,
            } => {
                if max_rank == 0 {
                    return Err(Error::InvalidArgument("--max-rank must be positive".into()));
                }
                print!("{}", bundle_file::render(&random_hn_type::<BigInt>(seed, max_rank, max_abs_degree)));
            }
        },
    }
    Ok(ExitCode::SUCCESS)
}
