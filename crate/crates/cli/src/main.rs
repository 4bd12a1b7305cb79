mod atlas_source;
mod report;

use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use invgen_core::atlas::{AtlasCaps, SolvableAtlas, DEFAULT_MAX_DEGREE};
use invgen_core::conditions::condition_stats;
use invgen_core::galois::{certify_nonsolvable, frobenius_frequencies, IntPolynomial, PrimeOrder};
use invgen_core::prob::{estimate_mean_n_in, is_covered, trial_rng, CoverageQuery, GroupKind};
use invgen_core::{CycleType, Error};

use atlas_source::AtlasSource;

#[derive(Parser, Debug)]
#[command(name = "invgen", version, about = "Invariable generation of nonsolvable subgroups of S_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct AtlasOpts {
    /// Atlas file; built and cached in the working directory when absent.
    #[arg(long, env = "INVGEN_ATLAS")]
    atlas: Option<PathBuf>,
    /// Allow degrees 16 to 25, which need GL(4,2) and GL(2,5) enumeration.
    #[arg(long)]
    stretch: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Group {
    Symmetric,
    Alternating,
}

impl From<Group> for GroupKind {
    fn from(g: Group) -> Self {
        match g {
            Group::Symmetric => GroupKind::Symmetric,
            Group::Alternating => GroupKind::Alternating,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact P(N_n = 2) per degree with the Figure-1 ordinate 1/(1-P).
    Table {
        #[arg(long, value_parser = parse_range, default_value = "5..15")]
        range: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, value_enum, default_value = "symmetric")]
        group: Group,
        #[command(flatten)]
        atlas: AtlasOpts,
    },
    /// Plot points (n, 1/(1-P(N_n = 2))).
    Figure {
        #[arg(long, value_parser = parse_range, default_value = "5..15")]
        range: RangeInclusive<u32>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long, value_enum, default_value = "symmetric")]
        group: Group,
        #[command(flatten)]
        atlas: AtlasOpts,
    },
    /// Certify that the Galois group of a polynomial is not solvable.
    Certify {
        /// Expression such as "x^5 - x - 1", or ascending coefficients "-1,-1,0,0,0,1".
        poly: String,
        /// Number of usable primes to try.
        #[arg(long, default_value_t = 100)]
        budget: usize,
        /// Visit primes in a seeded random order instead of increasing order.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        atlas: AtlasOpts,
    },
    /// Decide whether some solvable subgroup of S_n has all the given cycle types.
    Covered {
        n: u32,
        /// Cycle types as comma-separated parts, e.g. 7,1 4,4.
        #[arg(required = true)]
        types: Vec<String>,
        #[command(flatten)]
        atlas: AtlasOpts,
    },
    /// Monte Carlo estimate of E(N_n).
    Estimate {
        n: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "symmetric")]
        group: Group,
        #[command(flatten)]
        atlas: AtlasOpts,
    },
    /// Sampled frequencies of the prime-cycle and Mersenne-cycle conditions.
    Stats {
        n: u32,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Factorization-pattern densities over primes up to a bound.
    Frobenius {
        poly: String,
        #[arg(long, default_value_t = 100_000)]
        bound: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build or inspect atlas files.
    #[command(subcommand)]
    Atlas(AtlasCommand),
}

#[derive(Subcommand, Debug)]
enum AtlasCommand {
    /// Build an atlas and write it to a file.
    Build {
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: u32,
        #[arg(long)]
        stretch: bool,
        #[arg(long, default_value = "invgen.atlas.json")]
        out: PathBuf,
    },
    /// Summarize an atlas file, or list the sets of one degree.
    Inspect {
        path: PathBuf,
        #[arg(long)]
        degree: Option<u32>,
    },
}

fn parse_range(s: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: u32 = a.trim().parse().map_err(|_| format!("bad range start in {s:?}"))?;
    let b: u32 = b.trim().parse().map_err(|_| format!("bad range end in {s:?}"))?;
    if a == 0 || a > b {
        return Err(format!("range {s:?} must be nonempty and start at 1 or more"));
    }
    Ok(a..=b)
}

fn parse_type(n: u32, s: &str) -> Result<CycleType, Error> {
    let parts = s
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u32>()
                .map_err(|_| Error::Input(format!("bad cycle type {s:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let t = CycleType::new(parts)?;
    if t.degree() != n {
        return Err(Error::Input(format!("cycle type {t} does not have degree {n}")));
    }
    Ok(t)
}

/// Process exit status: 0 success, 1 usage or input error, 2 inconclusive or unsupported.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Capability(_) | Error::Size { .. } | Error::Cap(_) => 2,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Table {
            range,
            format,
            group,
            atlas,
        } => {
            let a = AtlasSource::from(&atlas).resolve(*range.end())?;
            print!("{}", report::table(&a, range, group.into(), format == Format::Json)?);
            Ok(0)
        }
        Command::Figure {
            range,
            format,
            group,
            atlas,
        } => {
            let a = AtlasSource::from(&atlas).resolve(*range.end())?;
            print!("{}", report::figure(&a, range, group.into(), format == Format::Json)?);
            Ok(0)
        }
        Command::Certify {
            poly,
            budget,
            seed,
            atlas,
        } => {
            let f = IntPolynomial::parse(&poly)?;
            let order = seed.map_or(PrimeOrder::Increasing, |seed| PrimeOrder::Shuffled { seed });
            let a = if f.degree() <= 4 {
                SolvableAtlas::build(f.degree().max(1) as u32, AtlasCaps::standard())?
            } else {
                AtlasSource::from(&atlas).resolve(f.degree() as u32)?
            };
            let cert = certify_nonsolvable(&f, budget, &a, order)?;
            println!("{}", cert.to_json());
            eprintln!("{}", cert.transcript());
            Ok(if cert.is_certificate() { 0 } else { 2 })
        }
        Command::Covered { n, types, atlas } => {
            let observed = types
                .iter()
                .map(|s| parse_type(n, s))
                .collect::<Result<Vec<_>, _>>()?;
            let a = AtlasSource::from(&atlas).resolve(n)?;
            let covered = is_covered(&CoverageQuery::new(n, observed)?, &a)?;
            println!(
                "{}",
                serde_json::json!({
                    "degree": n,
                    "types": types,
                    "covered": covered,
                    "nonsolvable": !covered,
                })
            );
            Ok(0)
        }
        Command::Estimate {
            n,
            trials,
            seed,
            format,
            group,
            atlas,
        } => {
            if n <= 4 {
                return Err(Error::Domain(format!(
                    "all subgroups solvable: every subgroup of S_{n} is solvable"
                )));
            }
            let a = AtlasSource::from(&atlas).resolve(n)?;
            let stats = estimate_mean_n_in(n, group.into(), trials, seed, &a)?;
            print!("{}", report::estimate(&stats, format == Format::Json));
            Ok(0)
        }
        Command::Stats {
            n,
            trials,
            seed,
            format,
        } => {
            let stats = condition_stats(n, trials, &mut trial_rng(seed, 0))?;
            print!("{}", report::conditions(&stats, seed, format == Format::Json));
            Ok(0)
        }
        Command::Frobenius {
            poly,
            bound,
            format,
        } => {
            let f = IntPolynomial::parse(&poly)?;
            let t = frobenius_frequencies(&f, bound)?;
            print!("{}", report::frobenius(&t, format == Format::Json));
            Ok(0)
        }
        Command::Atlas(AtlasCommand::Build {
            max_degree,
            stretch,
            out,
        }) => {
            let caps = if stretch {
                AtlasCaps::stretch()
            } else {
                AtlasCaps::standard()
            };
            let a = atlas_source::build(max_degree, caps)?;
            a.save(&out)?;
            eprintln!("wrote {} (degrees 1..={max_degree})", out.display());
            Ok(0)
        }
        Command::Atlas(AtlasCommand::Inspect { path, degree }) => {
            let a = SolvableAtlas::load(&path)?;
            print!("{}", report::inspect(&a, degree)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("invgen: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
