use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use weylshape::bracket::{bracket, f_poly};
use weylshape::geometry::{directions, en, leading, st};
use weylshape::parse::{parse_direction, parse_element};
use weylshape::render::{render_ascii, render_svg};
use weylshape::selftest::run_all;
use weylshape::shape::{check_bound, render_summary};
use weylshape::weyl::Support;
use weylshape::Error;

const EXIT_UNRESOLVED: u8 = 2;
const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;

#[derive(Parser)]
#[command(name = "weylshape", version, about = "Exact support geometry in the Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Md,
    Csv,
    Json,
}

impl Format {
    fn as_str(self) -> &'static str {
        match self {
            Format::Md => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Show {
    Supp,
    Leading,
    St,
    En,
    Fpoly,
    Dirs,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate corner candidates up to a degree-sum bound and report the
    /// refutation table.
    CheckBound {
        #[arg(long = "max-sum")]
        max_sum: i64,
        #[arg(long, value_enum, default_value = "md")]
        format: Format,
        /// Worker threads for the candidate scan (1 = serial).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Evaluate support-geometry quantities of one element.
    Eval {
        #[arg(long)]
        expr: String,
        /// Direction "rho,sigma"; required for leading/st/en/fpoly.
        #[arg(long)]
        dir: Option<String>,
        #[arg(long, value_enum)]
        show: Show,
    },
    /// The (rho,sigma)-bracket of the leading terms of two elements.
    Bracket {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        dir: String,
    },
    /// Render the support polygon as SVG (or ASCII to stdout without --out).
    Polygon {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        dir: Option<String>,
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run the seeded property suites.
    Selftest {
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 500)]
        cases: u32,
    },
}

fn run(cli: Cli) -> std::result::Result<u8, Error> {
    match cli.command {
        Command::CheckBound { max_sum, format, jobs } => {
            let summary = check_bound(max_sum, jobs.max(1))?;
            print!("{}", render_summary(&summary, format.as_str())?);
            Ok(if summary.unresolved > 0 { EXIT_UNRESOLVED } else { 0 })
        }
        Command::Eval { expr, dir, show } => {
            let el = parse_element(&expr)?;
            let dir = dir.as_deref().map(parse_direction).transpose()?;
            let need_dir = || {
                dir.as_ref().ok_or_else(|| {
                    Error::PreconditionViolated("--dir is required for this --show".into())
                })
            };
            match show {
                Show::Supp => {
                    let supp: Vec<String> =
                        el.support().iter().map(|p| p.to_string()).collect();
                    println!("{}", supp.join(" "));
                }
                Show::Leading => println!("{}", leading(&el, need_dir()?)?),
                Show::St => println!("{}", st(&el, need_dir()?)?),
                Show::En => println!("{}", en(&el, need_dir()?)?),
                Show::Fpoly => println!("{}", f_poly(&el, need_dir()?)?),
                Show::Dirs => {
                    let ds: Vec<String> =
                        directions(&el)?.iter().map(|d| d.to_string()).collect();
                    println!("[{}]", ds.join(", "));
                }
            }
            Ok(0)
        }
        Command::Bracket { p, q, dir } => {
            let p = parse_element(&p)?;
            let q = parse_element(&q)?;
            let d = parse_direction(&dir)?;
            println!("{}", bracket(&p, &q, &d)?);
            Ok(0)
        }
        Command::Polygon { expr, dir, out } => {
            let el = parse_element(&expr)?;
            let dir = dir.as_deref().map(parse_direction).transpose()?;
            match out {
                Some(path) => {
                    let svg = render_svg(&el, dir.as_ref())?;
                    std::fs::write(&path, svg).map_err(|e| {
                        Error::PreconditionViolated(format!(
                            "cannot write {}: {e}",
                            path.display()
                        ))
                    })?;
                }
                None => print!("{}", render_ascii(&el)),
            }
            Ok(0)
        }
        Command::Selftest { seed, cases } => {
            let seed = seed
                .or_else(|| {
                    std::env::var("WEYLSHAPE_SEED").ok().and_then(|s| s.parse().ok())
                })
                .unwrap_or(0xD1C3);
            let results = run_all(seed, cases);
            let mut all_pass = true;
            for r in &results {
                let status = if r.passed() { "pass" } else { "FAIL" };
                println!("{status}  {name:<26} {cases} cases, {failures} failures",
                    name = r.name, cases = r.cases, failures = r.failures);
                if let Some(detail) = &r.detail {
                    println!("      first failure: {detail}");
                }
                all_pass &= r.passed();
            }
            Ok(if all_pass { 0 } else { 1 })
        }
    }
}

fn exit_for(err: &Error) -> u8 {
    match err {
        // bad flag values are usage errors; bad payloads are data errors
        Error::UnknownFormat(_) => EXIT_USAGE,
        Error::PreconditionViolated(m) if m.contains("--") => EXIT_USAGE,
        Error::PreconditionViolated(m) if m.contains("max_sum") => EXIT_USAGE,
        _ => EXIT_DATA,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_for(&err))
        }
    }
}
