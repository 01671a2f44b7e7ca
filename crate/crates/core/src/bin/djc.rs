use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use djc::commands::{self, Report};
use djc::config::{Format, RunConfig};
use djc::validate;

#[derive(Parser)]
#[command(name = "djc", version, about = "Two coupled Jaynes-Cummings cells: spectra, eigenstates, absorption")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One-excitation energies over a detuning sweep
    Spectrum(RunArgs),
    /// Probe susceptibility over a frequency sweep
    Absorption(RunArgs),
    /// Amplitudes, entanglement and dark/bright classification
    Eigenstates(RunArgs),
    /// Seeded closed-form vs eigensolver checks
    Validate(ValidateArgs),
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, value_name = "PATH")]
    config: PathBuf,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
    /// Accepted for uniformity; these commands are deterministic
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ValidateArgs {
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    format: Option<Format>,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse::<Format>().map_err(|e| e.to_string())
}

enum Failure {
    Validation,
    Usage(String),
}

impl From<djc::Error> for Failure {
    fn from(e: djc::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn write_out(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(args: &RunArgs) -> Result<(RunConfig, Option<PathBuf>, Format), Failure> {
    let text = fs::read_to_string(&args.config)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", args.config.display())))?;
    let cfg = RunConfig::parse(&text)?;
    let out = args.out.clone().or_else(|| cfg.output.path.clone());
    let format = args.format.unwrap_or(cfg.output.format);
    Ok((cfg, out, format))
}

fn summary_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".summary.json");
    PathBuf::from(s)
}

fn emit(report: &Report, cfg: &RunConfig, out: Option<&Path>, format: Format, side_summary: bool) -> Result<(), Failure> {
    write_out(out, &report.render(cfg, format))?;
    if side_summary && format == Format::Csv {
        let mut text = serde_json::to_string_pretty(&report.summary).expect("serializable summary");
        text.push('\n');
        match out {
            Some(p) => write_out(Some(&summary_path(p)), &text)?,
            None => eprint!("{text}"),
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Spectrum(a) => {
            let (cfg, out, format) = load(&a)?;
            emit(&commands::spectrum(&cfg)?, &cfg, out.as_deref(), format, false)
        }
        Command::Absorption(a) => {
            let (cfg, out, format) = load(&a)?;
            emit(&commands::absorption(&cfg)?, &cfg, out.as_deref(), format, true)
        }
        Command::Eigenstates(a) => {
            let (cfg, out, format) = load(&a)?;
            let (report, text) = commands::eigenstates(&cfg)?;
            print!("{text}");
            match out {
                Some(p) => write_out(Some(&p), &report.render(&cfg, format)),
                None => Ok(()),
            }
        }
        Command::Validate(a) => {
            let report = validate::run(a.seed, a.trials as usize);
            let text = match a.format {
                Some(Format::Json) => {
                    let doc = json!({
                        "config": { "seed": a.seed, "trials": a.trials },
                        "data": report.suites,
                        "summary": { "passed": report.passed() },
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializable report");
                    s.push('\n');
                    s
                }
                Some(Format::Csv) => report.to_csv(),
                None => report.summary(),
            };
            write_out(a.out.as_deref(), &text)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Validation)
            }
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Validation) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
