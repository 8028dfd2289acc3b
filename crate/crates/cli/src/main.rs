use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hsdepth_cli::corpus::{bundled_instances, load_dir, render_summary, run_corpus};
use hsdepth_cli::request::{parse_field, OutputFormat};
use hsdepth_cli::{analyze_request, parse_request, CliError};

#[derive(Parser)]
#[command(name = "hsdepth", version, about = "Hilbert coefficients, reductions and depth of associated graded rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one request file.
    Analyze {
        file: PathBuf,
        /// Write the JSON report to this path (`-` for stdout).
        #[arg(long)]
        json: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        max_power: Option<u32>,
        #[arg(long)]
        attempts: Option<u32>,
        /// `q` or `fp:<p>`; overrides the request's field.
        #[arg(long, value_parser = parse_field)]
        field: Option<hsdepth_core::FieldSpec>,
        /// Record wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Run a corpus directory, or the bundled corpus when none is given.
    Corpus {
        dir: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Write one `<instance>.report.json` per instance here.
        #[arg(long)]
        reports: Option<PathBuf>,
    },
}

fn fail(e: &CliError) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn analyze(
    file: PathBuf,
    json: Option<String>,
    seed: Option<u64>,
    max_power: Option<u32>,
    attempts: Option<u32>,
    field: Option<hsdepth_core::FieldSpec>,
    timing: bool,
) -> ExitCode {
    let text = match std::fs::read_to_string(&file) {
        Ok(t) => t,
        Err(e) => return fail(&CliError::Io(format!("{}: {e}", file.display()))),
    };
    let mut req = match parse_request(&text) {
        Ok(r) => r,
        Err(e) => return fail(&CliError::Parse(e)),
    };
    if seed.is_some() {
        req.seed = seed;
    }
    if max_power.is_some() {
        req.bounds.max_power = max_power;
    }
    if attempts.is_some() {
        req.bounds.attempts = attempts;
    }
    if let Some(f) = field {
        req.ring.set_field(f);
    }
    let report = match analyze_request(&req, timing) {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    match json.as_deref() {
        Some("-") => println!("{}", report.to_json()),
        Some(path) => {
            if let Err(e) = std::fs::write(path, report.to_json() + "\n") {
                return fail(&CliError::Io(format!("{path}: {e}")));
            }
            print!("{}", report.render_text());
        }
        None if req.output == Some(OutputFormat::Json) => println!("{}", report.to_json()),
        None => print!("{}", report.render_text()),
    }
    if report.clean {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn corpus(dir: Option<PathBuf>, jobs: usize, reports: Option<PathBuf>) -> ExitCode {
    let instances = match dir {
        Some(d) => match load_dir(&d) {
            Ok(i) => i,
            Err(e) => return fail(&e),
        },
        None => bundled_instances(),
    };
    let outcomes = run_corpus(&instances, jobs);
    if let Some(out) = reports {
        if let Err(e) = std::fs::create_dir_all(&out) {
            return fail(&CliError::Io(format!("{}: {e}", out.display())));
        }
        for o in &outcomes {
            if let Some(r) = &o.report {
                let path = out.join(format!("{}.report.json", o.name));
                if let Err(e) = std::fs::write(&path, r.to_json() + "\n") {
                    return fail(&CliError::Io(format!("{}: {e}", path.display())));
                }
            }
        }
    }
    let summary = render_summary(&outcomes);
    let _ = std::io::stdout().write_all(summary.as_bytes());
    if outcomes.iter().all(|o| o.passed()) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { file, json, seed, max_power, attempts, field, timing } => {
            analyze(file, json, seed, max_power, attempts, field, timing)
        }
        Command::Corpus { dir, jobs, reports } => corpus(dir, jobs, reports),
    }
}
