use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use stabring_cli::plantfile::{Loaded, ParseError, PlantFile};
use stabring_cli::{
    analyze, coprime_factorization_cmd, family_cmd, report, synthesize_cmd, verify_cmd, Options, Outcome, Status,
};

/// Exact stabilizing-controller synthesis over Z[√m·i] and Q[x², x³].
///
/// Exit status: 0 verified, 2 parse or input error, 3 unverified or
/// unknown, 4 synthesis failure.
#[derive(Parser)]
#[command(name = "stabring", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Add LaTeX renderings of the main elements.
    #[arg(long, global = true)]
    latex: bool,
    /// Degree bound for delay-ring searches.
    #[arg(long, global = true)]
    bound: Option<usize>,
    /// Coefficient box for quadratic searches.
    #[arg(long = "box", global = true)]
    search_box: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Causality, gcd data and elementary-factor witnesses.
    Analyze { file: PathBuf },
    /// Synthesize and verify a stabilizing controller.
    Synthesize {
        file: PathBuf,
        #[arg(long)]
        omega_max: Option<u32>,
        /// Parameter r1, an element of the ring.
        #[arg(long, allow_hyphen_values = true)]
        r1: Option<String>,
        /// Parameter r2, an element of the ring.
        #[arg(long, allow_hyphen_values = true)]
        r2: Option<String>,
    },
    /// Closed-loop matrix and stability of a plant/controller pair.
    Verify {
        file: PathBuf,
        /// Controller literal; defaults to the file's controller.
        #[arg(long, allow_hyphen_values = true)]
        controller: Option<String>,
    },
    /// Decide whether the plant has a coprime factorization.
    CoprimeFactorization { file: PathBuf },
    /// Run the Z[√(xy−1)·i] family instance end to end.
    Family {
        #[arg(long)]
        x: i64,
        #[arg(long)]
        y: i64,
    },
}

fn load(path: &PathBuf) -> Result<Loaded, ParseError> {
    let text = std::fs::read_to_string(path).map_err(|e| ParseError::plain(format!("{}: {e}", path.display())))?;
    PlantFile::parse(&text)?.load()
}

fn run(cli: &Cli) -> Result<Outcome, ParseError> {
    let mut opts = Options { bound: cli.bound, search_box: cli.search_box, latex: cli.latex, ..Options::default() };
    match &cli.command {
        Command::Analyze { file } => Ok(analyze(&load(file)?, &opts)),
        Command::Synthesize { file, omega_max, r1, r2 } => {
            opts.omega_max = *omega_max;
            opts.r1 = r1.clone();
            opts.r2 = r2.clone();
            synthesize_cmd(&load(file)?, &opts)
        }
        Command::Verify { file, controller } => verify_cmd(&load(file)?, controller.as_deref(), &opts),
        Command::CoprimeFactorization { file } => Ok(coprime_factorization_cmd(&load(file)?, &opts)),
        Command::Family { x, y } => family_cmd(*x, *y, &opts),
    }
}

fn render(cli: &Cli, result: &Result<Outcome, ParseError>, start: Instant) -> String {
    match result {
        Ok(out) if cli.json => {
            format!("{}\n", serde_json::to_string_pretty(&out.report).expect("reports serialize"))
        }
        Ok(out) => {
            format!("{}status: {:?}\nelapsed: {:.3?}\n", report::human(&out.report), out.status, start.elapsed())
        }
        Err(e) if cli.json => {
            let v = serde_json::json!({"error": {"line": e.line, "column": e.column, "message": e.message}});
            format!("{}\n", serde_json::to_string_pretty(&v).expect("reports serialize"))
        }
        Err(_) => String::new(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = std::io::stdout().lock().write_all(render(&cli, &result, start).as_bytes());
    match result {
        Ok(out) => ExitCode::from(out.status as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(Status::ParseError as u8)
        }
    }
}
