use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use freediv::{analyze_text, AnalyzeOptions, DivisorReport, Error, Stage};

mod render;

#[derive(Parser)]
#[command(name = "freediv", version, about = "Free divisor and logarithmic D-module analysis")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every stage and report all verdicts.
    Analyze(Common),
    /// Logarithmic vector fields and a Saito-certified basis.
    Derlog(Common),
    /// Regularity of the principal symbols of the basis.
    Koszul(Common),
    /// Dual presentation by adjoints of the last Spencer map.
    Dual(Common),
    /// The logarithmic Spencer complex and its syzygy comparison.
    Spencer(Common),
    /// Whether every delta_i + m_i kills 1/f.
    CheckAnn(Common),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Common {
    /// Divisor equation, e.g. "x*y*(x+y)".
    #[arg(short = 'f')]
    f: String,
    /// Variable names in order, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    vars: Vec<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Drop logarithmic field candidates of higher degree.
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Skip the Weyl syzygy comparison of the Spencer complex.
    #[arg(long)]
    skip_spencer: bool,
    /// Record per-stage wall time in the report.
    #[arg(long)]
    timings: bool,
}

fn stages(cmd: &Command) -> (&Common, Vec<Stage>) {
    match cmd {
        Command::Analyze(c) => (c, Stage::ALL.to_vec()),
        Command::Derlog(c) => (c, vec![Stage::Derlog]),
        Command::Koszul(c) => (c, vec![Stage::Koszul]),
        Command::Dual(c) => (c, vec![Stage::Alpha, Stage::Dual]),
        Command::Spencer(c) => (c, vec![Stage::Alpha, Stage::Spencer, Stage::SpencerSyzygies]),
        Command::CheckAnn(c) => (c, vec![Stage::Annihilator]),
    }
}

fn check_vars(vars: &[String]) -> Result<(), Error> {
    for (i, v) in vars.iter().enumerate() {
        let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(Error::Precondition(format!("invalid variable name '{v}'")));
        }
        if v.starts_with('D') && vars.iter().any(|w| v[1..] == *w) {
            return Err(Error::Precondition(format!("'{v}' clashes with the derivative of '{}'", &v[1..])));
        }
        if vars[..i].contains(v) {
            return Err(Error::Precondition(format!("variable '{v}' listed twice")));
        }
    }
    Ok(())
}

fn emit(common: &Common, report: &DivisorReport, stages: &[Stage]) -> std::io::Result<()> {
    let body = match common.format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Text => render::text(report, stages),
    };
    match &common.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, stages) = stages(&cli.command);
    let opts = AnalyzeOptions {
        max_degree: common.max_degree,
        skip_spencer: common.skip_spencer,
        timings: common.timings,
        stages: stages.clone(),
    };
    let result = check_vars(&common.vars).and_then(|()| analyze_text(&common.f, &common.vars, &opts));
    let report = match result {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(if e.is_input_error() { 2 } else { 3 });
        }
    };
    if let Err(e) = emit(common, &report, &stages) {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        for v in &report.violations {
            eprintln!("invariant violated: {v}");
        }
        ExitCode::from(3)
    }
}
