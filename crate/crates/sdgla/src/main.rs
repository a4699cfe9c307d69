use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sdgla::pipeline::{self, Command, Outcome, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "sdgla", version, about = "Moore complexes and DGLAs of simplicial Lie algebras, with exact checks")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Truncation level for generated simplicial objects.
    #[arg(long, global = true)]
    truncation: Option<usize>,
    /// Treat the input as an earlier output document and re-verify its DGLA section.
    #[arg(long, global = true)]
    recheck: bool,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand)]
enum Sub {
    /// Run the validators on an input document.
    Validate { input: PathBuf },
    /// Compute the Moore complex.
    Moore { input: PathBuf },
    /// Build the DGLA, verify its axioms and compare it with the superfield oracle.
    Dgla { input: PathBuf },
    /// Print the oracle's coefficient tables at one level.
    Oracle {
        input: PathBuf,
        #[arg(long)]
        level: Option<usize>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (path, command) = match &cli.command {
        Sub::Validate { input } => (input, Command::Validate),
        Sub::Moore { input } => (input, Command::Moore),
        Sub::Dgla { input } => (input, Command::Dgla),
        Sub::Oracle { input, level } => (input, Command::Oracle { level: *level }),
    };
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("sdgla: cannot read {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT as u8);
        }
    };
    let Outcome { exit, doc } = if cli.recheck { pipeline::recheck(&bytes) } else { pipeline::run(&bytes, command, cli.truncation) };
    let text = match cli.format {
        Format::Json => pipeline::to_json(&doc),
        Format::Text => pipeline::to_text(&doc),
    };
    if let (Some(stage), Some(e)) = (&doc.failed_stage, &doc.error) {
        eprintln!("sdgla: {stage} failed: {e}");
    }
    match &cli.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text) {
                eprintln!("sdgla: cannot write {}: {e}", p.display());
                return ExitCode::from(EXIT_INPUT as u8);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(exit as u8)
}
