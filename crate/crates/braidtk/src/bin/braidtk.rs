use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use braidtk::certifier::Budget;
use braidtk::cli::{run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "braidtk", version, about = "Positive braids, linking graphs and assemblage certificates")]
struct Args {
    #[command(subcommand)]
    command: Cmd,
    /// Output format (json, dot or tsv); each command has one natural format.
    #[arg(long, global = true)]
    format: Option<Format>,
    #[arg(long, global = true, default_value_t = Budget::default().states)]
    budget_states: usize,
    #[arg(long, global = true, default_value_t = Budget::default().depth)]
    budget_depth: usize,
    /// Worker threads for enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Certificate or table file.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closure invariants, linking graph shape and Arf invariant.
    Analyze { word: String },
    /// Search for an assemblage certificate.
    Certify { word: String },
    /// Linking graph in DOT.
    Graph { word: String },
    /// Braid word and counts of an ordered Morse divide file.
    Divide { path: PathBuf },
    /// Classification table of a word family, e.g. `three-braids:10-14`.
    Enumerate { family: String },
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (command, natural) = match args.command {
        Cmd::Analyze { word } => (Command::Analyze { word }, Format::Json),
        Cmd::Certify { word } => (Command::Certify { word }, Format::Json),
        Cmd::Graph { word } => (Command::Graph { word }, Format::Dot),
        Cmd::Divide { path } => (Command::Divide { path }, Format::Json),
        Cmd::Enumerate { family } => (Command::Enumerate { family }, Format::Tsv),
    };
    if let Some(f) = args.format {
        if f != natural {
            eprintln!("error: this command only writes {natural:?}");
            return ExitCode::from(2);
        }
    }
    let cfg = RunConfig {
        command,
        format: args.format,
        budget: Budget {
            states: args.budget_states,
            depth: args.budget_depth,
        },
        jobs: args.jobs,
        output: args.output,
    };
    let out = run(&cfg);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code as u8)
}
