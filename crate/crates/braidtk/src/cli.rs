//! The command layer behind the `braidtk` binary. Every command returns its
//! output and exit code instead of printing, so it can be tested and
//! driven from examples.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use serde_json::{json, Value};

use crate::braid::{closure_summary, parse_braid, BraidWord};
use crate::certifier::{
    certify, enumerate_and_classify, Budget, CertifyOutcome, Family, TSV_HEADER,
};
use crate::divide::OrderedMorseDivide;
use crate::forms::{alexander_polynomial, arf_invariant, seifert_matrix};
use crate::linking::{dynkin_type, linking_graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Dot,
    Tsv,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            "tsv" => Ok(Format::Tsv),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze { word: String },
    Certify { word: String },
    Graph { word: String },
    Divide { path: PathBuf },
    Enumerate { family: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub format: Option<Format>,
    pub budget: Budget,
    pub jobs: Option<usize>,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            format: None,
            budget: Budget::default(),
            jobs: None,
            output: None,
        }
    }
}

/// What a command produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }

    fn fail(code: i32, msg: impl Into<String>) -> Self {
        CommandOutput {
            stdout: String::new(),
            stderr: msg.into() + "\n",
            code,
        }
    }
}

pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 1;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

fn parse(word: &str) -> Result<BraidWord, CommandOutput> {
    parse_braid(word).map_err(|e| CommandOutput::fail(EXIT_USAGE, format!("error: {e}")))
}

pub fn run(cfg: &RunConfig) -> CommandOutput {
    if cfg.budget.states == 0 || cfg.budget.depth == 0 || cfg.jobs == Some(0) {
        return CommandOutput::fail(EXIT_USAGE, "error: budgets and --jobs must be positive");
    }
    match &cfg.command {
        Command::Analyze { word } => cmd_analyze(word),
        Command::Certify { word } => cmd_certify(word, cfg.budget, cfg.output.as_ref()),
        Command::Graph { word } => cmd_graph(word),
        Command::Divide { path } => cmd_divide(path),
        Command::Enumerate { family } => {
            cmd_enumerate(family, cfg.budget, cfg.jobs, cfg.output.as_ref())
        }
    }
}

/// Closure data, linking graph shape, and for knots the Arf invariant and
/// Alexander polynomial.
pub fn analyze_json(w: &BraidWord) -> Value {
    let s = closure_summary(w);
    let g = linking_graph(w);
    let mut v = serde_json::to_value(&s).unwrap();
    let o = v.as_object_mut().unwrap();
    o.insert("word".into(), json!(w.to_string()));
    o.insert("bricks".into(), json!(g.vertex_count()));
    o.insert("edges".into(), json!(g.edge_count()));
    o.insert("dynkin".into(), json!(dynkin_type(&g).to_string()));
    if s.components == 1 {
        if let Ok(sd) = seifert_matrix(w) {
            if let Ok(a) = arf_invariant(&sd) {
                o.insert("arf".into(), json!(a));
            }
            o.insert("alexander".into(), json!(alexander_polynomial(&sd).to_string()));
        }
    }
    v
}

pub fn cmd_analyze(word: &str) -> CommandOutput {
    match parse(word) {
        Ok(w) => CommandOutput::ok(pretty(&analyze_json(&w))),
        Err(e) => e,
    }
}

pub fn cmd_graph(word: &str) -> CommandOutput {
    match parse(word) {
        Ok(w) => CommandOutput::ok(linking_graph(&w).to_dot()),
        Err(e) => e,
    }
}

/// Runs the certifier. A certificate goes to `output` when given, and
/// otherwise is printed after the summary.
pub fn cmd_certify(word: &str, budget: Budget, output: Option<&PathBuf>) -> CommandOutput {
    let w = match parse(word) {
        Ok(w) => w,
        Err(e) => return e,
    };
    let outcome = certify(&w, budget);
    let mut out = String::new();
    match &outcome {
        CertifyOutcome::Certified(c) => {
            let _ = writeln!(
                out,
                "certified: core of {} bricks, genus {}, {} attached, {} moves",
                c.v0_bricks.len(),
                c.h,
                c.attachment.len(),
                c.moves.len()
            );
            let text = serde_json::to_string(c).unwrap();
            match output {
                Some(p) => {
                    if let Err(e) = fs::write(p, text + "\n") {
                        return CommandOutput::fail(EXIT_IO, format!("error: {}: {e}", p.display()));
                    }
                    let _ = writeln!(out, "certificate written to {}", p.display());
                }
                None => out.push_str(&(text + "\n")),
            }
        }
        CertifyOutcome::KnownException(name) => {
            let _ = writeln!(out, "known exception: {name}");
        }
        CertifyOutcome::NotApplicable(g) => {
            let _ = writeln!(out, "not applicable: {g}");
        }
        CertifyOutcome::Unknown(r) => {
            let _ = writeln!(
                out,
                "unknown: no certificate within {} states, depth {}{}",
                r.states,
                r.depth,
                if r.exhausted { " (budget reached)" } else { "" }
            );
        }
    }
    CommandOutput {
        stdout: out,
        stderr: String::new(),
        code: outcome.exit_code(),
    }
}

pub fn cmd_divide(path: &PathBuf) -> CommandOutput {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return CommandOutput::fail(EXIT_IO, format!("error: {}: {e}", path.display())),
    };
    let d: OrderedMorseDivide = match text.trim().parse() {
        Ok(d) => d,
        Err(e) => return CommandOutput::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let counts = match d.validate() {
        Ok(c) => c,
        Err(e) => return CommandOutput::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let w = match crate::divide::divide_to_braid(&d) {
        Ok(w) => w,
        Err(e) => return CommandOutput::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let s = closure_summary(&w);
    CommandOutput::ok(pretty(&json!({
        "divide": d.to_string(),
        "word": w.to_string(),
        "counts": counts,
        "components": s.components,
        "betti": s.betti,
    })))
}

/// Writes the classification table. With `output` set, rows already in
/// the file are kept and classification resumes after them.
pub fn cmd_enumerate(
    family: &str,
    budget: Budget,
    jobs: Option<usize>,
    output: Option<&PathBuf>,
) -> CommandOutput {
    let fam: Family = match family.parse() {
        Ok(f) => f,
        Err(e) => return CommandOutput::fail(EXIT_USAGE, format!("error: {e}")),
    };
    let mut existing = String::new();
    if let Some(p) = output {
        if let Ok(t) = fs::read_to_string(p) {
            if t.starts_with(TSV_HEADER) {
                // Drop a trailing partial line from an interrupted run.
                let end = t.rfind('\n').map_or(0, |i| i + 1);
                existing = t[..end].to_string();
            }
        }
    }
    let done = existing.lines().count().saturating_sub(1);
    let rows = || enumerate_and_classify(&fam, budget, done);
    let rows = match jobs {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(rows),
            Err(e) => return CommandOutput::fail(EXIT_IO, format!("error: {e}")),
        },
        None => rows(),
    };
    let mut table = if existing.is_empty() {
        format!("{TSV_HEADER}\n")
    } else {
        existing
    };
    for r in &rows {
        let _ = writeln!(table, "{r}");
    }
    match output {
        Some(p) => match fs::write(p, &table) {
            Ok(()) => CommandOutput::ok(format!("{} rows written to {}\n", rows.len(), p.display())),
            Err(e) => CommandOutput::fail(EXIT_IO, format!("error: {}: {e}", p.display())),
        },
        None => CommandOutput::ok(table),
    }
}
