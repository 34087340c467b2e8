//! instance files, the command surface and machine-readable reports
//!
//! exit codes: 0 when every selected check passes, 1 on a check failure, 2 on an
//! input error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::Parser;
use serde::Serialize;
use serde_json::{Map, Value};

use crate::error::Error;
use crate::exactlin::Field;
use crate::report::{CheckRecord, Status, REPORT_SCHEMA_VERSION};

mod commands;
mod instance;

pub use commands::*;
pub use instance::*;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// check skew-monoidal structures induced by bialgebroids
#[derive(Debug, Parser)]
#[command(name = "skewmon", version)]
pub struct Args {
    /// what to check
    #[arg(value_enum)]
    pub command: Command,
    /// instance file (JSON)
    pub instance: PathBuf,
    #[arg(long, value_enum, default_value_t = ProbeLevel::Default)]
    pub probes: ProbeLevel,
    /// highest simplicial level for the lax comonad
    #[arg(long, default_value_t = 3)]
    pub nmax: usize,
    /// cap on probe arrows between each pair of probe objects
    #[arg(long)]
    pub max_maps: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// run k single-entry corruptions, each of which must trip a named check
    #[arg(long, default_value_t = 0)]
    pub seed_mutations: usize,
    /// write the report here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// record wall-clock time per suite (reports stop being reproducible)
    #[arg(long)]
    pub timing: bool,
}

impl Args {
    pub fn options(&self) -> Options {
        Options {
            probes: self.probes,
            n_max: self.nmax,
            max_maps: self.max_maps,
            seed_mutations: self.seed_mutations,
            timing: self.timing,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub not_verified: usize,
    pub error: usize,
}

#[derive(Debug, Serialize)]
pub struct SuiteDoc {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
    pub records: Vec<CheckRecord>,
}

/// the report document
#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub schema_version: &'static str,
    pub command: String,
    pub instance: String,
    pub field: String,
    pub passed: bool,
    pub counts: Counts,
    pub summary: Map<String, Value>,
    pub suites: Vec<SuiteDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mutations: Option<Vec<CheckRecord>>,
}

impl ReportDoc {
    pub fn new<F: Field>(cmd: Command, built: &Built<F>, out: Outcome) -> Self {
        let count = |s: Status| out.records().filter(|r| r.status == s).count();
        let counts = Counts {
            pass: count(Status::Pass),
            fail: count(Status::Fail),
            not_verified: count(Status::NotVerified),
            error: count(Status::Error),
        };
        let passed = out.passed();
        ReportDoc {
            schema_version: REPORT_SCHEMA_VERSION,
            command: cmd.name().into(),
            instance: built.name.clone(),
            field: built.field.name(),
            passed,
            counts,
            summary: out.summary,
            suites: out
                .suites
                .into_iter()
                .map(|s| SuiteDoc {
                    name: s.name,
                    passed: s.report.all_passed(),
                    millis: s.millis,
                    records: s.report.records,
                })
                .collect(),
            mutations: out.mutations.map(|m| m.records),
        }
    }

    pub fn records(&self) -> impl Iterator<Item = &CheckRecord> {
        self.suites.iter().flat_map(|s| s.records.iter())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} on {} over {}\n", self.command, self.instance, self.field);
        for s in &self.suites {
            let millis = s.millis.map(|m| format!(" ({m} ms)")).unwrap_or_default();
            out.push_str(&format!("== {}{millis}\n", s.name));
            for r in &s.records {
                out.push_str(&line(r));
            }
        }
        if let Some(m) = &self.mutations {
            out.push_str("== mutations\n");
            for r in m {
                out.push_str(&line(r));
            }
        }
        for (k, v) in &self.summary {
            let v = match v {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!("{k}: {v}\n"));
        }
        let c = &self.counts;
        out.push_str(&format!(
            "{}: {} pass, {} fail, {} not verified, {} error\n",
            if self.passed { "PASS" } else { "FAIL" },
            c.pass,
            c.fail,
            c.not_verified,
            c.error
        ));
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.to_json(),
            Format::Text => self.to_text(),
        }
    }
}

fn line(r: &CheckRecord) -> String {
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::NotVerified => "not-verified",
        Status::Error => "ERROR",
    };
    let detail = r.detail.as_ref().map(|d| format!(" - {d}")).unwrap_or_default();
    format!("{status:<12} {:<28} [{}] {}{detail}\n", r.id, r.anchor, r.subject)
}

/// the document written for an input error
#[derive(Debug, Serialize)]
struct InputErrorDoc<'a> {
    schema_version: &'static str,
    command: &'a str,
    passed: bool,
    error: InputError,
}

#[derive(Debug, Serialize)]
struct InputError {
    path: String,
    message: String,
}

fn input_error(e: &Error) -> InputError {
    match e {
        Error::Input { path, msg } => InputError {
            path: path.clone(),
            message: msg.clone(),
        },
        other => InputError {
            path: String::new(),
            message: other.to_string(),
        },
    }
}

/// run a parsed command; returns the rendered report and the exit code
pub fn execute(args: &Args) -> (String, i32) {
    let loaded = load(&args.instance).and_then(|(file, loaded)| {
        if file.bialgebroid.is_none() {
            return Err(Error::Input {
                path: "bialgebroid".into(),
                msg: format!("{} needs a bialgebroid block", args.command.name()),
            });
        }
        Ok((file, loaded))
    });
    let (file, loaded) = match loaded {
        Ok(x) => x,
        Err(e) => {
            let err = input_error(&e);
            let text = match args.format {
                Format::Json => {
                    let doc = InputErrorDoc {
                        schema_version: REPORT_SCHEMA_VERSION,
                        command: args.command.name(),
                        passed: false,
                        error: err,
                    };
                    serde_json::to_string_pretty(&doc).expect("error serializes") + "\n"
                }
                Format::Text => format!("input error at {}: {}\n", err.path, err.message),
            };
            return (text, EXIT_INPUT);
        }
    };
    let opts = args.options();
    let doc = match &loaded {
        Loaded::Prime(b) => ReportDoc::new(args.command, b, run_command(&file, b, args.command, &opts)),
        Loaded::Rational(b) => ReportDoc::new(args.command, b, run_command(&file, b, args.command, &opts)),
    };
    let code = if doc.passed { EXIT_PASS } else { EXIT_FAIL };
    (doc.render(args.format), code)
}

/// cap rayon's pool at `SKEWMON_THREADS` when set
pub fn init_threads() {
    if let Some(n) = std::env::var("SKEWMON_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

/// the whole command line: parse, run, write; returns the exit code
pub fn main_from<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
        }
    };
    init_threads();
    let (text, code) = execute(&args);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("cannot write {}: {e}", path.display());
                return EXIT_INPUT;
            }
        }
        None => print!("{text}"),
    }
    code
}
