//! The `zlogic` command line.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error (bad flags,
//! malformed arguments, unparsable files).

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::harness::{self, ExperimentSpec, HarnessError, ReportFormat};
use crate::machine_file;
use crate::mvl::{
    self, BinaryGenIndex, Kind, MvlError, TableDoc, TruthConvention, UnaryGenIndex,
};
use crate::radix::{self, RadixWord};
use crate::tm::{self, TuringMachine};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "zlogic", version, about = "Roots-of-unity logic tables, Turing machines and radix encodings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build one unary or binary table from its generator index.
    Table(TableArgs),
    /// Like `table`, but print only the boolean classification (n = 2).
    Classify(TableArgs),
    /// Enumerate a whole function family.
    Enumerate(EnumerateArgs),
    /// Run a Turing machine described in a machine file.
    Tm(TmArgs),
    /// Inspect and transform radix words written as `b:<base>|<d0>,<d1>,..`.
    Encode(EncodeArgs),
    /// Run a step-count experiment from a JSON spec file.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Unary,
    Binary,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Unary => Kind::Unary,
            KindArg::Binary => Kind::Binary,
        }
    }
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long = "n")]
    n: u32,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Comma separated index entries; n of them for unary, n*n (row-major)
    /// for binary.
    #[arg(long, value_delimiter = ',', required = true)]
    index: Vec<u32>,
    /// Exponent of z_2 that names boolean true.
    #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u32).range(0..=1))]
    true_exponent: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long = "n")]
    n: u32,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Print only "<total> <distinct>".
    #[arg(long)]
    distinct_only: bool,
    /// Lift the size guard (unary n <= 8, binary n <= 3).
    #[arg(long)]
    allow_large: bool,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Run,
    Accept,
    AcceptSpace,
}

#[derive(Debug, Args)]
struct TmArgs {
    machine: PathBuf,
    /// Input word: one symbol per character, or symbols separated by
    /// spaces or commas.
    #[arg(default_value = "")]
    word: String,
    #[arg(long, value_enum, default_value_t = Mode::Run)]
    mode: Mode,
    /// Step bound.
    #[arg(long, default_value_t = 1000)]
    t: u64,
    /// Head-position bound for accept-space.
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    trace: bool,
    /// Explicit initial head positions, comma separated.
    #[arg(long, value_delimiter = ',')]
    heads: Option<Vec<usize>>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct EncodeArgs {
    word: String,
    #[command(subcommand)]
    action: EncodeAction,
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum EncodeAction {
    /// Decimal value of the word.
    Value,
    /// Same value in another base.
    Rebase { base: u64 },
    /// Shift digit `i` by `k` modulo the base.
    Shift { i: usize, k: u64 },
    /// Do both words have equal values modulo n?
    Check { other: String, n: String },
}

#[derive(Debug, Args)]
struct ExperimentArgs {
    spec: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

/// Structured output of `encode ... value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueDoc {
    pub value: String,
}

/// Structured output of `encode ... check`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub equal: bool,
}

/// Structured output of `tm --json`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TmDoc {
    pub outcome: tm::OutcomeDoc,
    pub trace_text: Vec<String>,
}

struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn domain(message: impl ToString) -> Failure {
    Failure {
        code: EXIT_DOMAIN,
        message: message.to_string(),
    }
}

fn io_fail(e: io::Error) -> Failure {
    domain(format!("i/o error: {e}"))
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Normal output goes to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    // Buffer stdout so a failing command leaves no partial domain output.
    let mut buf: Vec<u8> = Vec::new();
    let result = match cli.command {
        Command::Table(a) => cmd_table(&a, false, &mut buf),
        Command::Classify(a) => cmd_table(&a, true, &mut buf),
        Command::Enumerate(a) => cmd_enumerate(&a, &mut buf),
        Command::Tm(a) => cmd_tm(&a, &mut buf, err),
        Command::Encode(a) => cmd_encode(&a, &mut buf),
        Command::Experiment(a) => cmd_experiment(&a, &mut buf, err),
    };
    match result {
        Ok(()) => {
            if out.write_all(&buf).and_then(|_| out.flush()).is_err() {
                return EXIT_DOMAIN;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn mvl_failure(e: MvlError) -> Failure {
    match e {
        MvlError::IndexShape { .. } | MvlError::ArgumentOutOfRange { .. } => {
            usage(format!("malformed index: {e}"))
        }
        other => domain(other),
    }
}

fn cmd_table(a: &TableArgs, classify_only: bool, out: &mut Vec<u8>) -> CmdResult {
    if a.n < 2 {
        return Err(domain(MvlError::ArityTooSmall(a.n)));
    }
    let conv = TruthConvention::new(a.true_exponent).map_err(domain)?;
    let doc = match a.kind {
        KindArg::Unary => {
            let idx = UnaryGenIndex::new(a.n, a.index.clone()).map_err(mvl_failure)?;
            let t = mvl::unary_from_index(&idx);
            let mut doc = TableDoc::unary(&idx, &t);
            if a.n == 2 {
                let c = mvl::classify_unary(&t, conv).map_err(domain)?;
                doc.classification = Some(c.name().to_string());
                if let Some(l) = mvl::published_unary_label(&idx) {
                    doc.published_label = Some(l.text.to_string());
                    doc.published_agrees = Some(l.names == c);
                }
            }
            doc
        }
        KindArg::Binary => {
            let idx = BinaryGenIndex::new(a.n, a.index.clone()).map_err(mvl_failure)?;
            let t = mvl::binary_from_index(&idx);
            let mut doc = TableDoc::binary(&idx, &t);
            if a.n == 2 {
                let c = mvl::classify_binary(&t, conv).map_err(domain)?;
                doc.classification = Some(c.name().to_string());
                if let Some(l) = mvl::published_binary_label(&idx) {
                    doc.published_label = Some(l.text.to_string());
                    doc.published_agrees = Some(l.names == c);
                }
            }
            doc
        }
    };
    if classify_only {
        let Some(c) = doc.classification.clone() else {
            return Err(domain(MvlError::NotBoolean(a.n)));
        };
        if a.json {
            writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable")).map_err(io_fail)?;
        } else {
            writeln!(out, "{c}").map_err(io_fail)?;
        }
        return Ok(());
    }
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
            .map_err(io_fail)?;
        return Ok(());
    }
    let index: Vec<String> = doc.index.iter().map(u32::to_string).collect();
    writeln!(out, "{} n={} index={}", doc.kind, doc.modulus, index.join(",")).map_err(io_fail)?;
    write!(out, "{}", doc.grid()).map_err(io_fail)?;
    if let Some(c) = &doc.classification {
        writeln!(out, "classification: {c}").map_err(io_fail)?;
    }
    if let (Some(label), Some(agrees)) = (&doc.published_label, doc.published_agrees) {
        let verdict = if agrees { "agrees" } else { "disagrees" };
        writeln!(out, "published label: {label} ({verdict})").map_err(io_fail)?;
    }
    Ok(())
}

fn enumerate_line(doc: &TableDoc, json: bool) -> String {
    if json {
        return serde_json::to_string(doc).expect("serializable");
    }
    let index: Vec<String> = doc.index.iter().map(u32::to_string).collect();
    let outputs = match &doc.outputs {
        mvl::TableOutputs::Unary(v) => v.iter().map(u32::to_string).collect::<Vec<_>>().join(" "),
        mvl::TableOutputs::Binary(rows) => rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(" / "),
    };
    format!("{} -> {}", index.join(","), outputs)
}

fn cmd_enumerate(a: &EnumerateArgs, out: &mut Vec<u8>) -> CmdResult {
    let kind: Kind = a.kind.into();
    let mut sink: Box<dyn Write> = match &a.output {
        Some(path) => Box::new(io::BufWriter::new(
            fs::File::create(path).map_err(io_fail)?,
        )),
        None => Box::new(&mut *out),
    };
    if a.distinct_only {
        let r = mvl::distinctness_report(a.n, kind, a.allow_large).map_err(domain)?;
        if a.json {
            writeln!(sink, "{}", serde_json::to_string(&r).expect("serializable")).map_err(io_fail)?;
        } else {
            writeln!(sink, "{} {}", r.total, r.distinct).map_err(io_fail)?;
        }
        return sink.flush().map_err(io_fail);
    }
    match kind {
        Kind::Unary => {
            for (idx, t) in mvl::enumerate_unary(a.n, a.allow_large).map_err(domain)? {
                writeln!(sink, "{}", enumerate_line(&TableDoc::unary(&idx, &t), a.json))
                    .map_err(io_fail)?;
            }
        }
        Kind::Binary => {
            for (idx, t) in mvl::enumerate_binary(a.n, a.allow_large).map_err(domain)? {
                writeln!(sink, "{}", enumerate_line(&TableDoc::binary(&idx, &t), a.json))
                    .map_err(io_fail)?;
            }
        }
    }
    sink.flush().map_err(io_fail)
}

fn cmd_tm(a: &TmArgs, out: &mut Vec<u8>, err: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(&a.machine)
        .map_err(|e| usage(format!("cannot read {}: {e}", a.machine.display())))?;
    let def = machine_file::parse(&text)
        .map_err(|e| usage(format!("{}: {e}", a.machine.display())))?;
    let violations = tm::validate(&def);
    let (errors, warnings): (Vec<_>, Vec<_>) = violations.into_iter().partition(tm::Violation::is_error);
    if !errors.is_empty() {
        for v in &errors {
            let _ = writeln!(err, "{v}");
        }
        return Err(domain(format!("{} violation(s) in {}", errors.len(), a.machine.display())));
    }
    if !warnings.is_empty() {
        let _ = writeln!(
            err,
            "note: {} (state, scanned) pair(s) have no transition and act as dead ends",
            warnings.len()
        );
    }
    let m = TuringMachine::new(def).map_err(domain)?;
    let w = m.parse_word(&a.word).map_err(domain)?;
    let start = m
        .initial_id_with_heads(&w, a.heads.clone())
        .map_err(domain)?;
    let outcome = match a.mode {
        Mode::Run => {
            if a.heads.is_some() {
                return Err(usage("--heads is only supported with --mode accept or accept-space"));
            }
            m.run_deterministic(&w, a.t, a.trace).map_err(domain)?
        }
        Mode::Accept => m.bounded_search(start, a.t, None).map_err(domain)?,
        Mode::AcceptSpace => {
            let s = a.s.ok_or_else(|| usage("--mode accept-space needs --s"))?;
            if s == 0 {
                return Err(usage("--s must be at least 1"));
            }
            m.bounded_search(start, a.t, Some(s)).map_err(domain)?
        }
    };
    let trace_text: Vec<String> = if a.trace {
        outcome
            .trace
            .iter()
            .flatten()
            .map(|id| m.format_id(id))
            .collect()
    } else {
        Vec::new()
    };
    if a.json {
        let mut doc = m.outcome_doc(&outcome);
        if !a.trace {
            doc.trace = None;
        }
        let doc = TmDoc {
            outcome: doc,
            trace_text,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
            .map_err(io_fail)?;
    } else {
        writeln!(out, "{} {}", outcome.verdict, outcome.steps_used).map_err(io_fail)?;
        for line in trace_text {
            writeln!(out, "{line}").map_err(io_fail)?;
        }
    }
    Ok(())
}

fn parse_word_arg(text: &str) -> Result<RadixWord, Failure> {
    RadixWord::parse(text)
        .map_err(|e| usage(e.to_string()))?
        .map_err(domain)
}

fn cmd_encode(a: &EncodeArgs, out: &mut Vec<u8>) -> CmdResult {
    let w = parse_word_arg(&a.word)?;
    let print_word = |out: &mut Vec<u8>, w: &RadixWord| -> CmdResult {
        if a.json {
            writeln!(out, "{}", serde_json::to_string(w).expect("serializable")).map_err(io_fail)
        } else {
            writeln!(out, "{w}").map_err(io_fail)
        }
    };
    match &a.action {
        EncodeAction::Value => {
            let v = radix::word_value(&w).to_string();
            if a.json {
                writeln!(out, "{}", serde_json::to_string(&ValueDoc { value: v }).expect("serializable"))
                    .map_err(io_fail)?;
            } else {
                writeln!(out, "{v}").map_err(io_fail)?;
            }
        }
        EncodeAction::Rebase { base } => {
            let r = radix::rebase(&w, *base).map_err(domain)?;
            print_word(out, &r)?;
        }
        EncodeAction::Shift { i, k } => {
            let r = radix::symbol_shift(&w, *i, *k).map_err(domain)?;
            print_word(out, &r)?;
        }
        EncodeAction::Check { other, n } => {
            let other = parse_word_arg(other)?;
            let n: BigUint = n
                .parse()
                .map_err(|_| usage(format!("modulus `{n}` is not a decimal integer")))?;
            let equal = radix::exponent_identity_check(&w, &other, &n).map_err(domain)?;
            if a.json {
                writeln!(out, "{}", serde_json::to_string(&CheckDoc { equal }).expect("serializable"))
                    .map_err(io_fail)?;
            } else {
                writeln!(out, "{equal}").map_err(io_fail)?;
            }
        }
    }
    Ok(())
}

fn cmd_experiment(a: &ExperimentArgs, out: &mut Vec<u8>, err: &mut dyn Write) -> CmdResult {
    let text = fs::read_to_string(&a.spec)
        .map_err(|e| usage(format!("cannot read {}: {e}", a.spec.display())))?;
    let spec: ExperimentSpec = serde_json::from_str(&text)
        .map_err(|e| usage(format!("{}: {e}", a.spec.display())))?;
    let (report, failure) = match harness::run_experiment_partial(&spec) {
        Ok(r) => r,
        Err(e @ HarnessError::InvalidSpec(_)) => return Err(usage(e.to_string())),
        Err(e) => return Err(domain(e)),
    };
    let format = match a.format {
        FormatArg::Csv => ReportFormat::Csv,
        FormatArg::Json => ReportFormat::Json,
    };
    match &a.output {
        Some(path) => {
            let file = fs::File::create(path).map_err(io_fail)?;
            harness::emit_report(&report, format, io::BufWriter::new(file)).map_err(domain)?;
            writeln!(out, "{}", report.summary_line()).map_err(io_fail)?;
        }
        None => {
            harness::emit_report(&report, format, &mut *out).map_err(domain)?;
            let _ = writeln!(err, "{}", report.summary_line());
        }
    }
    match failure {
        Some(e) => {
            // the partial report has been written; still a failed run
            let _ = err.write_all(out);
            out.clear();
            Err(domain(format!("experiment stopped early: {e}")))
        }
        None => Ok(()),
    }
}
