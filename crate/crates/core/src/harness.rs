//! Step-count comparison between wide-alphabet machines and their binary
//! counterparts.
//!
//! For each word length `l` the harness picks a base `b` (fixed, or
//! `2^(l^2)`), samples length-`l` base-`b` words, and runs two machines
//! recognizing the same language: one reading the base-`b` digits directly,
//! one reading the binary encoding of the word (`log2(b)` bits per digit,
//! least significant first). Both runs are bounded searches, so every step
//! count is the length of a shortest accepting path.
//!
//! The fitted growth exponent is a descriptive statistic. It does not verify
//! any simulation bound.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::radix::{self, RadixError, RadixWord};
use crate::tm::{MachineDef, Move, TmError, TransitionRule, TuringMachine, Verdict};

/// Largest wide alphabet (number of digit symbols) the harness will build.
pub const DEFAULT_SYMBOL_CAP: u64 = 1 << 10;

/// Printed with every report summary.
pub const BOUND_DISCREPANCY_NOTE: &str = "the simulation bound under test is stated as \"time T^3\" in the theorem but as \"time T^6\" in the last line of its proof; the fitted exponent is descriptive and verifies neither";

const BLANK: &str = "_";
const MARKER: &str = "#";

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid experiment spec: {0}")]
    InvalidSpec(String),
    #[error("unknown machine family `{0}` (expected scan-accept, digit-sum-parity or guessed-digit)")]
    UnknownFamily(String),
    #[error("alphabet of {b} symbols exceeds the cap of {cap}")]
    AlphabetTooLarge { b: u64, cap: u64 },
    #[error("base 2^({l}^2) does not fit in 64 bits")]
    BaseOverflow { l: u32 },
    #[error(transparent)]
    Radix(#[from] RadixError),
    #[error(transparent)]
    Tm(#[from] TmError),
    #[error("writing report: {0}")]
    Io(#[from] std::io::Error),
    #[error("writing csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("writing json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MachineFamily {
    /// Accept every word of exactly the expected length.
    ScanAccept,
    /// Accept words whose digit sum is even.
    DigitSumParity,
    /// Nondeterministically guess a position holding the largest digit
    /// `b - 1`, then verify it.
    GuessedDigit,
}

impl MachineFamily {
    pub const ALL: [MachineFamily; 3] = [
        MachineFamily::ScanAccept,
        MachineFamily::DigitSumParity,
        MachineFamily::GuessedDigit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MachineFamily::ScanAccept => "scan-accept",
            MachineFamily::DigitSumParity => "digit-sum-parity",
            MachineFamily::GuessedDigit => "guessed-digit",
        }
    }

    /// The language both machines recognize, on base-`b` digits.
    pub fn accepts(self, digits: &[u64], b: u64, l: usize) -> bool {
        match self {
            MachineFamily::ScanAccept => digits.len() == l,
            MachineFamily::DigitSumParity => digits.iter().sum::<u64>() % 2 == 0,
            MachineFamily::GuessedDigit => digits.contains(&(b - 1)),
        }
    }
}

impl fmt::Display for MachineFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MachineFamily {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        MachineFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| HarnessError::UnknownFamily(s.to_string()))
    }
}

/// How the base is chosen for word length `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseRule {
    Fixed(u64),
    /// `b = 2^(l^2)`.
    Theorem,
}

impl BaseRule {
    pub fn base_for(self, l: u32) -> Result<u64, HarnessError> {
        match self {
            BaseRule::Fixed(b) => Ok(b),
            BaseRule::Theorem => radix::cube_law_base(l).ok_or(HarnessError::BaseOverflow { l }),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub lengths: Vec<u32>,
    pub base_rule: BaseRule,
    pub words_per_length: usize,
    pub seed: u64,
    pub machine_family: String,
    pub step_cap: u64,
}

impl ExperimentSpec {
    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.lengths.is_empty() {
            return Err(HarnessError::InvalidSpec("lengths must not be empty".into()));
        }
        if self.lengths.contains(&0) {
            return Err(HarnessError::InvalidSpec("every length must be >= 1".into()));
        }
        if self.words_per_length == 0 {
            return Err(HarnessError::InvalidSpec("words_per_length must be >= 1".into()));
        }
        if self.step_cap == 0 {
            return Err(HarnessError::InvalidSpec("step_cap must be >= 1".into()));
        }
        if let BaseRule::Fixed(b) = self.base_rule {
            if b < 2 {
                return Err(HarnessError::InvalidSpec(format!("fixed base {b} is below 2")));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct MachinePair {
    pub wide: TuringMachine,
    pub binary: TuringMachine,
    /// Number of binary digits per wide digit.
    pub bits_per_digit: u32,
}

fn digit_names(b: u64) -> Vec<String> {
    (0..b).map(|d| d.to_string()).collect()
}

fn rule(from: &str, scanned: &str, to: &str, write: &str, mv: Move) -> TransitionRule {
    TransitionRule {
        from: from.to_string(),
        scanned: vec![scanned.to_string()],
        to: to.to_string(),
        write: vec![write.to_string()],
        moves: vec![mv],
    }
}

fn one_tape(
    mut states: Vec<String>,
    symbols: u64,
    initial: &str,
    transitions: Vec<TransitionRule>,
) -> MachineDef {
    states.push("acc".into());
    states.push("rej".into());
    let input = digit_names(symbols);
    let mut gamma = input.clone();
    gamma.push(MARKER.into());
    gamma.push(BLANK.into());
    MachineDef {
        states,
        tapes: 1,
        blank: BLANK.into(),
        input_alphabet: input,
        tape_alphabet: gamma,
        initial: initial.into(),
        accept: "acc".into(),
        reject: "rej".into(),
        transitions,
    }
}

/// Accepts exactly the words of length `len` over `{0..symbols}`.
fn scan_accept(len: u64, symbols: u64) -> MachineDef {
    let state = |i: u64| format!("s{i}");
    let mut t = Vec::new();
    for i in 0..=len {
        for d in digit_names(symbols) {
            if i < len {
                t.push(rule(&state(i), &d, &state(i + 1), &d, Move::R));
            } else {
                t.push(rule(&state(i), &d, "rej", &d, Move::R));
            }
        }
        let end = if i == len { "acc" } else { "rej" };
        t.push(rule(&state(i), BLANK, end, MARKER, Move::R));
    }
    one_tape((0..=len).map(state).collect(), symbols, &state(0), t)
}

/// Even digit sum over base `b` (`b` even), read digit by digit.
fn parity_wide(b: u64) -> MachineDef {
    let mut t = Vec::new();
    for (q, flip) in [("even", "odd"), ("odd", "even")] {
        for d in 0..b {
            let name = d.to_string();
            let next = if d % 2 == 1 { flip } else { q };
            t.push(rule(q, &name, next, &name, Move::R));
        }
    }
    t.push(rule("even", BLANK, "acc", MARKER, Move::R));
    t.push(rule("odd", BLANK, "rej", MARKER, Move::R));
    one_tape(vec!["even".into(), "odd".into()], b, "even", t)
}

/// Even digit sum, read from the binary encoding with `bits` bits per digit:
/// only the lowest bit of each group contributes to the parity.
fn parity_binary(bits: u32) -> MachineDef {
    let state = |r: u32, p: u32| format!("p{r}_{p}");
    let mut t = Vec::new();
    let mut states = Vec::new();
    for r in 0..bits {
        for p in 0..2 {
            states.push(state(r, p));
            let r2 = (r + 1) % bits;
            for x in 0..2u32 {
                let p2 = if r == 0 { p ^ x } else { p };
                t.push(rule(&state(r, p), &x.to_string(), &state(r2, p2), &x.to_string(), Move::R));
            }
            let end = if p == 0 { "acc" } else { "rej" };
            t.push(rule(&state(r, p), BLANK, end, MARKER, Move::R));
        }
    }
    one_tape(states, 2, &state(0, 0), t)
}

/// Guesses that the square just read held `b - 1`, steps back to check it.
/// Stepping back from square 1 kills the branch.
fn guessed_wide(b: u64) -> MachineDef {
    let top = (b - 1).to_string();
    let mut t = Vec::new();
    for d in digit_names(b) {
        t.push(rule("scan", &d, "scan", &d, Move::R));
        t.push(rule("scan", &d, "back", &d, Move::L));
        let verdict = if d == top { "acc" } else { "rej" };
        t.push(rule("back", &d, verdict, &d, Move::R));
    }
    t.push(rule("scan", BLANK, "back", MARKER, Move::L));
    t.push(rule("scan", BLANK, "rej", MARKER, Move::R));
    one_tape(vec!["scan".into(), "back".into()], b, "scan", t)
}

/// Guesses the start of a group of `bits` ones on a group boundary and
/// verifies it while moving right.
fn guessed_binary(bits: u32) -> MachineDef {
    let c = |r: u32| format!("c{r}");
    let v = |r: u32| format!("v{r}");
    let after_one = |r: u32| if r == bits { "acc".to_string() } else { v(r) };
    let mut t = Vec::new();
    let mut states: Vec<String> = (0..bits).map(c).collect();
    states.extend((1..bits).map(v));
    for r in 0..bits {
        for x in ["0", "1"] {
            t.push(rule(&c(r), x, &c((r + 1) % bits), x, Move::R));
        }
        t.push(rule(&c(r), BLANK, "rej", MARKER, Move::R));
    }
    t.push(rule(&c(0), "1", &after_one(1), "1", Move::R));
    for r in 1..bits {
        t.push(rule(&v(r), "1", &after_one(r + 1), "1", Move::R));
        t.push(rule(&v(r), "0", "rej", "0", Move::R));
        t.push(rule(&v(r), BLANK, "rej", MARKER, Move::R));
    }
    one_tape(states, 2, &c(0), t)
}

/// Builds the wide/binary machine pair for length-`l` words over base `b`.
/// `b` must be a power of two no larger than `symbol_cap`.
pub fn build_machine_pair(
    family: &str,
    l: u32,
    b: u64,
    symbol_cap: u64,
) -> Result<MachinePair, HarnessError> {
    let family: MachineFamily = family.parse()?;
    if b > symbol_cap {
        return Err(HarnessError::AlphabetTooLarge { b, cap: symbol_cap });
    }
    let n2 = radix::rebased_length(l as u64, b)?;
    let bits = b.trailing_zeros();
    let (wide, binary) = match family {
        MachineFamily::ScanAccept => (scan_accept(l as u64, b), scan_accept(n2, 2)),
        MachineFamily::DigitSumParity => (parity_wide(b), parity_binary(bits)),
        MachineFamily::GuessedDigit => (guessed_wide(b), guessed_binary(bits)),
    };
    Ok(MachinePair {
        wide: TuringMachine::new(wide)?,
        binary: TuringMachine::new(binary)?,
        bits_per_digit: bits,
    })
}

/// Binary encoding used by the binary machines: `rebase(w, 2)` padded to
/// `log2(b) * len(w)` digits.
pub fn binary_encoding(w: &RadixWord) -> Result<RadixWord, HarnessError> {
    let n2 = radix::rebased_length(w.len() as u64, w.base())?;
    let bin = radix::rebase(w, 2)?;
    let mut digits = bin.digits().to_vec();
    digits.resize(n2 as usize, 0);
    Ok(RadixWord::new(2, digits)?)
}

fn digits_as_symbols(w: &RadixWord) -> Vec<String> {
    w.digits().iter().map(u64::to_string).collect()
}

/// Runs both machines of a pair on `w` (wide) and its binary encoding.
pub fn run_pair(pair: &MachinePair, w: &RadixWord, step_cap: u64) -> Result<PairRun, HarnessError> {
    let wide_in = pair.wide.word(&digits_as_symbols(w))?;
    let bin_in = pair.binary.word(&digits_as_symbols(&binary_encoding(w)?))?;
    let wide = pair.wide.accepts_within(&wide_in, step_cap)?;
    let binary = pair.binary.accepts_within(&bin_in, step_cap)?;
    Ok(PairRun {
        wide_verdict: wide.verdict,
        wide_steps: wide.steps_used,
        binary_verdict: binary.verdict,
        binary_steps: binary.steps_used,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairRun {
    pub wide_verdict: Verdict,
    pub wide_steps: u64,
    pub binary_verdict: Verdict,
    pub binary_steps: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepRow {
    pub l: u32,
    pub b: u64,
    /// `b:<base>|<d0>,..` (least significant digit first).
    pub word: String,
    pub steps_wide: u64,
    pub steps_binary: u64,
    pub agree: bool,
    /// Both machines accepted.
    pub accepted: bool,
    /// Either run hit the step cap; `agree` is then not meaningful.
    pub capped: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepSummary {
    pub family: String,
    /// `k` in `steps_binary ≈ c * steps_wide^k`, least squares on logs over
    /// accepted, uncapped rows. Absent with fewer than two distinct
    /// `steps_wide` values.
    pub fitted_exponent: Option<f64>,
    pub max_ratio: Option<f64>,
    #[serde(rename = "theorem_T3_consistent")]
    pub theorem_t3_consistent: Option<bool>,
    #[serde(rename = "proof_T6_consistent")]
    pub proof_t6_consistent: Option<bool>,
    pub rows_fitted: usize,
    pub capped_rows: usize,
    pub disagreements: usize,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StepReport {
    pub rows: Vec<StepRow>,
    pub summary: StepSummary,
}

/// All words of length `l` if there are at most `count`, otherwise `count`
/// uniform samples.
fn sample_words(rng: &mut ChaCha8Rng, l: u32, b: u64, count: usize) -> Vec<RadixWord> {
    let space = (b as u128).checked_pow(l);
    match space {
        Some(s) if s <= count as u128 => {
            let mut out = Vec::with_capacity(s as usize);
            let mut digits = vec![0u64; l as usize];
            loop {
                out.push(RadixWord::new(b, digits.clone()).expect("digits < b"));
                let mut pos = digits.len();
                loop {
                    if pos == 0 {
                        return out;
                    }
                    pos -= 1;
                    digits[pos] += 1;
                    if digits[pos] < b {
                        break;
                    }
                    digits[pos] = 0;
                }
            }
        }
        _ => (0..count)
            .map(|_| {
                let digits = (0..l).map(|_| rng.gen_range(0..b)).collect();
                RadixWord::new(b, digits).expect("digits < b")
            })
            .collect(),
    }
}

/// Least-squares slope of `ln y` against `ln x`.
fn fit_exponent(points: &[(u64, u64)]) -> Option<f64> {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0 && *y > 0)
        .map(|&(x, y)| ((x as f64).ln(), (y as f64).ln()))
        .collect();
    let n = pts.len() as f64;
    if n < 2.0 {
        return None;
    }
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 1e-12).then(|| sxy / sxx)
}

pub fn run_experiment(spec: &ExperimentSpec) -> Result<StepReport, HarnessError> {
    match run_experiment_partial(spec)? {
        (report, None) => Ok(report),
        (_, Some(e)) => Err(e),
    }
}

/// Like [`run_experiment`], but an error part-way through still returns the
/// rows gathered so far alongside the error. Spec and family errors are
/// returned up front.
pub fn run_experiment_partial(
    spec: &ExperimentSpec,
) -> Result<(StepReport, Option<HarnessError>), HarnessError> {
    spec.validate()?;
    let family: MachineFamily = spec.machine_family.parse()?;
    let mut rows = Vec::new();
    let failure = collect_rows(spec, family, &mut rows).err();
    let summary = summarize(family, &rows);
    Ok((StepReport { rows, summary }, failure))
}

fn collect_rows(
    spec: &ExperimentSpec,
    family: MachineFamily,
    rows: &mut Vec<StepRow>,
) -> Result<(), HarnessError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    for &l in &spec.lengths {
        let b = spec.base_rule.base_for(l)?;
        let pair = build_machine_pair(family.name(), l, b, DEFAULT_SYMBOL_CAP)?;
        for w in sample_words(&mut rng, l, b, spec.words_per_length) {
            let run = run_pair(&pair, &w, spec.step_cap)?;
            let wide_ok = run.wide_verdict == Verdict::Accepted;
            let bin_ok = run.binary_verdict == Verdict::Accepted;
            rows.push(StepRow {
                l,
                b,
                word: w.to_string(),
                steps_wide: run.wide_steps,
                steps_binary: run.binary_steps,
                agree: wide_ok == bin_ok,
                accepted: wide_ok && bin_ok,
                capped: run.wide_verdict == Verdict::BoundExceeded
                    || run.binary_verdict == Verdict::BoundExceeded,
            });
        }
    }
    Ok(())
}

fn summarize(family: MachineFamily, rows: &[StepRow]) -> StepSummary {
    let fitted: Vec<(u64, u64)> = rows
        .iter()
        .filter(|r| r.accepted && !r.capped)
        .map(|r| (r.steps_wide, r.steps_binary))
        .collect();
    let k = fit_exponent(&fitted);
    let max_ratio = fitted
        .iter()
        .filter(|(w, _)| *w > 0)
        .map(|&(w, b)| b as f64 / w as f64)
        .fold(None, |acc: Option<f64>, r| Some(acc.map_or(r, |a| a.max(r))));
    StepSummary {
        family: family.name().to_string(),
        fitted_exponent: k,
        max_ratio,
        theorem_t3_consistent: k.map(|k| k <= 3.0),
        proof_t6_consistent: k.map(|k| k <= 6.0),
        rows_fitted: fitted.len(),
        capped_rows: rows.iter().filter(|r| r.capped).count(),
        disagreements: rows.iter().filter(|r| !r.capped && !r.agree).count(),
        note: BOUND_DISCREPANCY_NOTE.to_string(),
    }
}

impl StepReport {
    /// One-line human summary.
    pub fn summary_line(&self) -> String {
        let s = &self.summary;
        let k = s
            .fitted_exponent
            .map_or_else(|| "n/a".to_string(), |k| format!("{k:.4}"));
        let yn = |b: Option<bool>| match b {
            Some(true) => "yes",
            Some(false) => "no",
            None => "n/a",
        };
        format!(
            "{}: {} rows, {} capped, {} disagreements, fitted exponent k = {} (k <= 3: {}, k <= 6: {}); note: {}",
            s.family,
            self.rows.len(),
            s.capped_rows,
            s.disagreements,
            k,
            yn(s.theorem_t3_consistent),
            yn(s.proof_t6_consistent),
            s.note
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// Writes the rows as CSV, or the whole report as JSON.
pub fn emit_report<W: Write>(
    r: &StepReport,
    format: ReportFormat,
    mut sink: W,
) -> Result<(), HarnessError> {
    match format {
        ReportFormat::Csv => {
            let mut w = csv::Writer::from_writer(sink);
            for row in &r.rows {
                w.serialize(row)?;
            }
            if r.rows.is_empty() {
                w.write_record([
                    "l",
                    "b",
                    "word",
                    "steps_wide",
                    "steps_binary",
                    "agree",
                    "accepted",
                    "capped",
                ])?;
            }
            w.flush()?;
        }
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut sink, r)?;
            sink.write_all(b"\n")?;
            sink.flush()?;
        }
    }
    Ok(())
}
