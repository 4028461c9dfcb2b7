//! Multi-tape nondeterministic Turing machines.
//!
//! A configuration (instantaneous description) is `<q; α^1..α^m; i_1..i_m>`
//! where each `α^j` is the visited, nonblank portion of tape `j` and the head
//! positions are 1-based with `1 <= i_j <= len(α^j) + 1`. A head sitting on
//! `len(α^j) + 1` scans the blank. Machines never print the blank, so a write
//! at that position extends the visited portion by exactly one square.
//!
//! A move to the left from square 1 kills that branch only. A missing
//! transition is a dead end.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Move {
    L,
    R,
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Move::L => "L",
            Move::R => "R",
        })
    }
}

/// One transition line, in terms of symbol and state names.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransitionRule {
    pub from: String,
    pub scanned: Vec<String>,
    pub to: String,
    pub write: Vec<String>,
    pub moves: Vec<Move>,
}

/// A machine as written by a user: names everywhere, not yet checked.
///
/// Several rules with the same `(from, scanned)` key form a nondeterministic
/// target set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineDef {
    pub states: Vec<String>,
    pub tapes: usize,
    pub blank: String,
    pub input_alphabet: Vec<String>,
    pub tape_alphabet: Vec<String>,
    pub initial: String,
    pub accept: String,
    pub reject: String,
    pub transitions: Vec<TransitionRule>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub severity: Severity,
    pub message: String,
}

impl Violation {
    fn error(message: impl Into<String>) -> Self {
        Violation {
            severity: Severity::Error,
            message: message.into(),
        }
    }

    fn warning(message: impl Into<String>) -> Self {
        Violation {
            severity: Severity::Warning,
            message: message.into(),
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}: {}", self.message)
    }
}

/// Above this many `(state, scanned)` pairs the totality check is summarized
/// instead of listing each missing pair.
const TOTALITY_LISTING_LIMIT: u64 = 100_000;

/// Checks every clause of the machine definition.
///
/// Errors make the machine unusable. Missing `(state, scanned)` entries are
/// reported as warnings; the engine treats them as dead ends.
pub fn validate(def: &MachineDef) -> Vec<Violation> {
    let mut out = Vec::new();
    let states: HashSet<&str> = def.states.iter().map(String::as_str).collect();
    let gamma: HashSet<&str> = def.tape_alphabet.iter().map(String::as_str).collect();

    if def.tapes == 0 {
        out.push(Violation::error("machine needs at least one tape"));
    }
    if states.len() != def.states.len() {
        out.push(Violation::error("duplicate state names"));
    }
    if gamma.len() != def.tape_alphabet.len() {
        out.push(Violation::error("duplicate tape symbols"));
    }
    for (role, q) in [
        ("initial", &def.initial),
        ("accept", &def.accept),
        ("reject", &def.reject),
    ] {
        if !states.contains(q.as_str()) {
            out.push(Violation::error(format!("{role} state `{q}` is not a state")));
        }
    }
    if def.accept == def.reject {
        out.push(Violation::error(format!(
            "accept and reject state coincide (`{}`)",
            def.accept
        )));
    }
    if !gamma.contains(def.blank.as_str()) {
        out.push(Violation::error(format!(
            "blank `{}` is not in the tape alphabet",
            def.blank
        )));
    }
    for s in &def.input_alphabet {
        if *s == def.blank {
            out.push(Violation::error("input alphabet contains the blank"));
        } else if !gamma.contains(s.as_str()) {
            out.push(Violation::error(format!(
                "input symbol `{s}` is not in the tape alphabet"
            )));
        }
    }

    let halting = [def.accept.as_str(), def.reject.as_str()];
    let mut keys: HashSet<(&str, &[String])> = HashSet::new();
    for (n, t) in def.transitions.iter().enumerate() {
        let at = format!("transition {} ({} -> {})", n + 1, t.from, t.to);
        if halting.contains(&t.from.as_str()) {
            out.push(Violation::error(format!(
                "{at}: keyed on halting state `{}`",
                t.from
            )));
        }
        for q in [&t.from, &t.to] {
            if !states.contains(q.as_str()) {
                out.push(Violation::error(format!("{at}: unknown state `{q}`")));
            }
        }
        if t.scanned.len() != def.tapes || t.write.len() != def.tapes || t.moves.len() != def.tapes
        {
            out.push(Violation::error(format!(
                "{at}: expected {} scanned/write/move entries",
                def.tapes
            )));
        }
        for s in t.scanned.iter().chain(&t.write) {
            if !gamma.contains(s.as_str()) {
                out.push(Violation::error(format!("{at}: unknown symbol `{s}`")));
            }
        }
        if t.write.iter().any(|s| *s == def.blank) {
            out.push(Violation::error(format!("{at}: writes blank")));
        }
        keys.insert((t.from.as_str(), t.scanned.as_slice()));
    }

    // Totality: the transition relation should be defined on every
    // non-halting state and every scanned tuple.
    let active: Vec<&str> = def
        .states
        .iter()
        .map(String::as_str)
        .filter(|q| !halting.contains(q))
        .collect();
    let tuples = (def.tape_alphabet.len() as u64).checked_pow(def.tapes as u32);
    let pairs = tuples.and_then(|t| t.checked_mul(active.len() as u64));
    match pairs {
        Some(p) if p <= TOTALITY_LISTING_LIMIT && def.tapes > 0 && !def.tape_alphabet.is_empty() => {
            for q in &active {
                let mut tuple = vec![0usize; def.tapes];
                loop {
                    let scanned: Vec<String> =
                        tuple.iter().map(|&i| def.tape_alphabet[i].clone()).collect();
                    if !keys.contains(&(*q, scanned.as_slice())) {
                        out.push(Violation::warning(format!(
                            "no transition for ({q}; {}), treated as a dead end",
                            scanned.join(" ")
                        )));
                    }
                    let mut pos = tuple.len();
                    let mut done = true;
                    while pos > 0 {
                        pos -= 1;
                        tuple[pos] += 1;
                        if tuple[pos] < def.tape_alphabet.len() {
                            done = false;
                            break;
                        }
                        tuple[pos] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
        }
        _ => {
            let defined = keys.len() as u64;
            out.push(Violation::warning(format!(
                "transition table is partial or too large to check exhaustively ({defined} keys defined)"
            )));
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TmError {
    #[error("machine is invalid:\n{}", format_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("machine is not deterministic")]
    NotDeterministic,
    #[error("symbol `{0}` is not in the input alphabet")]
    SymbolNotInInput(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("head position {head} for tape {tape} is outside 1..={max}")]
    HeadOutOfRange { tape: usize, head: usize, max: usize },
    #[error("expected {expected} tapes, found {found}")]
    TapeCount { expected: usize, found: usize },
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymbolId(u32);

/// A transition target `<p; a_1..a_m; T_1..T_m>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub next: StateId,
    pub writes: Vec<SymbolId>,
    pub moves: Vec<Move>,
}

/// A validated machine with interned states and symbols.
#[derive(Debug, Clone)]
pub struct TuringMachine {
    def: MachineDef,
    state_ids: HashMap<String, StateId>,
    symbol_ids: HashMap<String, SymbolId>,
    input: Vec<bool>,
    blank: SymbolId,
    initial: StateId,
    accept: StateId,
    reject: StateId,
    // key = [state, scanned_1 .. scanned_m]
    delta: HashMap<Vec<u32>, Vec<Transition>>,
}

impl TuringMachine {
    /// Validates and compiles a definition. Warnings are accepted.
    pub fn new(def: MachineDef) -> Result<Self, TmError> {
        let errors: Vec<Violation> = validate(&def).into_iter().filter(Violation::is_error).collect();
        if !errors.is_empty() {
            return Err(TmError::Invalid(errors));
        }
        let state_ids: HashMap<String, StateId> = def
            .states
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), StateId(i as u32)))
            .collect();
        let symbol_ids: HashMap<String, SymbolId> = def
            .tape_alphabet
            .iter()
            .enumerate()
            .map(|(i, s)| (s.clone(), SymbolId(i as u32)))
            .collect();
        let mut input = vec![false; def.tape_alphabet.len()];
        for s in &def.input_alphabet {
            input[symbol_ids[s].0 as usize] = true;
        }
        let mut delta: HashMap<Vec<u32>, Vec<Transition>> = HashMap::new();
        for t in &def.transitions {
            let mut key = vec![state_ids[&t.from].0];
            key.extend(t.scanned.iter().map(|s| symbol_ids[s].0));
            let target = Transition {
                next: state_ids[&t.to],
                writes: t.write.iter().map(|s| symbol_ids[s]).collect(),
                moves: t.moves.clone(),
            };
            let set = delta.entry(key).or_default();
            if !set.contains(&target) {
                set.push(target);
            }
        }
        Ok(TuringMachine {
            blank: symbol_ids[&def.blank],
            initial: state_ids[&def.initial],
            accept: state_ids[&def.accept],
            reject: state_ids[&def.reject],
            state_ids,
            symbol_ids,
            input,
            delta,
            def,
        })
    }

    pub fn def(&self) -> &MachineDef {
        &self.def
    }

    pub fn tapes(&self) -> usize {
        self.def.tapes
    }

    pub fn blank(&self) -> SymbolId {
        self.blank
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn accept(&self) -> StateId {
        self.accept
    }

    pub fn reject(&self) -> StateId {
        self.reject
    }

    pub fn state(&self, name: &str) -> Result<StateId, TmError> {
        self.state_ids
            .get(name)
            .copied()
            .ok_or_else(|| TmError::UnknownState(name.to_string()))
    }

    pub fn symbol(&self, name: &str) -> Result<SymbolId, TmError> {
        self.symbol_ids
            .get(name)
            .copied()
            .ok_or_else(|| TmError::UnknownSymbol(name.to_string()))
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.def.states[q.0 as usize]
    }

    pub fn symbol_name(&self, s: SymbolId) -> &str {
        &self.def.tape_alphabet[s.0 as usize]
    }

    /// Translates input symbol names, rejecting anything outside the input
    /// alphabet.
    pub fn word<S: AsRef<str>>(&self, symbols: &[S]) -> Result<Vec<SymbolId>, TmError> {
        symbols
            .iter()
            .map(|s| {
                let s = s.as_ref();
                match self.symbol_ids.get(s) {
                    Some(&id) if self.input[id.0 as usize] => Ok(id),
                    _ => Err(TmError::SymbolNotInInput(s.to_string())),
                }
            })
            .collect()
    }

    /// Splits a word given as text: whitespace or comma separated symbols if
    /// any separator is present, otherwise one symbol per character.
    pub fn parse_word(&self, text: &str) -> Result<Vec<SymbolId>, TmError> {
        let parts: Vec<String> = if text.contains(|c: char| c.is_whitespace() || c == ',') {
            text.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(str::to_string)
                .collect()
        } else {
            text.chars().map(String::from).collect()
        };
        self.word(&parts)
    }

    pub fn transitions(&self, q: StateId, scanned: &[SymbolId]) -> &[Transition] {
        let mut key = Vec::with_capacity(scanned.len() + 1);
        key.push(q.0);
        key.extend(scanned.iter().map(|s| s.0));
        self.delta.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    /// True iff every defined target set is a singleton. An empty table is
    /// deterministic.
    pub fn is_deterministic(&self) -> bool {
        self.delta.values().all(|set| set.len() == 1)
    }

    pub fn is_halting(&self, q: StateId) -> bool {
        q == self.accept || q == self.reject
    }

    /// `<q_0; w, Λ, .., Λ; 1, .., 1>`.
    pub fn initial_id(&self, w: &[SymbolId]) -> Result<InstantaneousDescription, TmError> {
        self.initial_id_with_heads(w, None)
    }

    /// Like [`initial_id`](Self::initial_id) but with explicit starting head
    /// positions. Each must still satisfy `1 <= i_j <= len(α^j) + 1`.
    pub fn initial_id_with_heads(
        &self,
        w: &[SymbolId],
        heads: Option<Vec<usize>>,
    ) -> Result<InstantaneousDescription, TmError> {
        for s in w {
            if !self.input.get(s.0 as usize).copied().unwrap_or(false) {
                return Err(TmError::SymbolNotInInput(
                    self.def
                        .tape_alphabet
                        .get(s.0 as usize)
                        .cloned()
                        .unwrap_or_else(|| format!("#{}", s.0)),
                ));
            }
        }
        let m = self.tapes();
        let mut tapes = vec![Vec::new(); m];
        tapes[0] = w.to_vec();
        let heads = heads.unwrap_or_else(|| vec![1; m]);
        if heads.len() != m {
            return Err(TmError::TapeCount {
                expected: m,
                found: heads.len(),
            });
        }
        for (j, (&h, tape)) in heads.iter().zip(&tapes).enumerate() {
            if h < 1 || h > tape.len() + 1 {
                return Err(TmError::HeadOutOfRange {
                    tape: j + 1,
                    head: h,
                    max: tape.len() + 1,
                });
            }
        }
        Ok(InstantaneousDescription {
            state: self.initial,
            tapes,
            heads,
        })
    }

    /// Symbols under the heads; the square just past the visited portion
    /// reads as blank.
    pub fn scanned_symbols(&self, id: &InstantaneousDescription) -> Vec<SymbolId> {
        id.tapes
            .iter()
            .zip(&id.heads)
            .map(|(tape, &h)| tape.get(h - 1).copied().unwrap_or(self.blank))
            .collect()
    }

    /// All `I'` with `I ->_M I'`, deduplicated, in transition order.
    pub fn successors(&self, id: &InstantaneousDescription) -> Vec<InstantaneousDescription> {
        if self.is_halting(id.state) {
            return Vec::new();
        }
        let scanned = self.scanned_symbols(id);
        let mut out: Vec<InstantaneousDescription> = Vec::new();
        'targets: for t in self.transitions(id.state, &scanned) {
            let mut next = InstantaneousDescription {
                state: t.next,
                tapes: id.tapes.clone(),
                heads: id.heads.clone(),
            };
            for j in 0..self.tapes() {
                let h = id.heads[j];
                if t.moves[j] == Move::L && h == 1 {
                    continue 'targets;
                }
                let tape = &mut next.tapes[j];
                if h == tape.len() + 1 {
                    tape.push(t.writes[j]);
                } else {
                    tape[h - 1] = t.writes[j];
                }
                next.heads[j] = match t.moves[j] {
                    Move::R => h + 1,
                    Move::L => h - 1,
                };
            }
            if !out.contains(&next) {
                out.push(next);
            }
        }
        out
    }

    /// Runs a deterministic machine for at most `max_steps` steps.
    pub fn run_deterministic(
        &self,
        w: &[SymbolId],
        max_steps: u64,
        record_trace: bool,
    ) -> Result<RunOutcome, TmError> {
        if !self.is_deterministic() {
            return Err(TmError::NotDeterministic);
        }
        let mut id = self.initial_id(w)?;
        let mut steps = 0u64;
        let mut max_head = id.max_head();
        let mut trace = record_trace.then(|| vec![id.clone()]);
        let verdict = loop {
            if id.state == self.accept {
                break Verdict::Accepted;
            }
            if id.state == self.reject {
                break Verdict::Rejected;
            }
            if steps >= max_steps {
                break Verdict::BoundExceeded;
            }
            let mut next = self.successors(&id);
            let Some(n) = next.pop() else {
                break Verdict::DeadEnd;
            };
            id = n;
            steps += 1;
            max_head = max_head.max(id.max_head());
            if let Some(tr) = trace.as_mut() {
                tr.push(id.clone());
            }
        };
        Ok(RunOutcome {
            verdict,
            steps_used: steps,
            max_head_position: max_head,
            trace,
        })
    }

    /// Does some computation path of at most `t` steps reach the accepting
    /// state? Breadth-first, so a returned witness has minimal length.
    pub fn accepts_within(&self, w: &[SymbolId], t: u64) -> Result<RunOutcome, TmError> {
        self.bounded_search(self.initial_id(w)?, t, None)
    }

    /// As [`accepts_within`](Self::accepts_within), but every configuration on
    /// the path must keep all heads at or below square `s`.
    pub fn accepts_within_space(
        &self,
        w: &[SymbolId],
        t: u64,
        s: usize,
    ) -> Result<RunOutcome, TmError> {
        self.bounded_search(self.initial_id(w)?, t, Some(s))
    }

    /// Bounded breadth-first search from an arbitrary start configuration.
    pub fn bounded_search(
        &self,
        start: InstantaneousDescription,
        t: u64,
        space: Option<usize>,
    ) -> Result<RunOutcome, TmError> {
        let fits = |id: &InstantaneousDescription| space.map_or(true, |s| id.max_head() <= s);
        if !fits(&start) {
            return Ok(RunOutcome {
                verdict: Verdict::DeadEnd,
                steps_used: 0,
                max_head_position: start.max_head(),
                trace: None,
            });
        }
        // arena of (configuration, parent index)
        let mut arena: Vec<(InstantaneousDescription, Option<usize>)> = vec![(start.clone(), None)];
        let mut seen: HashSet<InstantaneousDescription> = HashSet::from([start]);
        let mut frontier: Vec<usize> = vec![0];
        let mut max_head = arena[0].0.max_head();
        let mut depth = 0u64;
        loop {
            if let Some(&hit) = frontier.iter().find(|&&i| arena[i].0.state == self.accept) {
                let mut path = Vec::new();
                let mut cur = Some(hit);
                while let Some(i) = cur {
                    path.push(arena[i].0.clone());
                    cur = arena[i].1;
                }
                path.reverse();
                let max_on_path = path.iter().map(InstantaneousDescription::max_head).max().unwrap_or(1);
                return Ok(RunOutcome {
                    verdict: Verdict::Accepted,
                    steps_used: depth,
                    max_head_position: max_on_path,
                    trace: Some(path),
                });
            }
            if frontier.is_empty() {
                return Ok(RunOutcome {
                    verdict: Verdict::DeadEnd,
                    steps_used: depth.saturating_sub(1),
                    max_head_position: max_head,
                    trace: None,
                });
            }
            if depth >= t {
                return Ok(RunOutcome {
                    verdict: Verdict::BoundExceeded,
                    steps_used: depth,
                    max_head_position: max_head,
                    trace: None,
                });
            }
            let mut next_frontier = Vec::new();
            for &i in &frontier {
                for succ in self.successors(&arena[i].0) {
                    if !fits(&succ) || seen.contains(&succ) {
                        continue;
                    }
                    seen.insert(succ.clone());
                    max_head = max_head.max(succ.max_head());
                    arena.push((succ, Some(i)));
                    next_frontier.push(arena.len() - 1);
                }
            }
            frontier = next_frontier;
            depth += 1;
        }
    }

    /// Checks "accepts every accepted word of length l within T(l) steps" on
    /// a sample of words.
    ///
    /// A word not accepted within its bound is only a violation if it is in
    /// the language; membership is probed with `membership_cap` steps.
    pub fn check_time_bound<F>(
        &self,
        words: &[Vec<SymbolId>],
        bound: F,
        membership_cap: u64,
    ) -> Result<TimeBoundReport, TmError>
    where
        F: Fn(usize) -> u64,
    {
        let mut rows = Vec::with_capacity(words.len());
        for w in words {
            let l = w.len();
            let limit = bound(l);
            let within = self.accepts_within(w, limit)?;
            let accepted_within = within.verdict == Verdict::Accepted;
            let member = if accepted_within {
                Membership::Member
            } else {
                match self.accepts_within(w, membership_cap.max(limit))?.verdict {
                    Verdict::Accepted => Membership::Member,
                    Verdict::BoundExceeded => Membership::Unknown,
                    _ => Membership::NonMember,
                }
            };
            rows.push(TimeBoundRow {
                word: w.iter().map(|&s| self.symbol_name(s).to_string()).collect(),
                length: l,
                bound: limit,
                accepted_within,
                membership: member,
                holds: accepted_within || member == Membership::NonMember,
            });
        }
        let holds = rows.iter().all(|r| r.holds);
        Ok(TimeBoundReport { rows, holds })
    }

    /// `<q; α^1, ..; i_1, ..>` with `Λ` for an empty tape.
    pub fn format_id(&self, id: &InstantaneousDescription) -> String {
        let single = self.def.tape_alphabet.iter().all(|s| s.chars().count() == 1);
        let tapes: Vec<String> = id
            .tapes
            .iter()
            .map(|t| {
                if t.is_empty() {
                    "Λ".to_string()
                } else {
                    let syms: Vec<&str> = t.iter().map(|&s| self.symbol_name(s)).collect();
                    syms.join(if single { "" } else { " " })
                }
            })
            .collect();
        let heads: Vec<String> = id.heads.iter().map(usize::to_string).collect();
        format!(
            "<{}; {}; {}>",
            self.state_name(id.state),
            tapes.join(", "),
            heads.join(", ")
        )
    }

    pub fn id_doc(&self, id: &InstantaneousDescription) -> IdDoc {
        IdDoc {
            state: self.state_name(id.state).to_string(),
            tapes: id
                .tapes
                .iter()
                .map(|t| t.iter().map(|&s| self.symbol_name(s).to_string()).collect())
                .collect(),
            heads: id.heads.clone(),
        }
    }

    /// Rebuilds a configuration from its structured form, checking the
    /// configuration invariants.
    pub fn id_from_doc(&self, doc: &IdDoc) -> Result<InstantaneousDescription, TmError> {
        let state = self.state(&doc.state)?;
        if doc.tapes.len() != self.tapes() || doc.heads.len() != self.tapes() {
            return Err(TmError::TapeCount {
                expected: self.tapes(),
                found: doc.tapes.len(),
            });
        }
        let mut tapes = Vec::with_capacity(doc.tapes.len());
        for t in &doc.tapes {
            let mut tape = Vec::with_capacity(t.len());
            for s in t {
                let id = self.symbol(s)?;
                if id == self.blank {
                    return Err(TmError::UnknownSymbol(s.clone()));
                }
                tape.push(id);
            }
            tapes.push(tape);
        }
        for (j, (&h, t)) in doc.heads.iter().zip(&tapes).enumerate() {
            if h < 1 || h > t.len() + 1 {
                return Err(TmError::HeadOutOfRange {
                    tape: j + 1,
                    head: h,
                    max: t.len() + 1,
                });
            }
        }
        Ok(InstantaneousDescription {
            state,
            tapes,
            heads: doc.heads.clone(),
        })
    }

    pub fn outcome_doc(&self, o: &RunOutcome) -> OutcomeDoc {
        OutcomeDoc {
            verdict: o.verdict,
            steps_used: o.steps_used,
            max_head_position: o.max_head_position,
            trace: o
                .trace
                .as_ref()
                .map(|tr| tr.iter().map(|id| self.id_doc(id)).collect()),
        }
    }

    pub fn outcome_from_doc(&self, doc: &OutcomeDoc) -> Result<RunOutcome, TmError> {
        let trace = match &doc.trace {
            Some(tr) => Some(tr.iter().map(|d| self.id_from_doc(d)).collect::<Result<_, _>>()?),
            None => None,
        };
        Ok(RunOutcome {
            verdict: doc.verdict,
            steps_used: doc.steps_used,
            max_head_position: doc.max_head_position,
            trace,
        })
    }
}

/// `<q; α^1..α^m; i_1..i_m>`, heads 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InstantaneousDescription {
    state: StateId,
    tapes: Vec<Vec<SymbolId>>,
    heads: Vec<usize>,
}

impl InstantaneousDescription {
    pub fn state(&self) -> StateId {
        self.state
    }

    pub fn tapes(&self) -> &[Vec<SymbolId>] {
        &self.tapes
    }

    pub fn heads(&self) -> &[usize] {
        &self.heads
    }

    pub fn max_head(&self) -> usize {
        self.heads.iter().copied().max().unwrap_or(1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Accepted,
    Rejected,
    /// No applicable transition, or every branch died or halted without
    /// accepting.
    DeadEnd,
    BoundExceeded,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Accepted => "accepted",
            Verdict::Rejected => "rejected",
            Verdict::DeadEnd => "dead-end",
            Verdict::BoundExceeded => "bound-exceeded",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub verdict: Verdict,
    /// Number of step applications on the run (or witness path).
    pub steps_used: u64,
    pub max_head_position: usize,
    /// The full run for deterministic runs when requested; the witness path
    /// for an accepting search.
    pub trace: Option<Vec<InstantaneousDescription>>,
}

impl RunOutcome {
    pub fn accepted(&self) -> bool {
        self.verdict == Verdict::Accepted
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdDoc {
    pub state: String,
    pub tapes: Vec<Vec<String>>,
    pub heads: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeDoc {
    pub verdict: Verdict,
    pub steps_used: u64,
    pub max_head_position: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<IdDoc>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Membership {
    Member,
    NonMember,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeBoundRow {
    pub word: Vec<String>,
    pub length: usize,
    pub bound: u64,
    pub accepted_within: bool,
    pub membership: Membership,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TimeBoundReport {
    pub rows: Vec<TimeBoundRow>,
    pub holds: bool,
}
