//! Line-oriented machine description files.
//!
//! ```text
//! # even number of a's
//! states q0 q1 qA qR
//! tapes 1
//! blank _
//! input a
//! tape_alphabet a x _
//! initial q0
//! accept qA
//! reject qR
//! trans q0 [a] -> q1 [a] [R]
//! ```
//!
//! Each `trans` line adds one target to the set for its `(state, scanned)`
//! key, so repeating a key makes the machine nondeterministic. `_` always
//! stands for the blank. Lines starting with `#` are comments.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::tm::{MachineDef, Move, TransitionRule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

const DIRECTIVES: [&str; 8] = [
    "states",
    "tapes",
    "blank",
    "input",
    "tape_alphabet",
    "initial",
    "accept",
    "reject",
];

/// Parses a machine file. Only syntax is checked here; use
/// [`crate::tm::validate`] for the machine-level rules.
pub fn parse(text: &str) -> Result<MachineDef, ParseError> {
    let mut seen: HashSet<&str> = HashSet::new();
    let mut states = Vec::new();
    let mut tapes = 0usize;
    let mut blank = String::new();
    let mut input = Vec::new();
    let mut gamma = Vec::new();
    let (mut initial, mut accept, mut reject) = (String::new(), String::new(), String::new());
    // (line, raw tokens) until the blank is known
    let mut trans_lines: Vec<(usize, Vec<String>)> = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut words = line.split_whitespace();
        let head = words.next().expect("non-empty line");
        let rest: Vec<String> = words.map(str::to_string).collect();
        if head == "trans" {
            let spaced = line["trans".len()..].replace('[', " [ ").replace(']', " ] ");
            trans_lines.push((line_no, spaced.split_whitespace().map(str::to_string).collect()));
            continue;
        }
        let Some(&directive) = DIRECTIVES.iter().find(|d| **d == head) else {
            return Err(err(line_no, format!("unknown directive `{head}`")));
        };
        if !seen.insert(directive) {
            return Err(err(line_no, format!("duplicate `{directive}` directive")));
        }
        let single = |what: &str| -> Result<String, ParseError> {
            match rest.as_slice() {
                [one] => Ok(one.clone()),
                _ => Err(err(line_no, format!("`{what}` takes exactly one value"))),
            }
        };
        match directive {
            "states" => states = rest.clone(),
            "tapes" => {
                tapes = single("tapes")?
                    .parse()
                    .map_err(|_| err(line_no, "`tapes` needs a positive integer"))?
            }
            "blank" => blank = single("blank")?,
            "input" => input = rest.clone(),
            "tape_alphabet" => gamma = rest.clone(),
            "initial" => initial = single("initial")?,
            "accept" => accept = single("accept")?,
            "reject" => reject = single("reject")?,
            _ => unreachable!(),
        }
    }
    for d in DIRECTIVES {
        if !seen.contains(d) {
            return Err(err(0, format!("missing `{d}` directive")));
        }
    }
    if !gamma.contains(&blank) {
        gamma.push(blank.clone());
    }
    let mut transitions = Vec::with_capacity(trans_lines.len());
    for (line_no, toks) in trans_lines {
        transitions.push(parse_trans(line_no, &toks, &blank)?);
    }
    Ok(MachineDef {
        states,
        tapes,
        blank,
        input_alphabet: input,
        tape_alphabet: gamma,
        initial,
        accept,
        reject,
        transitions,
    })
}

fn bracketed<'a>(
    line: usize,
    toks: &'a [String],
    pos: &mut usize,
) -> Result<&'a [String], ParseError> {
    if toks.get(*pos).map(String::as_str) != Some("[") {
        return Err(err(line, "expected `[`"));
    }
    let start = *pos + 1;
    let len = toks[start..]
        .iter()
        .position(|t| t == "]")
        .ok_or_else(|| err(line, "unclosed `[`"))?;
    *pos = start + len + 1;
    Ok(&toks[start..start + len])
}

fn parse_trans(line: usize, toks: &[String], blank: &str) -> Result<TransitionRule, ParseError> {
    let usage = "expected `trans <q> [s1 .. sm] -> <p> [w1 .. wm] [M1 .. Mm]`";
    let mut pos = 0;
    let from = toks.get(pos).ok_or_else(|| err(line, usage))?.clone();
    pos += 1;
    let scanned = bracketed(line, toks, &mut pos).map_err(|e| err(line, format!("{}; {usage}", e.message)))?;
    if toks.get(pos).map(String::as_str) != Some("->") {
        return Err(err(line, usage));
    }
    pos += 1;
    let to = toks.get(pos).ok_or_else(|| err(line, usage))?.clone();
    pos += 1;
    let write = bracketed(line, toks, &mut pos).map_err(|e| err(line, format!("{}; {usage}", e.message)))?;
    let moves = bracketed(line, toks, &mut pos).map_err(|e| err(line, format!("{}; {usage}", e.message)))?;
    if pos != toks.len() {
        return Err(err(line, format!("trailing tokens; {usage}")));
    }
    let sym = |s: &String| if s == "_" { blank.to_string() } else { s.clone() };
    let moves = moves
        .iter()
        .map(|m| match m.as_str() {
            "L" => Ok(Move::L),
            "R" => Ok(Move::R),
            other => Err(err(line, format!("move must be L or R, found `{other}`"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(TransitionRule {
        from,
        scanned: scanned.iter().map(sym).collect(),
        to,
        write: write.iter().map(sym).collect(),
        moves,
    })
}

/// Renders a definition in the file grammar; `parse` reads it back.
pub fn render(def: &MachineDef) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "states {}", def.states.join(" "));
    let _ = writeln!(s, "tapes {}", def.tapes);
    let _ = writeln!(s, "blank {}", def.blank);
    let _ = writeln!(s, "input {}", def.input_alphabet.join(" "));
    let _ = writeln!(s, "tape_alphabet {}", def.tape_alphabet.join(" "));
    let _ = writeln!(s, "initial {}", def.initial);
    let _ = writeln!(s, "accept {}", def.accept);
    let _ = writeln!(s, "reject {}", def.reject);
    for t in &def.transitions {
        let moves: Vec<String> = t.moves.iter().map(Move::to_string).collect();
        let _ = writeln!(
            s,
            "trans {} [{}] -> {} [{}] [{}]",
            t.from,
            t.scanned.join(" "),
            t.to,
            t.write.join(" "),
            moves.join(" ")
        );
    }
    s
}
