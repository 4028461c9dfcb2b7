//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each
//! and exits non-zero if any fails.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zlogic::cli::{CheckDoc, TmDoc, ValueDoc};
use zlogic::fixtures;
use zlogic::harness::{self, BaseRule, ExperimentSpec, ReportFormat, StepReport};
use zlogic::mvl::{
    self, BinaryConnective, BinaryGenIndex, DistinctnessReport, Kind, TableDoc,
    TruthConvention, UnaryConnective, UnaryGenIndex,
};
use zlogic::radix::{self, RadixWord};
use zlogic::tm::{InstantaneousDescription, MachineDef, Move, SymbolId, TuringMachine, Verdict};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

// Tables as printed next to the n = 2 generator definitions: index -> output
// exponents (unary) or output rows (binary).
const PRINTED_UNARY: [([u32; 2], [u32; 2]); 4] = [
    ([0, 0], [0, 1]),
    ([0, 1], [0, 0]),
    ([1, 0], [1, 1]),
    ([1, 1], [1, 0]),
];

const PRINTED_BINARY: [([u32; 4], [[u32; 2]; 2]); 16] = [
    ([0, 0, 0, 0], [[0, 0], [0, 1]]),
    ([0, 0, 0, 1], [[0, 0], [0, 0]]),
    ([0, 0, 1, 0], [[0, 0], [1, 1]]),
    ([0, 0, 1, 1], [[0, 0], [1, 0]]),
    ([0, 1, 0, 0], [[0, 1], [0, 1]]),
    ([0, 1, 0, 1], [[0, 1], [0, 0]]),
    ([0, 1, 1, 0], [[0, 1], [1, 1]]),
    ([0, 1, 1, 1], [[0, 1], [1, 0]]),
    ([1, 0, 0, 0], [[1, 0], [0, 1]]),
    ([1, 0, 0, 1], [[1, 0], [0, 0]]),
    ([1, 0, 1, 0], [[1, 0], [1, 1]]),
    ([1, 0, 1, 1], [[1, 0], [1, 0]]),
    ([1, 1, 0, 0], [[1, 1], [0, 1]]),
    ([1, 1, 0, 1], [[1, 1], [0, 0]]),
    ([1, 1, 1, 0], [[1, 1], [1, 1]]),
    ([1, 1, 1, 1], [[1, 1], [1, 0]]),
];

fn unary_counts() -> Check {
    let start = Instant::now();
    let conv = TruthConvention::default();
    let tables: Vec<_> = mvl::enumerate_unary(2, false).map_err(|e| e.to_string())?.collect();
    ensure(tables.len() == 4, || format!("{} tables", tables.len()))?;
    let distinct: HashSet<Vec<u32>> = tables.iter().map(|(_, t)| t.exponents()).collect();
    ensure(distinct.len() == 4, || "tables not distinct".into())?;
    let mut names: Vec<UnaryConnective> = tables
        .iter()
        .map(|(_, t)| mvl::classify_unary(t, conv).unwrap())
        .collect();
    names.sort_by_key(|c| c.name());
    let mut expected = UnaryConnective::ALL.to_vec();
    expected.sort_by_key(|c| c.name());
    ensure(names == expected, || format!("classifications {names:?}"))?;
    for (key, cells) in PRINTED_UNARY {
        let idx = UnaryGenIndex::new(2, key.to_vec()).unwrap();
        let got = mvl::unary_from_index(&idx).exponents();
        ensure(got == cells, || format!("index {key:?}: got {got:?}, printed {cells:?}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("4 distinct unary tables, one per connective; printed tables reproduced".into())
}

fn binary_counts() -> Check {
    let start = Instant::now();
    let conv = TruthConvention::default();
    let tables: Vec<_> = mvl::enumerate_binary(2, false).map_err(|e| e.to_string())?.collect();
    ensure(tables.len() == 16, || format!("{} tables", tables.len()))?;
    let grids: BTreeSet<Vec<Vec<u32>>> = tables.iter().map(|(_, t)| t.exponent_rows()).collect();
    ensure(grids.len() == 16, || "tables not distinct".into())?;
    let mut all = BTreeSet::new();
    for bits in 0u32..16 {
        all.insert(vec![vec![bits & 1, (bits >> 1) & 1], vec![(bits >> 2) & 1, (bits >> 3) & 1]]);
    }
    ensure(grids == all, || "tables are not all 16 boolean functions".into())?;
    let named: HashSet<BinaryConnective> = tables
        .iter()
        .map(|(_, t)| mvl::classify_binary(t, conv).unwrap())
        .collect();
    ensure(named.len() == 16, || format!("{} connectives named", named.len()))?;
    for (key, cells) in PRINTED_BINARY {
        let idx = BinaryGenIndex::new(2, key.to_vec()).unwrap();
        let got = mvl::binary_from_index(&idx).exponent_rows();
        let want: Vec<Vec<u32>> = cells.iter().map(|r| r.to_vec()).collect();
        ensure(got == want, || format!("index {key:?}: got {got:?}, printed {want:?}"))?;
    }
    let report = mvl::label_disagreements(conv);
    ensure(!report.is_empty(), || "disagreement report is empty".into())?;
    for d in &report {
        println!(
            "    label disagreement: index {:?} computed {} published \"{}\"",
            d.index, d.computed, d.published
        );
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!(
        "16 distinct binary tables covering all boolean functions; {} label disagreement(s) reported",
        report.len()
    ))
}

fn distinctness() -> Check {
    let start = Instant::now();
    let cases = [
        (3, Kind::Unary, 27),
        (5, Kind::Unary, 3125),
        (3, Kind::Binary, 19683),
    ];
    for (n, kind, count) in cases {
        let r = mvl::distinctness_report(n, kind, false).map_err(|e| e.to_string())?;
        let want = DistinctnessReport {
            total: count,
            distinct: count,
        };
        ensure(r == want, || format!("n={n} {kind}: {r:?}"))?;
    }
    within(start, Duration::from_secs(10))?;
    Ok("(27, 27), (3125, 3125), (19683, 19683)".into())
}

fn encoding_laws() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for l in 1u32..=3 {
        let b = radix::cube_law_base(l).ok_or("no base")?;
        let modulus = BigUint::from(1u8) << (l * l * l);
        for _ in 0..100 {
            let digits: Vec<u64> = (0..l).map(|_| rng.gen_range(0..b)).collect();
            let w = RadixWord::new(b, digits).map_err(|e| e.to_string())?;
            let bin = radix::rebase(&w, 2).map_err(|e| e.to_string())?;
            ensure(bin.len() == (l * l * l) as usize, || format!("{w}: binary length {}", bin.len()))?;
            ensure(radix::word_value(&bin) == radix::word_value(&w), || format!("{w}: value changed"))?;
            let back = radix::rebase(&bin, b).map_err(|e| e.to_string())?;
            ensure(radix::word_value(&back) == radix::word_value(&w), || format!("{w}: round trip"))?;
            let same = radix::exponent_identity_check(&w, &bin, &modulus).map_err(|e| e.to_string())?;
            ensure(same, || format!("{w}: identity check failed"))?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok("300 seeded words: length l^3, exact values, identity mod 2^(l^3)".into())
}

fn words_up_to(alphabet: &[String], max_len: usize) -> Vec<Vec<String>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for s in alphabet {
                let mut v: Vec<String> = w.clone();
                v.push(s.clone());
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Independent simulator over the raw definition with sparse tapes.
/// Returns the fewest steps to acceptance within `t`, trying every choice
/// sequence.
fn oracle_accept(def: &MachineDef, word: &[String], t: u64) -> Option<u64> {
    let mut first = HashMap::new();
    for (i, s) in word.iter().enumerate() {
        first.insert(i + 1, s.clone());
    }
    let mut tapes = vec![HashMap::new(); def.tapes];
    tapes[0] = first;
    explore(def, &def.initial, &tapes, &vec![1; def.tapes], 0, t)
}

fn explore(
    def: &MachineDef,
    state: &str,
    tapes: &[HashMap<usize, String>],
    heads: &[usize],
    depth: u64,
    t: u64,
) -> Option<u64> {
    if state == def.accept {
        return Some(depth);
    }
    if state == def.reject || depth == t {
        return None;
    }
    let scanned: Vec<String> = tapes
        .iter()
        .zip(heads)
        .map(|(tape, h)| tape.get(h).cloned().unwrap_or_else(|| def.blank.clone()))
        .collect();
    let mut best: Option<u64> = None;
    for rule in def.transitions.iter().filter(|r| r.from == state && r.scanned == scanned) {
        let mut tapes = tapes.to_vec();
        let mut heads = heads.to_vec();
        let mut alive = true;
        for i in 0..def.tapes {
            tapes[i].insert(heads[i], rule.write[i].clone());
            match rule.moves[i] {
                Move::R => heads[i] += 1,
                Move::L if heads[i] == 1 => alive = false,
                Move::L => heads[i] -= 1,
            }
        }
        if !alive {
            continue;
        }
        if let Some(d) = explore(def, &rule.to, &tapes, &heads, depth + 1, t) {
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}

fn step_invariants(m: &TuringMachine, from: &InstantaneousDescription, to: &InstantaneousDescription) -> Result<(), String> {
    let blank = m.blank();
    for i in 0..m.tapes() {
        let (old, new) = (&from.tapes()[i], &to.tapes()[i]);
        let (h, h2) = (from.heads()[i], to.heads()[i]);
        ensure(h2 >= 1, || "head left square 1".into())?;
        ensure(h2 + 1 == h || h2 == h + 1, || format!("head moved {h} -> {h2}"))?;
        ensure(!new.contains(&blank), || "blank stored on tape".into())?;
        if new.len() == old.len() + 1 {
            ensure(h == old.len() + 1, || "tape extended away from its end".into())?;
        } else {
            ensure(new.len() == old.len(), || "tape length changed by more than one".into())?;
        }
        for (j, (a, b)) in old.iter().zip(new.iter()).enumerate() {
            ensure(a == b || j + 1 == h, || format!("square {} changed away from head {h}", j + 1))?;
        }
    }
    Ok(())
}

fn machine(def: &MachineDef) -> TuringMachine {
    TuringMachine::new(def.clone()).expect("fixture validates")
}

fn ids_of(m: &TuringMachine, w: &[String]) -> Vec<SymbolId> {
    m.word(w).expect("word over the input alphabet")
}

fn tm_semantics() -> Check {
    let start = Instant::now();
    let mut checked_steps = 0usize;
    let mut checked_searches = 0usize;
    for (name, def) in fixtures::all() {
        let m = machine(&def);
        for w in words_up_to(&def.input_alphabet, 3) {
            let mut layer = vec![m.initial_id(&ids_of(&m, &w)).map_err(|e| e.to_string())?];
            let mut seen: HashSet<InstantaneousDescription> = layer.iter().cloned().collect();
            for _ in 0..8 {
                let mut next = Vec::new();
                for id in &layer {
                    for s in m.successors(id) {
                        step_invariants(&m, id, &s).map_err(|e| format!("{name} on {w:?}: {e}"))?;
                        checked_steps += 1;
                        if seen.insert(s.clone()) {
                            next.push(s);
                        }
                    }
                }
                layer = next;
            }
        }
        for w in words_up_to(&def.input_alphabet, 4) {
            let ids = ids_of(&m, &w);
            for t in 0..=8 {
                let bfs = m.accepts_within(&ids, t).map_err(|e| e.to_string())?;
                let oracle = oracle_accept(&def, &w, t);
                let got = bfs.accepted().then_some(bfs.steps_used);
                ensure(got == oracle, || format!("{name} on {w:?}, t={t}: search {got:?}, oracle {oracle:?}"))?;
                if let Some(path) = &bfs.trace {
                    for pair in path.windows(2) {
                        ensure(m.successors(&pair[0]).contains(&pair[1]), || format!("{name}: witness has a non-step"))?;
                    }
                }
                checked_searches += 1;
            }
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!(
        "{checked_steps} steps satisfy the step rules; {checked_searches} searches match the choice-sequence oracle"
    ))
}

fn bounded_acceptance() -> Check {
    let mut deterministic = 0;
    for (name, def) in fixtures::all() {
        let m = machine(&def);
        for w in words_up_to(&def.input_alphabet, 6) {
            let ids = ids_of(&m, &w);
            let mut prev = false;
            for t in 0..=14 {
                let a = m.accepts_within(&ids, t).map_err(|e| e.to_string())?;
                ensure(!prev || a.accepted(), || format!("{name} on {w:?}: accepted at t={} but not t={t}", t - 1))?;
                prev = a.accepted();
                if m.is_deterministic() {
                    let run = m.run_deterministic(&ids, t, false).map_err(|e| e.to_string())?;
                    ensure(run.accepted() == a.accepted(), || format!("{name} on {w:?}, t={t}: run and search disagree"))?;
                    if run.accepted() {
                        ensure(run.steps_used == a.steps_used, || format!("{name} on {w:?}: step counts differ"))?;
                    }
                }
                for s in 1..=8 {
                    let sp = m.accepts_within_space(&ids, t, s).map_err(|e| e.to_string())?;
                    ensure(!sp.accepted() || a.accepted(), || format!("{name} on {w:?}: space acceptance without time acceptance"))?;
                    if sp.accepted() {
                        ensure(sp.max_head_position <= s, || format!("{name}: witness exceeds space {s}"))?;
                    }
                }
            }
        }
        if m.is_deterministic() {
            deterministic += 1;
        }
    }
    let m = machine(&fixtures::even_a());
    let words: Vec<Vec<SymbolId>> = words_up_to(&["a".to_string()], 6)
        .iter()
        .map(|w| ids_of(&m, w))
        .collect();
    let real_time = m.check_time_bound(&words, |l| l as u64 + 1, 100).map_err(|e| e.to_string())?;
    ensure(real_time.holds, || "even_a misses T(l) = l + 1".into())?;
    let too_fast = m
        .check_time_bound(&words, |l| (l as u64).saturating_sub(1), 100)
        .map_err(|e| e.to_string())?;
    ensure(!too_fast.holds, || "even_a meets T(l) = l - 1".into())?;
    Ok(format!(
        "monotone in t on all fixtures; run agrees with search on {deterministic} deterministic fixtures; space implies time; real-time bound holds, l - 1 fails"
    ))
}

fn harness_scan_accept() -> Check {
    let start = Instant::now();
    let spec = ExperimentSpec {
        lengths: vec![1, 2],
        base_rule: BaseRule::Theorem,
        words_per_length: 64,
        seed: 11,
        machine_family: "scan-accept".into(),
        step_cap: 100_000,
    };
    let report = harness::run_experiment(&spec).map_err(|e| e.to_string())?;
    ensure(!report.rows.is_empty(), || "no rows".into())?;
    for r in &report.rows {
        ensure(r.agree && !r.capped, || format!("row {r:?}"))?;
        ensure(r.steps_wide == r.l as u64 + 1, || format!("row {r:?}: steps_wide"))?;
    }
    let render = |r: &StepReport| -> Result<(Vec<u8>, Vec<u8>), String> {
        let mut csv = Vec::new();
        let mut json = Vec::new();
        harness::emit_report(r, ReportFormat::Csv, &mut csv).map_err(|e| e.to_string())?;
        harness::emit_report(r, ReportFormat::Json, &mut json).map_err(|e| e.to_string())?;
        Ok((csv, json))
    };
    let first = render(&report)?;
    let again = render(&harness::run_experiment(&spec).map_err(|e| e.to_string())?)?;
    ensure(first == again, || "reports differ between identical runs".into())?;
    ensure(report.summary.note == harness::BOUND_DISCREPANCY_NOTE, || "note missing".into())?;
    ensure(report.summary_line().contains(harness::BOUND_DISCREPANCY_NOTE), || "note missing from summary line".into())?;
    within(start, Duration::from_secs(60))?;
    Ok(format!("{} rows agree, steps_wide = l + 1, reports byte-identical; {}", report.rows.len(), report.summary_line()))
}

fn fixture_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn zlogic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn expect_cli(args: &[&str], code: i32, stdout_has: &[&str], stderr_has: &[&str]) -> Result<String, String> {
    let out = zlogic(args);
    let stdout = String::from_utf8_lossy(&out.stdout).to_string();
    let stderr = String::from_utf8_lossy(&out.stderr);
    ensure(out.status.code() == Some(code), || format!("{args:?}: exit {:?}, stderr {stderr}", out.status.code()))?;
    for s in stdout_has {
        ensure(stdout.contains(s), || format!("{args:?}: stdout lacks {s:?}: {stdout}"))?;
    }
    for s in stderr_has {
        ensure(stderr.contains(s), || format!("{args:?}: stderr lacks {s:?}: {stderr}"))?;
    }
    if code == 2 {
        ensure(stdout.is_empty(), || format!("{args:?}: usage error wrote stdout"))?;
    }
    Ok(stdout)
}

fn cli_contract() -> Check {
    let dir = std::env::temp_dir().join(format!("zlogic-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let even = fixture_path("even_a.tm");
    let guess = fixture_path("guess_bit.tm");
    let blank = fixture_path("writes_blank.tm");
    let (even, guess, blank) = (even.to_str().unwrap(), guess.to_str().unwrap(), blank.to_str().unwrap());

    // table
    let out = expect_cli(&["table", "--n", "2", "--kind", "unary", "--index", "1,1"], 0, &["classification: negation"], &[])?;
    ensure(out.lines().skip(1).take(2).eq(["1", "0"]), || format!("complement table: {out}"))?;
    let out = expect_cli(&["table", "--n", "2", "--kind", "binary", "--index", "0,0,0,0"], 0, &["classification: or", "published label: nand (disagrees)"], &[])?;
    ensure(out.lines().skip(1).take(2).eq(["0 0", "0 1"]), || format!("or table: {out}"))?;
    expect_cli(&["table", "--n", "2", "--kind", "unary", "--index", "1"], 2, &[], &[])?;

    // enumerate
    expect_cli(&["enumerate", "--n", "2", "--kind", "binary", "--distinct-only"], 0, &["16 16"], &[])?;
    expect_cli(&["enumerate", "--n", "3", "--kind", "unary", "--distinct-only"], 0, &["27 27"], &[])?;
    expect_cli(&["enumerate", "--n", "4", "--kind", "binary"], 1, &[], &["too large"])?;

    // tm
    let out = expect_cli(&["tm", even, "aa"], 0, &[], &[])?;
    ensure(out.trim() == "accepted 3", || format!("even_a: {out}"))?;
    let out = expect_cli(&["tm", guess, "--mode", "accept", "--t", "2", "--trace"], 0, &[], &[])?;
    let lines: Vec<&str> = out.lines().collect();
    ensure(lines.first() == Some(&"accepted 2") && lines.len() == 4, || format!("guess_bit: {out}"))?;
    expect_cli(&["tm", blank, "a"], 1, &[], &["writes blank"])?;

    // encode
    let out = expect_cli(&["encode", "b:16|3,10", "value"], 0, &[], &[])?;
    ensure(out.trim() == "163", || format!("value: {out}"))?;
    let out = expect_cli(&["encode", "b:16|3,10", "rebase", "2"], 0, &[], &[])?;
    ensure(out.trim() == "b:2|1,1,0,0,0,1,0,1", || format!("rebase: {out}"))?;
    expect_cli(&["encode", "b:16|3,17", "value"], 1, &[], &[])?;

    // experiment
    let spec = |lengths: &str, family: &str, cap: u64| {
        format!(r#"{{"lengths":{lengths},"base_rule":"theorem","words_per_length":16,"seed":3,"machine_family":"{family}","step_cap":{cap}}}"#)
    };
    let scan = dir.join("scan.json");
    let empty = dir.join("empty.json");
    let capped = dir.join("capped.json");
    std::fs::write(&scan, spec("[1,2]", "scan-accept", 100_000)).map_err(|e| e.to_string())?;
    std::fs::write(&empty, spec("[]", "scan-accept", 100_000)).map_err(|e| e.to_string())?;
    std::fs::write(&capped, spec("[2]", "digit-sum-parity", 1)).map_err(|e| e.to_string())?;
    let report_path = dir.join("scan.csv");
    expect_cli(
        &["experiment", scan.to_str().unwrap(), "--output", report_path.to_str().unwrap()],
        0,
        &[harness::BOUND_DISCREPANCY_NOTE],
        &[],
    )?;
    let mut reader = csv::Reader::from_path(&report_path).map_err(|e| e.to_string())?;
    let rows: Vec<harness::StepRow> = reader.deserialize().collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(!rows.is_empty() && rows.iter().all(|r| r.agree), || "scan-accept report rows".into())?;
    expect_cli(&["experiment", empty.to_str().unwrap()], 2, &[], &[])?;
    let out = expect_cli(&["experiment", capped.to_str().unwrap(), "--format", "json"], 0, &[], &[])?;
    let report: StepReport = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(!report.rows.is_empty() && report.rows.iter().all(|r| r.capped), || "cap flags".into())?;

    // structured output round trips
    let out = expect_cli(&["table", "--n", "2", "--kind", "binary", "--index", "0,1,1,0", "--json"], 0, &[], &[])?;
    let doc: TableDoc = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(serde_json::to_string_pretty(&doc).unwrap() + "\n" == out, || "table json round trip".into())?;
    let out = expect_cli(&["enumerate", "--n", "2", "--kind", "unary", "--json"], 0, &[], &[])?;
    for line in out.lines() {
        let doc: TableDoc = serde_json::from_str(line).map_err(|e| e.to_string())?;
        ensure(serde_json::to_string(&doc).unwrap() == line, || "enumerate json round trip".into())?;
    }
    let out = expect_cli(&["enumerate", "--n", "2", "--kind", "binary", "--distinct-only", "--json"], 0, &[], &[])?;
    let r: DistinctnessReport = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(r.total == 16 && r.distinct == 16, || "distinctness json".into())?;
    let out = expect_cli(&["tm", guess, "--mode", "accept", "--t", "2", "--trace", "--json"], 0, &[], &[])?;
    let doc: TmDoc = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let m = machine(&fixtures::guess_bit());
    let back = m.outcome_from_doc(&doc.outcome).map_err(|e| e.to_string())?;
    let direct = m.accepts_within(&[], 2).map_err(|e| e.to_string())?;
    ensure(back == direct && back.verdict == Verdict::Accepted, || "tm json round trip".into())?;
    let out = expect_cli(&["encode", "b:16|3,10", "rebase", "2", "--json"], 0, &[], &[])?;
    let w: RadixWord = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(w.to_string() == "b:2|1,1,0,0,0,1,0,1", || "rebase json round trip".into())?;
    let out = expect_cli(&["encode", "b:16|3,10", "value", "--json"], 0, &[], &[])?;
    let v: ValueDoc = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(v.value == "163", || "value json".into())?;
    let out = expect_cli(&["encode", "b:16|3,10", "check", "b:2|1,1,0,0,0,1,0,1", "256", "--json"], 0, &[], &[])?;
    let c: CheckDoc = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    ensure(c.equal, || "check json".into())?;
    let out = expect_cli(&["experiment", scan.to_str().unwrap(), "--format", "json"], 0, &[], &[])?;
    let report: StepReport = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let direct: ExperimentSpec = serde_json::from_str(&std::fs::read_to_string(&scan).unwrap()).unwrap();
    ensure(report == harness::run_experiment(&direct).map_err(|e| e.to_string())?, || "experiment json round trip".into())?;

    let _ = std::fs::remove_dir_all(&dir);
    Ok("worked examples for table, enumerate, tm, encode and experiment; JSON round trips".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("unary n = 2 family", unary_counts),
        ("binary n = 2 family", binary_counts),
        ("distinctness for n = 3, 5 unary and n = 3 binary", distinctness),
        ("radix encoding laws", encoding_laws),
        ("machine step semantics and search oracle", tm_semantics),
        ("bounded acceptance semantics", bounded_acceptance),
        ("scan-accept experiment harness", harness_scan_accept),
        ("command line contract", cli_contract),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} ({took:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({took:.2?}): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
