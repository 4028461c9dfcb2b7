//! Many-valued logic over the n-th roots of unity.
//!
//! A logic value `z_n^e` is stored as its residue exponent `e` in `Z_n`. All
//! algebra happens on exponents; the complex form is only a view.
//!
//! Two generator functions build every table:
//!
//! * `f(n, a, b) = z_n^(a*b)`
//! * `g(n, k, z_n^a) = z_n^(a+k)`
//!
//! A unary function (`rho`) is selected by an index vector `(i_0, .., i_{n-1})`
//! and maps `z_n^a` to `g(n, i_a, z_n^a)`. A binary function (`mu`) is
//! selected by an `n x n` index matrix and maps `(z_n^a, z_n^b)` to
//! `g(n, i_{a,b}, f(n, a, b))`.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest arity accepted by [`enumerate_unary`] without an override.
pub const UNARY_ENUMERATION_LIMIT: u32 = 8;
/// Largest arity accepted by [`enumerate_binary`] without an override.
pub const BINARY_ENUMERATION_LIMIT: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MvlError {
    #[error("arity {0} is too small, need n >= 2")]
    ArityTooSmall(u32),
    #[error("argument {value} out of range [0, {modulus})")]
    ArgumentOutOfRange { value: i64, modulus: u32 },
    #[error("modulus mismatch: expected {expected}, found {found}")]
    ModulusMismatch { expected: u32, found: u32 },
    #[error("enumerating the {kind} family for n = {n} is too large (limit n <= {limit}); pass an override to force it")]
    EnumerationTooLarge { kind: Kind, n: u32, limit: u32 },
    #[error("classification needs modulus 2, found {0}")]
    NotBoolean(u32),
    #[error("index has {found} entries, expected {expected}")]
    IndexShape { expected: usize, found: usize },
}

/// Which function family a table or index belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Unary,
    Binary,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Unary => "unary",
            Kind::Binary => "binary",
        })
    }
}

impl std::str::FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "unary" => Ok(Kind::Unary),
            "binary" => Ok(Kind::Binary),
            other => Err(format!("unknown kind `{other}` (expected unary or binary)")),
        }
    }
}

fn check_arity(n: u32) -> Result<(), MvlError> {
    if n < 2 {
        Err(MvlError::ArityTooSmall(n))
    } else {
        Ok(())
    }
}

fn check_range(value: u32, n: u32) -> Result<(), MvlError> {
    if value >= n {
        Err(MvlError::ArgumentOutOfRange {
            value: value as i64,
            modulus: n,
        })
    } else {
        Ok(())
    }
}

/// The root of unity `z_n^e`, kept as `(n, e)` with `0 <= e < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LogicValue {
    modulus: u32,
    exponent: u32,
}

impl LogicValue {
    /// Builds `z_n^a`, reducing `a` into `[0, n)`. Negative `a` is allowed.
    pub fn new(n: u32, a: i64) -> Result<Self, MvlError> {
        check_arity(n)?;
        let exponent = a.rem_euclid(n as i64) as u32;
        Ok(LogicValue {
            modulus: n,
            exponent,
        })
    }

    pub(crate) fn raw(modulus: u32, exponent: u32) -> Self {
        debug_assert!(exponent < modulus);
        LogicValue { modulus, exponent }
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `(cos 2πe/n, sin 2πe/n)`. Display and cross-checking only.
    pub fn to_complex(&self) -> (f64, f64) {
        let angle = std::f64::consts::TAU * self.exponent as f64 / self.modulus as f64;
        (angle.cos(), angle.sin())
    }
}

impl fmt::Display for LogicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "z_{}^{}", self.modulus, self.exponent)
    }
}

/// Shorthand for [`LogicValue::new`].
pub fn make_value(n: u32, a: i64) -> Result<LogicValue, MvlError> {
    LogicValue::new(n, a)
}

/// `f^n(a, b) = z_n^(a*b)`.
pub fn f(n: u32, a: u32, b: u32) -> Result<LogicValue, MvlError> {
    check_arity(n)?;
    check_range(a, n)?;
    check_range(b, n)?;
    let e = (a as u64 * b as u64) % n as u64;
    Ok(LogicValue::raw(n, e as u32))
}

/// `g_k^n(z_n^a) = z_n^(a+k)`, a cyclic shift of the exponent.
pub fn g(n: u32, k: u32, v: LogicValue) -> Result<LogicValue, MvlError> {
    check_arity(n)?;
    check_range(k, n)?;
    if v.modulus != n {
        return Err(MvlError::ModulusMismatch {
            expected: n,
            found: v.modulus,
        });
    }
    Ok(LogicValue::raw(n, ((v.exponent as u64 + k as u64) % n as u64) as u32))
}

/// Index vector `(i_0, .., i_{n-1})` selecting a unary function.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnaryGenIndex {
    modulus: u32,
    indices: Vec<u32>,
}

impl UnaryGenIndex {
    pub fn new(n: u32, indices: Vec<u32>) -> Result<Self, MvlError> {
        check_arity(n)?;
        if indices.len() != n as usize {
            return Err(MvlError::IndexShape {
                expected: n as usize,
                found: indices.len(),
            });
        }
        for &i in &indices {
            check_range(i, n)?;
        }
        Ok(UnaryGenIndex {
            modulus: n,
            indices,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }
}

/// Index matrix `i_{r,c}` selecting a binary function, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryGenIndex {
    modulus: u32,
    matrix: Vec<u32>,
}

impl BinaryGenIndex {
    /// `flat` holds the `n*n` entries row by row.
    pub fn new(n: u32, flat: Vec<u32>) -> Result<Self, MvlError> {
        check_arity(n)?;
        let want = n as usize * n as usize;
        if flat.len() != want {
            return Err(MvlError::IndexShape {
                expected: want,
                found: flat.len(),
            });
        }
        for &i in &flat {
            check_range(i, n)?;
        }
        Ok(BinaryGenIndex {
            modulus: n,
            matrix: flat,
        })
    }

    pub fn from_rows(n: u32, rows: &[Vec<u32>]) -> Result<Self, MvlError> {
        if rows.len() != n as usize || rows.iter().any(|r| r.len() != n as usize) {
            return Err(MvlError::IndexShape {
                expected: n as usize * n as usize,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        Self::new(n, rows.concat())
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, row: u32, col: u32) -> u32 {
        self.matrix[(row * self.modulus + col) as usize]
    }

    /// Entries row by row.
    pub fn flat(&self) -> &[u32] {
        &self.matrix
    }
}

/// Outputs of a unary function; position `a` is the image of `z_n^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnaryTable {
    modulus: u32,
    outputs: Vec<LogicValue>,
}

impl UnaryTable {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn outputs(&self) -> &[LogicValue] {
        &self.outputs
    }

    pub fn exponents(&self) -> Vec<u32> {
        self.outputs.iter().map(LogicValue::exponent).collect()
    }

    /// Builds a table from output exponents, checking each is `< n`.
    pub fn from_exponents(n: u32, exps: &[u32]) -> Result<Self, MvlError> {
        check_arity(n)?;
        if exps.len() != n as usize {
            return Err(MvlError::IndexShape {
                expected: n as usize,
                found: exps.len(),
            });
        }
        let mut outputs = Vec::with_capacity(exps.len());
        for &e in exps {
            check_range(e, n)?;
            outputs.push(LogicValue::raw(n, e));
        }
        Ok(UnaryTable { modulus: n, outputs })
    }

    pub fn apply(&self, v: LogicValue) -> Result<LogicValue, MvlError> {
        if v.modulus != self.modulus {
            return Err(MvlError::ModulusMismatch {
                expected: self.modulus,
                found: v.modulus,
            });
        }
        Ok(self.outputs[v.exponent as usize])
    }
}

/// Outputs of a binary function; row = first argument, column = second.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryTable {
    modulus: u32,
    outputs: Vec<LogicValue>,
}

impl BinaryTable {
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn get(&self, a: u32, b: u32) -> LogicValue {
        self.outputs[(a * self.modulus + b) as usize]
    }

    pub fn rows(&self) -> Vec<Vec<LogicValue>> {
        self.outputs
            .chunks(self.modulus as usize)
            .map(<[LogicValue]>::to_vec)
            .collect()
    }

    pub fn exponent_rows(&self) -> Vec<Vec<u32>> {
        self.outputs
            .chunks(self.modulus as usize)
            .map(|r| r.iter().map(LogicValue::exponent).collect())
            .collect()
    }

    pub fn from_exponent_rows(n: u32, rows: &[Vec<u32>]) -> Result<Self, MvlError> {
        check_arity(n)?;
        if rows.len() != n as usize || rows.iter().any(|r| r.len() != n as usize) {
            return Err(MvlError::IndexShape {
                expected: n as usize * n as usize,
                found: rows.iter().map(Vec::len).sum(),
            });
        }
        let mut outputs = Vec::with_capacity(rows.len() * rows.len());
        for &e in rows.iter().flatten() {
            check_range(e, n)?;
            outputs.push(LogicValue::raw(n, e));
        }
        Ok(BinaryTable { modulus: n, outputs })
    }

    pub fn apply(&self, a: LogicValue, b: LogicValue) -> Result<LogicValue, MvlError> {
        for v in [a, b] {
            if v.modulus != self.modulus {
                return Err(MvlError::ModulusMismatch {
                    expected: self.modulus,
                    found: v.modulus,
                });
            }
        }
        Ok(self.get(a.exponent, b.exponent))
    }
}

/// `rho(z_n^a) = g(n, i_a, z_n^a)` for every `a`.
pub fn unary_from_index(idx: &UnaryGenIndex) -> UnaryTable {
    let n = idx.modulus;
    let outputs = idx
        .indices
        .iter()
        .enumerate()
        .map(|(a, &k)| {
            g(n, k, LogicValue::raw(n, a as u32)).expect("index entries are range-checked")
        })
        .collect();
    UnaryTable { modulus: n, outputs }
}

/// `mu(z_n^a, z_n^b) = g(n, i_{a,b}, f(n, a, b))` for every `(a, b)`.
pub fn binary_from_index(idx: &BinaryGenIndex) -> BinaryTable {
    let n = idx.modulus;
    let mut outputs = Vec::with_capacity(idx.matrix.len());
    for a in 0..n {
        for b in 0..n {
            let base = f(n, a, b).expect("a, b < n");
            outputs.push(g(n, idx.get(a, b), base).expect("index entries are range-checked"));
        }
    }
    BinaryTable { modulus: n, outputs }
}

pub fn apply_unary(t: &UnaryTable, v: LogicValue) -> Result<LogicValue, MvlError> {
    t.apply(v)
}

pub fn apply_binary(t: &BinaryTable, a: LogicValue, b: LogicValue) -> Result<LogicValue, MvlError> {
    t.apply(a, b)
}

/// Odometer over `{0..n}^len` in lexicographic order, first entry slowest.
#[derive(Debug, Clone)]
struct Odometer {
    n: u32,
    current: Option<Vec<u32>>,
}

impl Odometer {
    fn new(n: u32, len: usize) -> Self {
        Odometer {
            n,
            current: Some(vec![0; len]),
        }
    }
}

impl Iterator for Odometer {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut pos = cur.len();
        loop {
            if pos == 0 {
                self.current = None;
                break;
            }
            pos -= 1;
            cur[pos] += 1;
            if cur[pos] < self.n {
                break;
            }
            cur[pos] = 0;
        }
        Some(out)
    }
}

/// Every unary function for arity `n`, index vectors in lexicographic order
/// starting from all zeros. Refuses `n > 8` unless `allow_large`.
pub fn enumerate_unary(
    n: u32,
    allow_large: bool,
) -> Result<impl Iterator<Item = (UnaryGenIndex, UnaryTable)>, MvlError> {
    check_arity(n)?;
    if n > UNARY_ENUMERATION_LIMIT && !allow_large {
        return Err(MvlError::EnumerationTooLarge {
            kind: Kind::Unary,
            n,
            limit: UNARY_ENUMERATION_LIMIT,
        });
    }
    Ok(Odometer::new(n, n as usize).map(move |indices| {
        let idx = UnaryGenIndex {
            modulus: n,
            indices,
        };
        let table = unary_from_index(&idx);
        (idx, table)
    }))
}

/// Every binary function for arity `n`, index matrices (row-major) in
/// lexicographic order. Refuses `n > 3` unless `allow_large`.
pub fn enumerate_binary(
    n: u32,
    allow_large: bool,
) -> Result<impl Iterator<Item = (BinaryGenIndex, BinaryTable)>, MvlError> {
    check_arity(n)?;
    if n > BINARY_ENUMERATION_LIMIT && !allow_large {
        return Err(MvlError::EnumerationTooLarge {
            kind: Kind::Binary,
            n,
            limit: BINARY_ENUMERATION_LIMIT,
        });
    }
    Ok(Odometer::new(n, n as usize * n as usize).map(move |matrix| {
        let idx = BinaryGenIndex { modulus: n, matrix };
        let table = binary_from_index(&idx);
        (idx, table)
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinctnessReport {
    pub total: u64,
    pub distinct: u64,
}

/// Materializes the whole family and counts distinct tables.
pub fn distinctness_report(
    n: u32,
    kind: Kind,
    allow_large: bool,
) -> Result<DistinctnessReport, MvlError> {
    let mut total = 0u64;
    let mut seen: HashSet<Vec<LogicValue>> = HashSet::new();
    match kind {
        Kind::Unary => {
            for (_, t) in enumerate_unary(n, allow_large)? {
                total += 1;
                seen.insert(t.outputs);
            }
        }
        Kind::Binary => {
            for (_, t) in enumerate_binary(n, allow_large)? {
                total += 1;
                seen.insert(t.outputs);
            }
        }
    }
    Ok(DistinctnessReport {
        total,
        distinct: seen.len() as u64,
    })
}

/// Which exponent of `z_2` is read as boolean true.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruthConvention {
    true_exponent: u32,
}

impl Default for TruthConvention {
    fn default() -> Self {
        TruthConvention { true_exponent: 0 }
    }
}

impl TruthConvention {
    pub fn new(true_exponent: u32) -> Result<Self, MvlError> {
        check_range(true_exponent, 2)?;
        Ok(TruthConvention { true_exponent })
    }

    pub fn true_exponent(&self) -> u32 {
        self.true_exponent
    }

    pub fn is_true(&self, v: LogicValue) -> bool {
        v.exponent == self.true_exponent
    }

    pub fn value_of(&self, b: bool) -> LogicValue {
        let e = if b {
            self.true_exponent
        } else {
            1 - self.true_exponent
        };
        LogicValue::raw(2, e)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum UnaryConnective {
    Identity,
    Negation,
    ConstantTrue,
    ConstantFalse,
}

impl UnaryConnective {
    pub const ALL: [UnaryConnective; 4] = [
        UnaryConnective::Identity,
        UnaryConnective::Negation,
        UnaryConnective::ConstantTrue,
        UnaryConnective::ConstantFalse,
    ];

    pub fn eval(self, p: bool) -> bool {
        match self {
            UnaryConnective::Identity => p,
            UnaryConnective::Negation => !p,
            UnaryConnective::ConstantTrue => true,
            UnaryConnective::ConstantFalse => false,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            UnaryConnective::Identity => "identity",
            UnaryConnective::Negation => "negation",
            UnaryConnective::ConstantTrue => "constant-true",
            UnaryConnective::ConstantFalse => "constant-false",
        }
    }
}

impl fmt::Display for UnaryConnective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The sixteen two-argument boolean connectives; `p` is the first argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BinaryConnective {
    And,
    Or,
    Nand,
    Nor,
    Xor,
    Iff,
    /// p -> q
    Implies,
    /// q -> p
    ConverseImplies,
    /// p and not q
    NotImplies,
    /// not p and q
    NotConverseImplies,
    LeftProjection,
    RightProjection,
    LeftComplement,
    RightComplement,
    ConstantTrue,
    ConstantFalse,
}

impl BinaryConnective {
    pub const ALL: [BinaryConnective; 16] = [
        BinaryConnective::And,
        BinaryConnective::Or,
        BinaryConnective::Nand,
        BinaryConnective::Nor,
        BinaryConnective::Xor,
        BinaryConnective::Iff,
        BinaryConnective::Implies,
        BinaryConnective::ConverseImplies,
        BinaryConnective::NotImplies,
        BinaryConnective::NotConverseImplies,
        BinaryConnective::LeftProjection,
        BinaryConnective::RightProjection,
        BinaryConnective::LeftComplement,
        BinaryConnective::RightComplement,
        BinaryConnective::ConstantTrue,
        BinaryConnective::ConstantFalse,
    ];

    pub fn eval(self, p: bool, q: bool) -> bool {
        use BinaryConnective::*;
        match self {
            And => p && q,
            Or => p || q,
            Nand => !(p && q),
            Nor => !(p || q),
            Xor => p != q,
            Iff => p == q,
            Implies => !p || q,
            ConverseImplies => p || !q,
            NotImplies => p && !q,
            NotConverseImplies => !p && q,
            LeftProjection => p,
            RightProjection => q,
            LeftComplement => !p,
            RightComplement => !q,
            ConstantTrue => true,
            ConstantFalse => false,
        }
    }

    pub fn name(self) -> &'static str {
        use BinaryConnective::*;
        match self {
            And => "and",
            Or => "or",
            Nand => "nand",
            Nor => "nor",
            Xor => "xor",
            Iff => "iff",
            Implies => "implies",
            ConverseImplies => "converse-implies",
            NotImplies => "not-implies",
            NotConverseImplies => "not-converse-implies",
            LeftProjection => "left-projection",
            RightProjection => "right-projection",
            LeftComplement => "left-complement",
            RightComplement => "right-complement",
            ConstantTrue => "constant-true",
            ConstantFalse => "constant-false",
        }
    }
}

impl fmt::Display for BinaryConnective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classify_unary(t: &UnaryTable, conv: TruthConvention) -> Result<UnaryConnective, MvlError> {
    if t.modulus != 2 {
        return Err(MvlError::NotBoolean(t.modulus));
    }
    let out = |p: bool| conv.is_true(t.outputs[conv.value_of(p).exponent as usize]);
    let found = UnaryConnective::ALL
        .into_iter()
        .find(|c| [false, true].iter().all(|&p| c.eval(p) == out(p)));
    Ok(found.expect("the four unary connectives cover every boolean table"))
}

pub fn classify_binary(
    t: &BinaryTable,
    conv: TruthConvention,
) -> Result<BinaryConnective, MvlError> {
    if t.modulus != 2 {
        return Err(MvlError::NotBoolean(t.modulus));
    }
    let out = |p: bool, q: bool| {
        conv.is_true(t.get(conv.value_of(p).exponent, conv.value_of(q).exponent))
    };
    let cases = [(false, false), (false, true), (true, false), (true, true)];
    let found = BinaryConnective::ALL
        .into_iter()
        .find(|c| cases.iter().all(|&(p, q)| c.eval(p, q) == out(p, q)));
    Ok(found.expect("the sixteen connectives cover every boolean table"))
}

/// A label printed in the literature for one of the n = 2 tables, together
/// with the connective that label names under textbook definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PublishedLabel<C> {
    pub text: &'static str,
    pub names: C,
}

/// Published labels for the four unary tables, keyed by `(i_0, i_1)`.
pub const PUBLISHED_UNARY_LABELS: [([u32; 2], PublishedLabel<UnaryConnective>); 4] = [
    ([0, 0], PublishedLabel { text: "self projection", names: UnaryConnective::Identity }),
    ([0, 1], PublishedLabel { text: "antilogy", names: UnaryConnective::ConstantFalse }),
    ([1, 0], PublishedLabel { text: "tautology", names: UnaryConnective::ConstantTrue }),
    ([1, 1], PublishedLabel { text: "complementation", names: UnaryConnective::Negation }),
];

/// Published labels for the sixteen binary tables, keyed by
/// `(i_00, i_01, i_10, i_11)`.
pub const PUBLISHED_BINARY_LABELS: [([u32; 4], PublishedLabel<BinaryConnective>); 16] = {
    use BinaryConnective::*;
    [
        ([0, 0, 0, 0], PublishedLabel { text: "nand", names: Nand }),
        ([0, 0, 0, 1], PublishedLabel { text: "antilogy", names: ConstantFalse }),
        ([0, 0, 1, 0], PublishedLabel { text: "left complementation", names: LeftComplement }),
        ([0, 0, 1, 1], PublishedLabel { text: "if ... then", names: Implies }),
        ([0, 1, 0, 0], PublishedLabel { text: "right projection", names: RightProjection }),
        ([0, 1, 0, 1], PublishedLabel { text: "if", names: ConverseImplies }),
        ([0, 1, 1, 0], PublishedLabel { text: "neither ... nor", names: Nor }),
        ([0, 1, 1, 1], PublishedLabel { text: "if and only if", names: Iff }),
        ([1, 0, 0, 0], PublishedLabel { text: "xor", names: Xor }),
        ([1, 0, 0, 1], PublishedLabel { text: "or", names: Or }),
        ([1, 0, 1, 0], PublishedLabel { text: "not ... but", names: NotConverseImplies }),
        ([1, 0, 1, 1], PublishedLabel { text: "right projection", names: RightProjection }),
        ([1, 1, 0, 0], PublishedLabel { text: "but not", names: NotImplies }),
        ([1, 1, 0, 1], PublishedLabel { text: "left projection", names: LeftProjection }),
        ([1, 1, 1, 0], PublishedLabel { text: "tautology", names: ConstantTrue }),
        ([1, 1, 1, 1], PublishedLabel { text: "and", names: And }),
    ]
};

pub fn published_unary_label(idx: &UnaryGenIndex) -> Option<PublishedLabel<UnaryConnective>> {
    PUBLISHED_UNARY_LABELS
        .iter()
        .find(|(key, _)| idx.modulus == 2 && key[..] == idx.indices[..])
        .map(|(_, l)| *l)
}

pub fn published_binary_label(idx: &BinaryGenIndex) -> Option<PublishedLabel<BinaryConnective>> {
    PUBLISHED_BINARY_LABELS
        .iter()
        .find(|(key, _)| idx.modulus == 2 && key[..] == idx.matrix[..])
        .map(|(_, l)| *l)
}

/// One row of the label comparison for `n = 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelComparison {
    pub index: Vec<u32>,
    pub computed: String,
    pub published: String,
    pub agrees: bool,
}

/// Compares computed classifications with the published labels for every
/// unary and binary `n = 2` table. Returns only the disagreements.
pub fn label_disagreements(conv: TruthConvention) -> Vec<LabelComparison> {
    let mut out = Vec::new();
    for (key, label) in PUBLISHED_UNARY_LABELS {
        let idx = UnaryGenIndex::new(2, key.to_vec()).expect("static index");
        let computed = classify_unary(&unary_from_index(&idx), conv).expect("n = 2");
        if computed != label.names {
            out.push(LabelComparison {
                index: key.to_vec(),
                computed: computed.name().to_string(),
                published: label.text.to_string(),
                agrees: false,
            });
        }
    }
    for (key, label) in PUBLISHED_BINARY_LABELS {
        let idx = BinaryGenIndex::new(2, key.to_vec()).expect("static index");
        let computed = classify_binary(&binary_from_index(&idx), conv).expect("n = 2");
        if computed != label.names {
            out.push(LabelComparison {
                index: key.to_vec(),
                computed: computed.name().to_string(),
                published: label.text.to_string(),
                agrees: false,
            });
        }
    }
    out
}

/// Structured form of a table: `{modulus, kind, index, outputs}`.
///
/// `index` is the flat index (row-major for binary). `outputs` holds
/// exponents: a flat list for unary tables, a list of rows for binary ones.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub modulus: u32,
    pub kind: Kind,
    pub index: Vec<u32>,
    pub outputs: TableOutputs,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published_label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub published_agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableOutputs {
    Unary(Vec<u32>),
    Binary(Vec<Vec<u32>>),
}

impl TableDoc {
    pub fn unary(idx: &UnaryGenIndex, t: &UnaryTable) -> Self {
        TableDoc {
            modulus: t.modulus,
            kind: Kind::Unary,
            index: idx.indices.clone(),
            outputs: TableOutputs::Unary(t.exponents()),
            classification: None,
            published_label: None,
            published_agrees: None,
        }
    }

    pub fn binary(idx: &BinaryGenIndex, t: &BinaryTable) -> Self {
        TableDoc {
            modulus: t.modulus,
            kind: Kind::Binary,
            index: idx.matrix.clone(),
            outputs: TableOutputs::Binary(t.exponent_rows()),
            classification: None,
            published_label: None,
            published_agrees: None,
        }
    }

    /// Plain-text grid: one line per first-argument exponent, columns are
    /// second-argument exponents (a single column for unary tables).
    pub fn grid(&self) -> String {
        let mut s = String::new();
        match &self.outputs {
            TableOutputs::Unary(v) => {
                for e in v {
                    s.push_str(&format!("{e}\n"));
                }
            }
            TableOutputs::Binary(rows) => {
                for r in rows {
                    let cells: Vec<String> = r.iter().map(u32::to_string).collect();
                    s.push_str(&cells.join(" "));
                    s.push('\n');
                }
            }
        }
        s
    }
}
