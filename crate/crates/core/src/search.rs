//! Minimum-weight search engines and the theorem-verification suite.
//!
//! Exhaustive mode walks the whole q^k information space through the
//! systematic encoder. Bounded mode enumerates every word of weight at
//! most W directly (positions ascending, remaining-budget pruning, the
//! parity sums maintained incrementally per placed symbol) and is sound
//! and complete below W without touching the information space. Workers
//! own disjoint candidate sub-spaces and a single reducer merges local
//! results; witness sets are reported in lexicographic order so results
//! are independent of scheduling.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::code::{hamming_weight, lee_weight, Codeword, GehCode};
use crate::construct::{check_gamma_dependencies, Parity, CASE_TABLE};
use crate::error::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1 << 26;
pub const DEFAULT_WITNESS_CAP: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Hamming,
    Lee,
}

impl std::str::FromStr for Metric {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "hamming" => Ok(Metric::Hamming),
            "lee" => Ok(Metric::Lee),
            _ => Err(Error::Parse(format!("unknown metric {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exhaustive,
    Bounded,
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive" => Ok(Mode::Exhaustive),
            "bounded" => Ok(Mode::Bounded),
            _ => Err(Error::Parse(format!("unknown mode {s:?}"))),
        }
    }
}

/// A minimum-weight search request.
#[derive(Debug, Clone)]
pub struct SearchSpec<'a> {
    pub code: &'a GehCode,
    pub metric: Metric,
    pub mode: Mode,
    pub bound: Option<u64>,
    pub budget: u64,
    pub workers: usize,
    pub witness_cap: usize,
}

impl<'a> SearchSpec<'a> {
    pub fn new(code: &'a GehCode, metric: Metric, mode: Mode) -> Self {
        SearchSpec {
            code,
            metric,
            mode,
            bound: None,
            budget: DEFAULT_BUDGET,
            workers: 1,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }
}

/// Either an exact minimum or one-sided evidence that no nonzero codeword
/// has weight at or below the searched bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinWeight {
    Exact(u64),
    AboveBound(u64),
}

impl MinWeight {
    pub fn exact(&self) -> Option<u64> {
        match self {
            MinWeight::Exact(w) => Some(*w),
            MinWeight::AboveBound(_) => None,
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            MinWeight::Exact(w) => json!(w),
            MinWeight::AboveBound(_) => json!("above-bound"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct MinWeightResult {
    pub min_weight: MinWeight,
    /// Witnesses of the minimum, lexicographic by entry sequence.
    pub witnesses: Vec<Codeword>,
    pub witness_overflow: bool,
    pub candidates: u64,
    pub wall: Duration,
}

fn contribution(metric: Metric, q: u64, v: u64) -> u64 {
    match metric {
        Metric::Hamming => 1,
        Metric::Lee => v.min(q - v),
    }
}

fn word_weight(metric: Metric, q: u64, entries: &[u64]) -> u64 {
    match metric {
        Metric::Hamming => hamming_weight(entries),
        Metric::Lee => lee_weight(q, entries),
    }
}

/// q^k when it fits in u128.
pub fn codeword_count(code: &GehCode) -> Option<u128> {
    (code.params().q() as u128).checked_pow(code.params().k() as u32)
}

fn info_from_index(q: u64, k: usize, mut idx: u128) -> Vec<u64> {
    (0..k)
        .map(|_| {
            let d = (idx % q as u128) as u64;
            idx /= q as u128;
            d
        })
        .collect()
}

/// Streams all q^k codewords through the systematic encoder, information
/// words in base-q counting order.
pub fn enumerate_codewords<'a>(
    code: &'a GehCode,
    budget: u64,
) -> Result<impl Iterator<Item = Codeword> + 'a> {
    let total = codeword_count(code).ok_or(Error::BudgetExceeded {
        needed: u128::MAX,
        budget: budget as u128,
    })?;
    if total > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: budget as u128,
        });
    }
    let q = code.params().q();
    let k = code.num_info();
    Ok((0..total).map(move |idx| {
        code.encode(&info_from_index(q, k, idx))
            .expect("enumerated info word is valid")
    }))
}

/// Dispatches by `spec.mode`.
pub fn min_weight_search(spec: &SearchSpec) -> Result<MinWeightResult> {
    match spec.mode {
        Mode::Exhaustive => min_weight_exhaustive(spec),
        Mode::Bounded => min_weight_bounded(spec),
    }
}

/// True minimum over all nonzero codewords by full encoder enumeration.
pub fn min_weight_exhaustive(spec: &SearchSpec) -> Result<MinWeightResult> {
    let start = Instant::now();
    let code = spec.code;
    let total = codeword_count(code).ok_or(Error::BudgetExceeded {
        needed: u128::MAX,
        budget: spec.budget as u128,
    })?;
    if total > spec.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: total,
            budget: spec.budget as u128,
        });
    }
    let q = code.params().q();
    let k = code.num_info();
    let metric = spec.metric;
    let cap = spec.witness_cap;
    let workers = spec.workers.max(1).min(64);

    struct Local {
        min: u64,
        witnesses: Vec<Vec<u64>>,
        at_min: u64,
    }

    let run_range = |lo: u128, hi: u128| -> Local {
        let mut local = Local {
            min: u64::MAX,
            witnesses: Vec::new(),
            at_min: 0,
        };
        let mut word = Vec::new();
        for idx in lo..hi {
            let info = info_from_index(q, k, idx);
            code.encode_into(&info, &mut word);
            let w = word_weight(metric, q, &word);
            if w == 0 {
                continue; // the zero codeword
            }
            match w.cmp(&local.min) {
                std::cmp::Ordering::Less => {
                    local.min = w;
                    local.witnesses.clear();
                    local.witnesses.push(word.clone());
                    local.at_min = 1;
                }
                std::cmp::Ordering::Equal => {
                    local.at_min += 1;
                    if local.witnesses.len() < cap {
                        local.witnesses.push(word.clone());
                    }
                }
                std::cmp::Ordering::Greater => {}
            }
        }
        local
    };

    let locals: Vec<Local> = if workers == 1 {
        vec![run_range(0, total)]
    } else {
        let chunk = total / workers as u128 + 1;
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = (w as u128 * chunk).min(total);
                    let hi = ((w as u128 + 1) * chunk).min(total);
                    s.spawn(move || run_range(lo, hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let min = locals.iter().map(|l| l.min).min().unwrap_or(u64::MAX);
    assert_ne!(min, u64::MAX, "a nonzero code always has a nonzero word");
    let mut at_min = 0u64;
    let mut witnesses: Vec<Vec<u64>> = Vec::new();
    for l in &locals {
        if l.min == min {
            at_min += l.at_min;
            witnesses.extend(l.witnesses.iter().cloned());
        }
    }
    witnesses.sort();
    witnesses.dedup();
    let overflow = at_min as usize > cap;
    witnesses.truncate(cap);
    Ok(MinWeightResult {
        min_weight: MinWeight::Exact(min),
        witnesses: witnesses
            .into_iter()
            .map(|e| Codeword::new(q, e).expect("encoded entries in range"))
            .collect(),
        witness_overflow: overflow,
        candidates: total as u64,
        wall: start.elapsed(),
    })
}

/// Visits every word of weight <= max_w: supports in ascending position
/// order, every admissible value per position, pruned by the remaining
/// weight budget.
trait WalkVisitor {
    fn place(&mut self, pos: usize, value: u64);
    fn unplace(&mut self, pos: usize, value: u64);
    fn node(&mut self, stack: &[(usize, u64)], weight: u64);
}

#[allow(clippy::too_many_arguments)]
fn walk_rec<V: WalkVisitor>(
    q: u64,
    len: usize,
    metric: Metric,
    stack: &mut Vec<(usize, u64)>,
    start_pos: usize,
    rem: u64,
    weight: u64,
    visitor: &mut V,
) {
    if rem == 0 {
        return;
    }
    for pos in start_pos..len {
        for val in 1..q {
            let c = contribution(metric, q, val);
            if c > rem {
                continue;
            }
            visitor.place(pos, val);
            stack.push((pos, val));
            visitor.node(stack, weight + c);
            walk_rec(q, len, metric, stack, pos + 1, rem - c, weight + c, visitor);
            stack.pop();
            visitor.unplace(pos, val);
        }
    }
}

fn walk_first_positions<V: WalkVisitor>(
    q: u64,
    len: usize,
    metric: Metric,
    max_w: u64,
    first_positions: std::ops::Range<usize>,
    visitor: &mut V,
) {
    let mut stack = Vec::new();
    for pos in first_positions {
        for val in 1..q {
            let c = contribution(metric, q, val);
            if c > max_w {
                continue;
            }
            visitor.place(pos, val);
            stack.push((pos, val));
            visitor.node(&stack, c);
            walk_rec(q, len, metric, &mut stack, pos + 1, max_w - c, c, visitor);
            stack.pop();
            visitor.unplace(pos, val);
        }
    }
}

/// Test access to the bounded-word enumerator: calls `f` once per distinct
/// nonzero word of weight <= max_w with (placements, weight).
pub fn for_each_weighted_word<F>(q: u64, len: usize, metric: Metric, max_w: u64, mut f: F)
where
    F: FnMut(&[(usize, u64)], u64),
{
    struct Plain<F>(F);
    impl<F: FnMut(&[(usize, u64)], u64)> WalkVisitor for Plain<F> {
        fn place(&mut self, _: usize, _: u64) {}
        fn unplace(&mut self, _: usize, _: u64) {}
        fn node(&mut self, stack: &[(usize, u64)], weight: u64) {
            (self.0)(stack, weight);
        }
    }
    walk_first_positions(q, len, metric, max_w, 0..len, &mut Plain(&mut f));
}

struct SyndromeVisitor<'a> {
    q: u64,
    len: usize,
    cols: &'a [Vec<u64>],
    s0: u64,
    acc: Vec<u64>,
    found: Vec<(u64, Vec<u64>)>,
    candidates: u64,
}

impl WalkVisitor for SyndromeVisitor<'_> {
    fn place(&mut self, pos: usize, value: u64) {
        self.s0 = (self.s0 + value) % self.q;
        if pos >= 1 {
            for (a, &c) in self.acc.iter_mut().zip(&self.cols[pos]) {
                *a = (*a + value * c) % self.q;
            }
        }
    }

    fn unplace(&mut self, pos: usize, value: u64) {
        self.s0 = (self.s0 + self.q - value) % self.q;
        if pos >= 1 {
            for (a, &c) in self.acc.iter_mut().zip(&self.cols[pos]) {
                *a = (*a + self.q - value * c % self.q) % self.q;
            }
        }
    }

    fn node(&mut self, stack: &[(usize, u64)], weight: u64) {
        self.candidates += 1;
        if self.s0 == 0 && self.acc.iter().all(|&a| a == 0) {
            let mut entries = vec![0u64; self.len];
            for &(pos, val) in stack {
                entries[pos] = val;
            }
            self.found.push((weight, entries));
        }
    }
}

/// Exact minimum if it is <= the bound, otherwise `AboveBound`; never a
/// false witness. Enumerates only words of weight <= bound.
pub fn min_weight_bounded(spec: &SearchSpec) -> Result<MinWeightResult> {
    let start = Instant::now();
    let max_w = spec
        .bound
        .ok_or_else(|| Error::InvalidParam("bounded mode needs a bound".into()))?;
    if max_w < 1 {
        return Err(Error::InvalidParam("bound must be >= 1".into()));
    }
    let code = spec.code;
    let q = code.params().q();
    let len = code.length();
    let needed = count_words_up_to(spec.metric, q, len, max_w).saturating_sub(1);
    if needed > spec.budget as u128 {
        return Err(Error::BudgetExceeded {
            needed,
            budget: spec.budget as u128,
        });
    }

    // column expansions of xi^(pos-1) per word position; position 0 is the
    // zero-sum coordinate and has no column
    let m = code.params().m() as usize;
    let parity = code.parity_matrix();
    let cols: Vec<Vec<u64>> = (0..len)
        .map(|p| (0..m).map(|r| parity[r + 1][p]).collect())
        .collect();

    let workers = spec.workers.max(1).min(len);
    let run_chunk = |range: std::ops::Range<usize>| -> (Vec<(u64, Vec<u64>)>, u64) {
        let mut visitor = SyndromeVisitor {
            q,
            len,
            cols: &cols,
            s0: 0,
            acc: vec![0; m],
            found: Vec::new(),
            candidates: 0,
        };
        walk_first_positions(q, len, spec.metric, max_w, range, &mut visitor);
        (visitor.found, visitor.candidates)
    };

    let chunks: Vec<(Vec<(u64, Vec<u64>)>, u64)> = if workers == 1 {
        vec![run_chunk(0..len)]
    } else {
        let per = len.div_ceil(workers);
        std::thread::scope(|s| {
            let handles: Vec<_> = (0..workers)
                .map(|w| {
                    let lo = (w * per).min(len);
                    let hi = ((w + 1) * per).min(len);
                    let run = &run_chunk;
                    s.spawn(move || run(lo..hi))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        })
    };

    let mut candidates = 0u64;
    let mut found: Vec<(u64, Vec<u64>)> = Vec::new();
    for (f, c) in chunks {
        candidates += c;
        found.extend(f);
    }
    let min = found.iter().map(|&(w, _)| w).min();
    let (min_weight, witnesses, overflow) = match min {
        None => (MinWeight::AboveBound(max_w), Vec::new(), false),
        Some(w) => {
            let mut wits: Vec<Vec<u64>> = found
                .into_iter()
                .filter(|&(fw, _)| fw == w)
                .map(|(_, e)| e)
                .collect();
            wits.sort();
            wits.dedup();
            let overflow = wits.len() > spec.witness_cap;
            wits.truncate(spec.witness_cap);
            (MinWeight::Exact(w), wits, overflow)
        }
    };
    Ok(MinWeightResult {
        min_weight,
        witnesses: witnesses
            .into_iter()
            .map(|e| Codeword::new(q, e).expect("entries in range"))
            .collect(),
        witness_overflow: overflow,
        candidates,
        wall: start.elapsed(),
    })
}

/// Number of words in Z_q^len of weight exactly w (dynamic programming).
pub fn count_words_exact(metric: Metric, q: u64, len: usize, w: u64) -> u128 {
    count_dp(metric, q, len, w)[w as usize]
}

/// Number of words in Z_q^len of weight <= w, including the zero word.
pub fn count_words_up_to(metric: Metric, q: u64, len: usize, w: u64) -> u128 {
    count_dp(metric, q, len, w).iter().sum()
}

fn count_dp(metric: Metric, q: u64, len: usize, w: u64) -> Vec<u128> {
    let w = w as usize;
    let mut per_value = vec![0u128; w + 1];
    for v in 1..q {
        let c = contribution(metric, q, v) as usize;
        if c <= w {
            per_value[c] += 1;
        }
    }
    let mut dp = vec![0u128; w + 1];
    dp[0] = 1;
    for _ in 0..len {
        let mut next = vec![0u128; w + 1];
        for (j, &count) in dp.iter().enumerate() {
            if count == 0 {
                continue;
            }
            next[j] += count;
            for (c, &ways) in per_value.iter().enumerate().skip(1) {
                if ways > 0 && j + c <= w {
                    next[j + c] += count * ways;
                }
            }
        }
        dp = next;
    }
    dp
}

/// Assignment of minimum-Lee witnesses of P_4 to table cases. A witness
/// matches a row when its (zero-sum symbol, sorted nonzero finite values)
/// equals the row exactly, or, failing every exact match, equals a row
/// after global negation. Unclassifiable witnesses are reported, never
/// dropped.
#[derive(Debug, Clone)]
pub struct Classification {
    pub classified: Vec<(Codeword, u8)>,
    pub unclassified: Vec<Codeword>,
}

pub fn classify_min_lee(code: &GehCode, witnesses: &[Codeword]) -> Result<Classification> {
    if code.params().q() != 4 {
        return Err(Error::InvalidParam(
            "case classification is defined over GR(4, m)".into(),
        ));
    }
    let parity = if code.params().m() % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    };
    let rows: Vec<_> = CASE_TABLE.iter().filter(|d| d.parity == parity).collect();
    let signature = |w: &Codeword| -> (u64, Vec<u64>) {
        let mut values: Vec<u64> = w.entries()[1..]
            .iter()
            .copied()
            .filter(|&v| v != 0)
            .collect();
        values.sort_unstable();
        (w.entries()[0], values)
    };
    let mut classified = Vec::new();
    let mut unclassified = Vec::new();
    for w in witnesses {
        if w.is_zero() {
            return Err(Error::InvalidParam(
                "the zero word has no minimum-weight case".into(),
            ));
        }
        if !code.is_codeword(w)? {
            return Err(Error::NotACodeword);
        }
        let sig = signature(w);
        let direct = rows
            .iter()
            .find(|d| d.c_inf == sig.0 && d.finite_values == sig.1.as_slice());
        let hit = direct.or_else(|| {
            let neg = signature(&w.negated());
            rows.iter()
                .find(|d| d.c_inf == neg.0 && d.finite_values == neg.1.as_slice())
        });
        match hit {
            Some(d) => classified.push((w.clone(), d.case_id)),
            None => unclassified.push(w.clone()),
        }
    }
    Ok(Classification {
        classified,
        unclassified,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorem1,
    Theorem2,
    Theorem3,
    Theorem4,
    Lemmas,
    None,
}

impl Suite {
    fn includes(&self, s: Suite) -> bool {
        *self == Suite::All || *self == s
    }

    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorem1 => "theorem1",
            Suite::Theorem2 => "theorem2",
            Suite::Theorem3 => "theorem3",
            Suite::Theorem4 => "theorem4",
            Suite::Lemmas => "lemmas",
            Suite::None => "none",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(Suite::All),
            "theorem1" => Ok(Suite::Theorem1),
            "theorem2" => Ok(Suite::Theorem2),
            "theorem3" => Ok(Suite::Theorem3),
            "theorem4" => Ok(Suite::Theorem4),
            "lemmas" => Ok(Suite::Lemmas),
            "none" => Ok(Suite::None),
            _ => Err(Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub suite: Suite,
    pub max_m: u32,
    pub max_n: u32,
    pub budget: u64,
    pub workers: usize,
    pub seed: u64,
    pub timings: bool,
}

impl VerifyConfig {
    pub fn new(suite: Suite, max_m: u32, max_n: u32) -> Self {
        VerifyConfig {
            suite,
            max_m,
            max_n,
            budget: DEFAULT_BUDGET,
            workers: 1,
            seed: 0,
            timings: false,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyEntry {
    pub theorem: String,
    pub n: u32,
    pub m: u32,
    pub expected: Value,
    pub measured: Value,
    pub pass: bool,
    pub witnesses: Vec<Vec<u64>>,
    pub ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SkippedEntry {
    pub theorem: String,
    pub n: u32,
    pub m: u32,
    pub reason: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub entries: Vec<VerifyEntry>,
    pub skipped: Vec<SkippedEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }
}

const WITNESS_SAMPLE: usize = 4;

fn sample_witnesses(result: &MinWeightResult) -> Vec<Vec<u64>> {
    result
        .witnesses
        .iter()
        .take(WITNESS_SAMPLE)
        .map(|w| w.entries().to_vec())
        .collect()
}

/// Runs the selected verification suites over 3 <= m <= max_m and
/// 1 <= n <= max_n, budget-gated. Infeasible combinations are listed in
/// `skipped` rather than silently dropped; failures are report entries.
pub fn verify_theorems(cfg: &VerifyConfig) -> Result<VerifyReport> {
    if cfg.max_m < 2 {
        return Err(Error::InvalidParam("max_m must be >= 2".into()));
    }
    if cfg.max_n < 1 {
        return Err(Error::InvalidParam("max_n must be >= 1".into()));
    }
    let mut entries = Vec::new();
    let mut skipped = Vec::new();

    let push_entry = |entries: &mut Vec<VerifyEntry>,
                          theorem: &str,
                          n: u32,
                          m: u32,
                          expected: Value,
                          measured: Value,
                          pass: bool,
                          witnesses: Vec<Vec<u64>>,
                          started: Instant| {
        let ms = if cfg.timings {
            started.elapsed().as_millis() as u64
        } else {
            0
        };
        entries.push(VerifyEntry {
            theorem: theorem.into(),
            n,
            m,
            expected,
            measured,
            pass,
            witnesses,
            ms,
        });
    };

    let code_for = |n: u32, m: u32| GehCode::from_params(n, m);

    // Theorem 1: the encoder image has exactly q^k members, all of them
    // codewords with the information symbols readable off the systematic
    // coordinates.
    if cfg.suite.includes(Suite::Theorem1) {
        for m in 3..=cfg.max_m {
            for n in 1..=cfg.max_n {
                let started = Instant::now();
                let code = match code_for(n, m) {
                    Ok(c) => c,
                    Err(e) => {
                        skipped.push(SkippedEntry {
                            theorem: "theorem1".into(),
                            n,
                            m,
                            reason: e.to_string(),
                        });
                        continue;
                    }
                };
                let total = codeword_count(&code).filter(|&t| t <= cfg.budget as u128);
                let Some(total) = total else {
                    skipped.push(SkippedEntry {
                        theorem: "theorem1".into(),
                        n,
                        m,
                        reason: "budget".into(),
                    });
                    continue;
                };
                let q = code.params().q();
                let k = code.num_info();
                let msize = code.params().m() as usize;
                let mut valid: u128 = 0;
                let mut word = Vec::new();
                for idx in 0..total {
                    let info = info_from_index(q, k, idx);
                    code.encode_into(&info, &mut word);
                    let (s0, s1) = code.syndrome_slice(&word);
                    let systematic = word[1 + msize..] == info[..];
                    if s0 == 0 && s1.is_zero() && systematic {
                        valid += 1;
                    }
                }
                push_entry(
                    &mut entries,
                    "theorem1",
                    n,
                    m,
                    json!(total as u64),
                    json!(valid as u64),
                    valid == total,
                    Vec::new(),
                    started,
                );
            }
        }
    }

    // Theorem 2: minimum Hamming weight 4 at every level.
    if cfg.suite.includes(Suite::Theorem2) {
        for m in 3..=cfg.max_m {
            for n in 1..=cfg.max_n {
                min_weight_entry(
                    cfg,
                    &mut entries,
                    &mut skipped,
                    "theorem2",
                    n,
                    m,
                    Metric::Hamming,
                    4,
                    false,
                )?;
            }
        }
    }

    // Theorem 3: minimum Lee weight of P_4 (6 for odd m, 4 for even m),
    // with every witness classified into the tables.
    if cfg.suite.includes(Suite::Theorem3) && cfg.max_n >= 2 {
        for m in 3..=cfg.max_m {
            let expected = if m % 2 == 1 { 6 } else { 4 };
            min_weight_entry(
                cfg,
                &mut entries,
                &mut skipped,
                "theorem3",
                2,
                m,
                Metric::Lee,
                expected,
                true,
            )?;
        }
    }

    // Theorem 4: minimum Lee weight of P_8 is 6.
    if cfg.suite.includes(Suite::Theorem4) && cfg.max_n >= 3 {
        for m in 3..=cfg.max_m {
            min_weight_entry(
                cfg,
                &mut entries,
                &mut skipped,
                "theorem4",
                3,
                m,
                Metric::Lee,
                6,
                false,
            )?;
        }
    }

    if cfg.suite.includes(Suite::Lemmas) {
        lemma_mu_entries(cfg, &mut entries, &mut skipped)?;
        lemma_gamma_entries(cfg, &mut entries, &mut skipped)?;
    }

    Ok(VerifyReport {
        suite: cfg.suite.name().into(),
        entries,
        skipped,
    })
}

#[allow(clippy::too_many_arguments)]
fn min_weight_entry(
    cfg: &VerifyConfig,
    entries: &mut Vec<VerifyEntry>,
    skipped: &mut Vec<SkippedEntry>,
    theorem: &str,
    n: u32,
    m: u32,
    metric: Metric,
    expected: u64,
    classify: bool,
) -> Result<()> {
    let started = Instant::now();
    let code = match GehCode::from_params(n, m) {
        Ok(c) => c,
        Err(e) => {
            skipped.push(SkippedEntry {
                theorem: theorem.into(),
                n,
                m,
                reason: e.to_string(),
            });
            return Ok(());
        }
    };
    let mut spec = SearchSpec::new(&code, metric, Mode::Exhaustive);
    spec.budget = cfg.budget;
    spec.workers = cfg.workers;
    let exhaustive_fits = codeword_count(&code).is_some_and(|t| t <= cfg.budget as u128);
    let result = if exhaustive_fits {
        min_weight_search(&spec)?
    } else {
        spec.mode = Mode::Bounded;
        spec.bound = Some(expected);
        let bounded_fits =
            count_words_up_to(metric, code.params().q(), code.length(), expected)
                .saturating_sub(1)
                <= cfg.budget as u128;
        if !bounded_fits {
            skipped.push(SkippedEntry {
                theorem: theorem.into(),
                n,
                m,
                reason: "budget".into(),
            });
            return Ok(());
        }
        min_weight_search(&spec)?
    };
    let pass = result.min_weight == MinWeight::Exact(expected);
    let witnesses = sample_witnesses(&result);
    let ms = if cfg.timings {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    entries.push(VerifyEntry {
        theorem: theorem.into(),
        n,
        m,
        expected: json!(expected),
        measured: result.min_weight.to_value(),
        pass,
        witnesses,
        ms,
    });

    if classify && pass {
        let started = Instant::now();
        let classification = classify_min_lee(&code, &result.witnesses)?;
        let unclassified = classification.unclassified.len();
        let ms = if cfg.timings {
            started.elapsed().as_millis() as u64
        } else {
            0
        };
        entries.push(VerifyEntry {
            theorem: format!("{theorem}_cases"),
            n,
            m,
            expected: json!(0),
            measured: json!(unclassified),
            pass: unclassified == 0,
            witnesses: classification
                .unclassified
                .iter()
                .take(WITNESS_SAMPLE)
                .map(|w| w.entries().to_vec())
                .collect(),
            ms,
        });
    }
    Ok(())
}

/// Lee weights never increase under the halving map, and the image of P_q
/// is all of P_{q/2}.
fn lemma_mu_entries(
    cfg: &VerifyConfig,
    entries: &mut Vec<VerifyEntry>,
    skipped: &mut Vec<SkippedEntry>,
) -> Result<()> {
    for m in 3..=cfg.max_m {
        for n in 2..=cfg.max_n {
            let started = Instant::now();
            let code = match GehCode::from_params(n, m) {
                Ok(c) => c,
                Err(e) => {
                    skipped.push(SkippedEntry {
                        theorem: "lemma_mu".into(),
                        n,
                        m,
                        reason: e.to_string(),
                    });
                    continue;
                }
            };
            let lower = GehCode::new(code.params().lower()?);
            let total = codeword_count(&code).filter(|&t| t <= cfg.budget as u128);
            if let Some(_total) = total {
                // exhaustive monotonicity plus image equality
                let mut violations = 0u64;
                let mut image: std::collections::HashSet<Vec<u64>> =
                    std::collections::HashSet::new();
                let mut non_members = 0u64;
                for word in enumerate_codewords(&code, cfg.budget)? {
                    let proj = code.mu_project(&word)?;
                    if proj.weight().lee > word.weight().lee {
                        violations += 1;
                    }
                    if !lower.is_codeword(&proj)? {
                        non_members += 1;
                    }
                    image.insert(proj.entries().to_vec());
                }
                push_plain_entry(
                    cfg,
                    entries,
                    "lemma_mu",
                    n,
                    m,
                    json!(0),
                    json!(violations),
                    violations == 0,
                    started,
                );
                let started_img = Instant::now();
                let lower_total = codeword_count(&lower).unwrap_or(u128::MAX);
                let surjective = image.len() as u128 == lower_total && non_members == 0;
                push_plain_entry(
                    cfg,
                    entries,
                    "lemma_mu_image",
                    n,
                    m,
                    json!(lower_total as u64),
                    json!(image.len() as u64),
                    surjective,
                    started_img,
                );
            } else {
                // seeded random sampling through the encoder
                const SAMPLES: u64 = 10_000;
                let q = code.params().q();
                let k = code.num_info();
                let mut rng = ChaCha8Rng::seed_from_u64(
                    cfg.seed ^ ((m as u64) << 32) ^ ((n as u64) << 16),
                );
                let mut violations = 0u64;
                for _ in 0..SAMPLES {
                    let info: Vec<u64> = (0..k).map(|_| rng.random_range(0..q)).collect();
                    let word = code.encode(&info)?;
                    let proj = code.mu_project(&word)?;
                    if proj.weight().lee > word.weight().lee {
                        violations += 1;
                    }
                }
                push_plain_entry(
                    cfg,
                    entries,
                    "lemma_mu_sampled",
                    n,
                    m,
                    json!(0),
                    json!(violations),
                    violations == 0,
                    started,
                );
            }
        }
    }
    Ok(())
}

/// Power-dependency items over GR(4, m), parity- and budget-gated to the
/// ranges they hold in: items 1-2 for m in 2..=6, item 3 for m in 3..=5,
/// item 4 for odd m in 3..=5.
fn lemma_gamma_entries(
    cfg: &VerifyConfig,
    entries: &mut Vec<VerifyEntry>,
    _skipped: &mut Vec<SkippedEntry>,
) -> Result<()> {
    if cfg.max_n < 2 {
        return Ok(());
    }
    for item in 1u8..=4 {
        let cap = if item <= 2 { 6 } else { 5 };
        for m in 2..=cfg.max_m.min(cap) {
            if (item == 3 || item == 4) && m < 3 {
                continue;
            }
            if item == 4 && m % 2 == 0 {
                continue;
            }
            let started = Instant::now();
            let params = crate::ring::RingParams::new(2, m)?;
            let report = check_gamma_dependencies(&params, item)?;
            push_plain_entry(
                cfg,
                entries,
                &format!("lemma_gamma_item{item}"),
                2,
                m,
                json!(0),
                json!(report.counterexamples.len()),
                report.holds,
                started,
            );
            if let Some(last) = entries.last_mut() {
                last.witnesses = report
                    .counterexamples
                    .iter()
                    .take(WITNESS_SAMPLE)
                    .cloned()
                    .collect();
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn push_plain_entry(
    cfg: &VerifyConfig,
    entries: &mut Vec<VerifyEntry>,
    theorem: &str,
    n: u32,
    m: u32,
    expected: Value,
    measured: Value,
    pass: bool,
    started: Instant,
) {
    let ms = if cfg.timings {
        started.elapsed().as_millis() as u64
    } else {
        0
    };
    entries.push(VerifyEntry {
        theorem: theorem.into(),
        n,
        m,
        expected,
        measured,
        pass,
        witnesses: Vec::new(),
        ms,
    });
}

/// Distinct-member check used by tests at small scale: the encoder image
/// as a set, keyed by entries.
pub fn collect_codeword_set(code: &GehCode, budget: u64) -> Result<HashMap<Vec<u64>, ()>> {
    let mut set = HashMap::new();
    for w in enumerate_codewords(code, budget)? {
        set.insert(w.entries().to_vec(), ());
    }
    Ok(set)
}
