//! Generalized extended Hamming codes over GR(2^n, m).
//!
//! The parity-check matrix P has m+1 rows and 2^m columns indexed
//! (inf, 0, 1, ..., N-1): row 0 is all ones, and below column inf the rows
//! hold the basis expansion of xi^i at column i. A word is a codeword when
//! both the plain coordinate sum (zero-sum check) and the xi-weighted sum
//! vanish. Columns 0..m-1 of the xi block form an identity block, so the
//! code encodes systematically with information symbols on coordinates
//! m..N-1 and checks on (inf, 0, ..., m-1).

use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::{RingElement, RingParams};

/// A length-2^m word of residues mod q, indexed (inf, 0, 1, ..., N-1).
/// The weight report is computed on first use and cached; the cache is
/// write-once so concurrent computation is benign.
#[derive(Debug)]
pub struct Codeword {
    q: u64,
    entries: Vec<u64>,
    weight: OnceLock<WeightReport>,
}

impl Codeword {
    pub fn new(q: u64, entries: Vec<u64>) -> Result<Self> {
        if entries.iter().any(|&e| e >= q) {
            return Err(Error::InvalidParam(format!(
                "entry out of range for q = {q}"
            )));
        }
        Ok(Self {
            q,
            entries,
            weight: OnceLock::new(),
        })
    }

    /// Parses the comma-separated text form, zero-sum symbol first,
    /// e.g. `7,1,1,6,0,0,1,0`.
    pub fn parse(q: u64, text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(|f| {
                f.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad codeword entry {f:?}")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Self::new(q, entries)
    }

    pub fn to_csv(&self) -> String {
        self.entries
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Hamming weight, Lee weight, and the value profile, cached.
    pub fn weight(&self) -> &WeightReport {
        self.weight
            .get_or_init(|| WeightReport::compute(self.q, &self.entries))
    }

    /// Entrywise negation mod q; a code automorphism.
    pub fn negated(&self) -> Codeword {
        Codeword {
            q: self.q,
            entries: self.entries.iter().map(|&e| (self.q - e) % self.q).collect(),
            weight: OnceLock::new(),
        }
    }

    /// Cyclic shift i -> i + s mod N of the finite coordinates, fixing the
    /// zero-sum coordinate; a code automorphism (it scales the xi-weighted
    /// sum by a unit).
    pub fn shifted(&self, s: u64) -> Codeword {
        let n = self.entries.len() - 1;
        let mut entries = vec![0u64; n + 1];
        entries[0] = self.entries[0];
        for i in 0..n {
            entries[1 + (i + s as usize) % n] = self.entries[1 + i];
        }
        Codeword {
            q: self.q,
            entries,
            weight: OnceLock::new(),
        }
    }
}

impl Clone for Codeword {
    fn clone(&self) -> Self {
        Codeword {
            q: self.q,
            entries: self.entries.clone(),
            weight: OnceLock::new(),
        }
    }
}

impl PartialEq for Codeword {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.entries == other.entries
    }
}

impl Eq for Codeword {}

impl std::hash::Hash for Codeword {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.q.hash(state);
        self.entries.hash(state);
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.q, &self.entries).cmp(&(other.q, &other.entries))
    }
}

/// Per-word weight summary: profile[i] counts entries equal to i.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightReport {
    pub hamming: u64,
    pub lee: u64,
    pub profile: Vec<u64>,
}

impl WeightReport {
    pub fn compute(q: u64, entries: &[u64]) -> Self {
        let mut profile = vec![0u64; q as usize];
        for &e in entries {
            profile[e as usize] += 1;
        }
        WeightReport {
            hamming: hamming_weight(entries),
            lee: lee_weight(q, entries),
            profile,
        }
    }
}

pub fn hamming_weight(entries: &[u64]) -> u64 {
    entries.iter().filter(|&&e| e != 0).count() as u64
}

pub fn lee_weight(q: u64, entries: &[u64]) -> u64 {
    entries.iter().map(|&e| e.min(q - e)).sum()
}

/// Membership/weight report in the stable JSON schema.
#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub n: u32,
    pub m: u32,
    pub word: Vec<u64>,
    pub member: bool,
    pub hamming: u64,
    pub lee: u64,
    pub profile: Vec<u64>,
}

/// A code instance: ring parameters plus the (m+1) x 2^m parity-check
/// matrix over Z_q. Immutable after construction.
#[derive(Debug, Clone)]
pub struct GehCode {
    params: RingParams,
    parity: Vec<Vec<u64>>,
}

impl GehCode {
    pub fn new(params: RingParams) -> Self {
        let m = params.m() as usize;
        let len = (params.order() + 1) as usize;
        let mut parity = vec![vec![0u64; len]; m + 1];
        parity[0] = vec![1u64; len];
        for i in 0..params.order() {
            let col = params.xi_pow(i as i64);
            for (r, &c) in col.coeffs().iter().enumerate() {
                parity[r + 1][1 + i as usize] = c;
            }
        }
        GehCode { params, parity }
    }

    /// Convenience constructor over the built-in polynomial table.
    pub fn from_params(n: u32, m: u32) -> Result<Self> {
        Ok(Self::new(RingParams::new(n, m)?))
    }

    pub fn params(&self) -> &RingParams {
        &self.params
    }

    /// Block length 2^m.
    pub fn length(&self) -> usize {
        (self.params.order() + 1) as usize
    }

    /// Information length k = 2^m - m - 1.
    pub fn num_info(&self) -> usize {
        self.params.k() as usize
    }

    pub fn parity_matrix(&self) -> &[Vec<u64>] {
        &self.parity
    }

    fn check_word<'a>(&self, word: &'a Codeword) -> Result<&'a Codeword> {
        if word.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: word.len(),
            });
        }
        if word.q() != self.params.q() {
            return Err(Error::InvalidParam(format!(
                "word has modulus {}, code has {}",
                word.q(),
                self.params.q()
            )));
        }
        Ok(word)
    }

    /// The pair of parity sums: the plain coordinate sum mod q and the
    /// xi-weighted sum over the finite coordinates.
    pub fn syndrome(&self, word: &Codeword) -> Result<(u64, RingElement)> {
        self.check_word(word)?;
        Ok(self.syndrome_slice(word.entries()))
    }

    pub(crate) fn syndrome_slice(&self, entries: &[u64]) -> (u64, RingElement) {
        let q = self.params.q();
        let m = self.params.m() as usize;
        let mut s0 = 0u64;
        let mut acc = vec![0u64; m];
        for (pos, &v) in entries.iter().enumerate() {
            if v == 0 {
                continue;
            }
            s0 = (s0 + v) % q;
            if pos >= 1 {
                let col = self.params.xi_pow(pos as i64 - 1);
                for (j, &c) in col.coeffs().iter().enumerate() {
                    acc[j] = (acc[j] + v * c) % q;
                }
            }
        }
        (s0, self.params.element(acc).expect("syndrome in range"))
    }

    pub fn is_codeword(&self, word: &Codeword) -> Result<bool> {
        let (s0, s1) = self.syndrome(word)?;
        Ok(s0 == 0 && s1.is_zero())
    }

    /// Systematic encoding: information symbols go verbatim on coordinates
    /// m..N-1, the identity block makes coordinates 0..m-1 a direct
    /// read-off of the negated weighted sum, and the zero-sum coordinate
    /// closes the first parity row.
    pub fn encode(&self, info: &[u64]) -> Result<Codeword> {
        if info.len() != self.num_info() {
            return Err(Error::LengthMismatch {
                expected: self.num_info(),
                got: info.len(),
            });
        }
        let q = self.params.q();
        if info.iter().any(|&v| v >= q) {
            return Err(Error::InvalidParam(format!(
                "information symbol out of range for q = {q}"
            )));
        }
        let mut entries = Vec::new();
        self.encode_into(info, &mut entries);
        Codeword::new(q, entries)
    }

    /// Buffer-reusing encoder for enumeration loops. The information word
    /// must already be validated (length k, symbols below q).
    pub fn encode_into(&self, info: &[u64], out: &mut Vec<u64>) {
        debug_assert_eq!(info.len(), self.num_info());
        debug_assert!(info.iter().all(|&v| v < self.params.q()));
        let q = self.params.q();
        let m = self.params.m() as usize;
        let len = self.length();
        out.clear();
        out.resize(len, 0);
        let mut t = vec![0u64; m];
        for (i, &v) in info.iter().enumerate() {
            if v == 0 {
                continue;
            }
            out[1 + m + i] = v;
            let col = self.params.xi_pow((m + i) as i64);
            for (j, &c) in col.coeffs().iter().enumerate() {
                t[j] = (t[j] + v * c) % q;
            }
        }
        for j in 0..m {
            out[1 + j] = (q - t[j]) % q;
        }
        let s: u64 = out[1..].iter().fold(0, |acc, &v| (acc + v) % q);
        out[0] = (q - s) % q;
    }

    /// Weight report for a word of this code (delegates to the word cache).
    pub fn weight<'a>(&self, word: &'a Codeword) -> Result<&'a WeightReport> {
        self.check_word(word)?;
        Ok(word.weight())
    }

    /// Entrywise doubling into P_{2q}; preserves Hamming weight and doubles
    /// Lee weight. The input must be a codeword at this level.
    pub fn double_embed(&self, word: &Codeword) -> Result<Codeword> {
        if !self.is_codeword(word)? {
            return Err(Error::NotACodeword);
        }
        let q2 = self.params.q() * 2;
        Codeword::new(q2, word.entries().iter().map(|&e| (2 * e) % q2).collect())
    }

    /// Entrywise reduction mod q/2 into P_{q/2}; never increases Lee
    /// weight. The input must be a codeword at this level and n must be
    /// at least 2.
    pub fn mu_project(&self, word: &Codeword) -> Result<Codeword> {
        if self.params.n() < 2 {
            return Err(Error::InvalidParam(
                "mu projection requires n >= 2".into(),
            ));
        }
        if !self.is_codeword(word)? {
            return Err(Error::NotACodeword);
        }
        let half = self.params.q() / 2;
        Codeword::new(half, word.entries().iter().map(|&e| e % half).collect())
    }

    /// Membership/weight report in the stable JSON schema.
    pub fn check_report(&self, word: &Codeword) -> Result<CheckReport> {
        let member = self.is_codeword(word)?;
        let w = word.weight();
        Ok(CheckReport {
            n: self.params.n(),
            m: self.params.m(),
            word: word.entries().to_vec(),
            member,
            hamming: w.hamming,
            lee: w.lee,
            profile: w.profile.clone(),
        })
    }
}
