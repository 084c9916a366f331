//! Primitive binary polynomials and their lifts to Z_{2^n}.
//!
//! A primitive polynomial h2 over F_2 of degree m has a unique monic lift
//! hq over Z_{2^n} that divides X^N - 1, where N = 2^m - 1. The lift is
//! computed by iterated Graeffe steps: write h(x) = e(x^2) + x d(x^2) and
//! pass to +/-(e(y)^2 - y d(y)^2), doubling the working modulus each step.
//! One step gains one bit of 2-adic precision because the target polynomial
//! is a fixed point of the root-squaring map (squaring permutes the
//! conjugate roots xi^(2^i)).

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::{Error, Result};

/// Largest supported lift level. Keeps coefficient arithmetic inside u64.
pub const MAX_LEVEL: u32 = 30;

/// Built-in primitive polynomials over F_2, constant term first.
const DEFAULT_H2: &[(u32, &[u8])] = &[
    (2, &[1, 1, 1]),
    (3, &[1, 0, 1, 1]),
    (4, &[1, 1, 0, 0, 1]),
    (5, &[1, 0, 1, 0, 0, 1]),
    (6, &[1, 1, 0, 0, 0, 0, 1]),
    (7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (8, &[1, 0, 1, 1, 1, 0, 0, 0, 1]),
];

/// A primitive polynomial over F_2, constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryPolynomial {
    coeffs: Vec<u8>,
}

impl BinaryPolynomial {
    /// Validates that `coeffs` (constant term first, bits) is monic with
    /// constant term 1 and that its root has multiplicative order exactly
    /// 2^m - 1.
    pub fn new(coeffs: Vec<u8>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidParam(
                "binary polynomial needs degree >= 1".into(),
            ));
        }
        if coeffs.len() > 33 {
            return Err(Error::InvalidParam(
                "binary polynomial degree above 32 is not supported".into(),
            ));
        }
        if coeffs.iter().any(|&c| c > 1) {
            return Err(Error::InvalidParam(
                "binary polynomial coefficients must be bits".into(),
            ));
        }
        if *coeffs.last().unwrap() != 1 || coeffs[0] != 1 {
            return Err(Error::NotMonic);
        }
        let p = Self { coeffs };
        p.check_primitive()?;
        Ok(p)
    }

    /// The built-in default primitive polynomial of degree `m`.
    pub fn default_for(m: u32) -> Result<Self> {
        let entry = DEFAULT_H2
            .iter()
            .find(|&&(deg, _)| deg == m)
            .ok_or_else(|| {
                Error::InvalidParam(format!(
                    "no built-in primitive polynomial for m = {m}; supply h2 explicitly"
                ))
            })?;
        Self::new(entry.1.to_vec())
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Bitmask form: bit i is the coefficient of x^i.
    fn as_mask(&self) -> u64 {
        self.coeffs
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &c)| acc | ((c as u64) << i))
    }

    /// Power iteration: the residue class of x must have order exactly
    /// 2^m - 1 in F_2[x]/(h). That forces h irreducible and primitive.
    fn check_primitive(&self) -> Result<()> {
        let m = self.degree();
        let n = (1u64 << m) - 1;
        let h = self.as_mask();
        let mut cur = 1u64; // x^0
        for j in 1..=n {
            // multiply by x, reduce by h (clears bit m when it appears)
            cur <<= 1;
            if (cur >> m) & 1 == 1 {
                cur ^= h;
            }
            if cur == 1 {
                if j == n {
                    return Ok(());
                }
                return Err(Error::NotPrimitive {
                    found: j,
                    expected: n,
                });
            }
        }
        Err(Error::NotPrimitive {
            found: 0,
            expected: n,
        })
    }
}

/// A monic lift of a primitive binary polynomial to Z_{2^n}, constant term
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftedPolynomial {
    coeffs: Vec<u64>,
    n: u32,
}

impl LiftedPolynomial {
    /// Wraps pre-lifted coefficients, validating every invariant: monic,
    /// reduction mod 2 primitive, and divisibility of X^N - 1.
    pub fn from_coeffs(n: u32, coeffs: Vec<u64>) -> Result<Self> {
        check_level(n)?;
        let q = 1u64 << n;
        if coeffs.len() < 2 {
            return Err(Error::InvalidParam("lift needs degree >= 1".into()));
        }
        if coeffs.iter().any(|&c| c >= q) {
            return Err(Error::InvalidParam(format!(
                "coefficient out of range for modulus {q}"
            )));
        }
        if *coeffs.last().unwrap() != 1 {
            return Err(Error::NotMonic);
        }
        let p = Self { coeffs, n };
        // mod-2 reduction must be primitive; this also checks the constant term
        let h2 = p.to_binary()?;
        let m = h2.degree();
        if !p.divides_x_order_minus_1() {
            return Err(Error::InvalidParam(format!(
                "polynomial does not divide X^{} - 1 over Z_{q}",
                (1u64 << m) - 1
            )));
        }
        Ok(p)
    }

    pub fn level(&self) -> u32 {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        1u64 << self.n
    }

    pub fn degree(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Reduction mod 2^n2, the lift at a lower level of the same tower.
    pub fn reduce_to(&self, n2: u32) -> Result<LiftedPolynomial> {
        if n2 == 0 || n2 > self.n {
            return Err(Error::InvalidParam(format!(
                "cannot reduce level {} lift to level {n2}",
                self.n
            )));
        }
        let q2 = 1u64 << n2;
        Ok(LiftedPolynomial {
            coeffs: self.coeffs.iter().map(|&c| c & (q2 - 1)).collect(),
            n: n2,
        })
    }

    /// The mod-2 source polynomial (validated primitive).
    pub fn to_binary(&self) -> Result<BinaryPolynomial> {
        BinaryPolynomial::new(self.coeffs.iter().map(|&c| (c & 1) as u8).collect())
    }

    /// True when the polynomial divides X^N - 1 with N = 2^degree - 1.
    pub fn divides_x_order_minus_1(&self) -> bool {
        let m = self.degree();
        let q = self.modulus();
        let n = (1u64 << m) - 1;
        // X^N - 1, constant term first
        let mut dividend = vec![0u64; n as usize + 1];
        dividend[0] = q - 1;
        dividend[n as usize] = 1;
        let (_, rem) = poly_div_rem(&dividend, &self.coeffs, q);
        rem.iter().all(|&c| c == 0)
    }
}

fn check_level(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParam("level n must be >= 1".into()));
    }
    if n > MAX_LEVEL {
        return Err(Error::InvalidParam(format!(
            "level n must be <= {MAX_LEVEL}"
        )));
    }
    Ok(())
}

/// Lifts a primitive binary polynomial to the unique monic divisor of
/// X^N - 1 over Z_{2^n} that reduces to it mod 2.
pub fn lift_primitive(h2: &BinaryPolynomial, n: u32) -> Result<LiftedPolynomial> {
    check_level(n)?;
    let m = h2.degree() as usize;
    let mut cur: Vec<u64> = h2.coeffs().iter().map(|&b| b as u64).collect();
    for level in 2..=n {
        let q = 1u64 << level;
        // split into even and odd parts: cur(x) = e(x^2) + x d(x^2)
        let e: Vec<u64> = cur.iter().copied().step_by(2).collect();
        let d: Vec<u64> = cur.iter().copied().skip(1).step_by(2).collect();
        let e2 = poly_mul(&e, &e, q);
        let d2 = poly_mul(&d, &d, q);
        // g(y) = e(y)^2 - y d(y)^2
        let mut g = vec![0u64; m + 1];
        for (i, &c) in e2.iter().enumerate() {
            g[i] = (g[i] + c) % q;
        }
        for (i, &c) in d2.iter().enumerate() {
            g[i + 1] = (g[i + 1] + q - c) % q;
        }
        // keep the result monic
        if g[m] == q - 1 {
            for c in g.iter_mut() {
                *c = (q - *c) % q;
            }
        }
        debug_assert_eq!(g[m], 1, "Graeffe step lost monicity");
        cur = g;
    }
    Ok(LiftedPolynomial { coeffs: cur, n })
}

/// Schoolbook product over Z_q, constant term first.
fn poly_mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let prod = (x as u128 * y as u128) % q as u128;
            out[i + j] = ((out[i + j] as u128 + prod) % q as u128) as u64;
        }
    }
    out
}

/// Long division by a monic divisor over Z_q. Returns (quotient, remainder).
pub(crate) fn poly_div_rem(dividend: &[u64], divisor: &[u64], q: u64) -> (Vec<u64>, Vec<u64>) {
    let dm = divisor.len() - 1;
    assert_eq!(divisor[dm], 1, "divisor must be monic");
    let mut rem: Vec<u64> = dividend.to_vec();
    if rem.len() <= dm {
        return (Vec::new(), rem);
    }
    let mut quot = vec![0u64; rem.len() - dm];
    for i in (dm..rem.len()).rev() {
        let c = rem[i];
        if c == 0 {
            continue;
        }
        quot[i - dm] = c;
        for (j, &dcoeff) in divisor.iter().enumerate() {
            let sub = (c as u128 * dcoeff as u128) % q as u128;
            let idx = i - dm + j;
            rem[idx] = ((rem[idx] as u128 + q as u128 - sub) % q as u128) as u64;
        }
    }
    rem.truncate(dm);
    (quot, rem)
}

/// A table of polynomials keyed by (m, n), one record per line:
/// `m n c0 c1 ... cm`, coefficients constant term first in decimal.
/// Rows with n = 1 supply binary polynomials; rows with n > 1 supply
/// pre-lifted ones.
#[derive(Debug, Clone, Default)]
pub struct PolyTable {
    entries: BTreeMap<(u32, u32), Vec<u64>>,
}

impl PolyTable {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<u64> = line
                .split_whitespace()
                .map(|f| {
                    f.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("line {}: bad field {f:?}", lineno + 1)))
                })
                .collect::<Result<_>>()?;
            if fields.len() < 4 {
                return Err(Error::Parse(format!(
                    "line {}: expected `m n c0 ... cm`",
                    lineno + 1
                )));
            }
            let m = fields[0] as u32;
            let n = fields[1] as u32;
            let coeffs = fields[2..].to_vec();
            if coeffs.len() != m as usize + 1 {
                return Err(Error::Parse(format!(
                    "line {}: degree {m} needs {} coefficients, got {}",
                    lineno + 1,
                    m + 1,
                    coeffs.len()
                )));
            }
            entries.insert((m, n), coeffs);
        }
        Ok(Self { entries })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn get(&self, m: u32, n: u32) -> Option<&[u64]> {
        self.entries.get(&(m, n)).map(|v| v.as_slice())
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}
