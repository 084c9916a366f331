//! Symbolic construction of minimum-weight codewords and exhaustive checks
//! of the power-dependency facts they rest on.
//!
//! Over the residue field, weight-4 and weight-6 extended-Hamming words come
//! from column sums of the parity-check matrix. Over GR(4, m) the twelve
//! minimum-Lee-weight shapes (ten for odd m, two for even m) pin down the
//! zero-sum symbol and the multiset of nonzero values; the doubled
//! coordinate, when present, is read off the 2-adic digits of the support
//! sum. Over GR(8, m) the same supports lift to Lee-weight-6 words.

use crate::code::{Codeword, GehCode};
use crate::error::{Error, Result};
use crate::ring::{RingElement, RingParams};

/// Discrete log base xi of a nonzero Teichmuller element, via the table
/// built at ring construction.
pub fn discrete_log(params: &RingParams, x: &RingElement) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::NotTeichmuller);
    }
    params.teich_log(x).ok_or(Error::NotTeichmuller)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// One row of the minimum-Lee-weight tables for P_4: the zero-sum symbol
/// and the sorted multiset of nonzero finite values (residues mod 4).
/// Cases 1..10 apply to odd m, cases 11..12 to even m.
#[derive(Debug, Clone, Copy)]
pub struct CaseDescriptor {
    pub case_id: u8,
    pub c_inf: u64,
    pub finite_values: &'static [u64],
    pub parity: Parity,
}

pub const CASE_TABLE: [CaseDescriptor; 12] = [
    CaseDescriptor { case_id: 1, c_inf: 3, finite_values: &[1, 1, 1, 2], parity: Parity::Odd },
    CaseDescriptor { case_id: 2, c_inf: 1, finite_values: &[1, 1, 2, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 3, c_inf: 2, finite_values: &[1, 1, 1, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 4, c_inf: 0, finite_values: &[1, 1, 1, 2, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 5, c_inf: 0, finite_values: &[1, 1, 1, 1, 1, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 6, c_inf: 0, finite_values: &[1, 1, 1, 3, 3, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 7, c_inf: 3, finite_values: &[1, 1, 1, 1, 1], parity: Parity::Odd },
    CaseDescriptor { case_id: 8, c_inf: 1, finite_values: &[1, 1, 1, 1, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 9, c_inf: 3, finite_values: &[1, 1, 1, 3, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 10, c_inf: 1, finite_values: &[1, 1, 3, 3, 3], parity: Parity::Odd },
    CaseDescriptor { case_id: 11, c_inf: 1, finite_values: &[1, 1, 1], parity: Parity::Even },
    CaseDescriptor { case_id: 12, c_inf: 0, finite_values: &[1, 1, 1, 1], parity: Parity::Even },
];

pub fn case_descriptor(case_id: u8) -> Result<&'static CaseDescriptor> {
    CASE_TABLE
        .iter()
        .find(|d| d.case_id == case_id)
        .ok_or_else(|| Error::InvalidParam(format!("no such case: {case_id}")))
}

/// Places values at (coordinate, value) pairs, sets the zero-sum symbol,
/// and verifies membership. Colliding coordinates are rejected.
fn build_word(code: &GehCode, c_inf: u64, placements: &[(u64, u64)]) -> Result<Codeword> {
    let mut entries = vec![0u64; code.length()];
    entries[0] = c_inf;
    for &(coord, val) in placements {
        let idx = 1 + coord as usize;
        if idx >= entries.len() {
            return Err(Error::InvalidParam(format!("coordinate {coord} out of range")));
        }
        if entries[idx] != 0 {
            return Err(Error::DegenerateSupport(format!(
                "support coordinates collide at {coord}"
            )));
        }
        entries[idx] = val;
    }
    let word = Codeword::new(code.params().q(), entries)?;
    if !code.is_codeword(&word)? {
        return Err(Error::RelationNotSatisfied(
            "constructed word fails the parity check".into(),
        ));
    }
    Ok(word)
}

fn check_exponents(params: &RingParams, exps: &[u64], allow_zero: bool) -> Result<()> {
    let order = params.order();
    for &e in exps {
        if e >= order {
            return Err(Error::InvalidParam(format!(
                "exponent {e} out of range [0, {order})"
            )));
        }
        if e == 0 && !allow_zero {
            return Err(Error::InvalidParam(
                "exponent 0 collides with the fixed coordinate 0".into(),
            ));
        }
    }
    for (i, &a) in exps.iter().enumerate() {
        if exps[i + 1..].contains(&a) {
            return Err(Error::InvalidParam("exponents must be distinct".into()));
        }
    }
    Ok(())
}

/// Sum of signed powers: sum of sign * xi^exp.
fn signed_power_sum(params: &RingParams, terms: &[(i64, u64)]) -> RingElement {
    let mut acc = params.zero();
    for &(sign, exp) in terms {
        let p = params.xi_pow(exp as i64);
        acc = if sign >= 0 {
            params.add(&acc, &p)
        } else {
            params.sub(&acc, &p)
        };
    }
    acc
}

/// For z = 2 xi^c exactly, returns c; the element is required to sit in
/// 2R with a single nonzero 2-adic digit a_1.
fn doubled_coordinate(params: &RingParams, z: &RingElement) -> Result<u64> {
    if z.is_zero() {
        return Err(Error::DegenerateSupport(
            "support sum vanishes; no doubled coordinate exists".into(),
        ));
    }
    let digits = params.two_adic_decompose(z);
    let ds = digits.digits();
    if !ds[0].is_zero() {
        return Err(Error::RelationNotSatisfied(
            "support sum is a unit; the field relation fails".into(),
        ));
    }
    for d in &ds[2..] {
        if !d.is_zero() {
            return Err(Error::DegenerateSupport(
                "support sum is not twice a Teichmuller element".into(),
            ));
        }
    }
    discrete_log(params, &ds[1])
}

/// Binary extended-Hamming word of weight 4: ones at (inf, 0, 1, i) where
/// theta^i = 1 + theta.
pub fn hamming_weight4_word(code: &GehCode) -> Result<Codeword> {
    let params = code.params();
    if params.q() != 2 {
        return Err(Error::InvalidParam(
            "weight-4 construction is defined over the residue field (n = 1)".into(),
        ));
    }
    let target = params.add(&params.one(), &params.xi());
    let i = discrete_log(params, &target)
        .map_err(|_| Error::DegenerateSupport("1 + theta is not a power of theta".into()))?;
    build_word(code, 1, &[(0, 1), (1, 1), (i, 1)])
}

/// Binary extended-Hamming word of weight 6 (m >= 4): ones at
/// (inf, 0, 1, 2, 3, i) where theta^i = 1 + theta + theta^2 + theta^3.
pub fn hamming_weight6_word(code: &GehCode) -> Result<Codeword> {
    let params = code.params();
    if params.q() != 2 {
        return Err(Error::InvalidParam(
            "weight-6 construction is defined over the residue field (n = 1)".into(),
        ));
    }
    if params.m() < 4 {
        return Err(Error::InvalidParam(
            "weight-6 construction requires m >= 4".into(),
        ));
    }
    let target = signed_power_sum(params, &[(1, 0), (1, 1), (1, 2), (1, 3)]);
    let i = discrete_log(params, &target)
        .map_err(|_| Error::DegenerateSupport("column sum is not a power of theta".into()))?;
    build_word(code, 1, &[(0, 1), (1, 1), (2, 1), (3, 1), (i, 1)])
}

/// Builds the P_4 minimum-Lee-weight codeword of the given table case on
/// the supplied support exponents. Arities: cases 1-2 take (a, b); 3-4 take
/// (a, b, c); 7-10 take (a, b, c, d); 5-6 take (a, b, c, d, e); case 11
/// takes (t); case 12 takes four exponents that may include 0.
pub fn p4_case_word(code: &GehCode, case_id: u8, exps: &[u64]) -> Result<Codeword> {
    let params = code.params();
    if params.q() != 4 {
        return Err(Error::InvalidParam(
            "table cases are defined over GR(4, m)".into(),
        ));
    }
    let desc = case_descriptor(case_id)?;
    let m_parity = if params.m() % 2 == 1 { Parity::Odd } else { Parity::Even };
    if desc.parity != m_parity {
        return Err(Error::InvalidParam(format!(
            "case {case_id} requires {} extension degree",
            match desc.parity {
                Parity::Odd => "odd",
                Parity::Even => "even",
            }
        )));
    }

    let arity: usize = match case_id {
        1 | 2 => 2,
        3 | 4 => 3,
        7 | 8 | 9 | 10 => 4,
        5 | 6 => 5,
        11 => 1,
        12 => 4,
        _ => unreachable!(),
    };
    if exps.len() != arity {
        return Err(Error::LengthMismatch {
            expected: arity,
            got: exps.len(),
        });
    }
    check_exponents(params, exps, case_id == 12)?;

    let field = params.residue_field()?;
    let field_relation_holds = |terms: &[(i64, u64)]| -> bool {
        signed_power_sum(&field, terms).is_zero()
    };

    match case_id {
        1 | 2 => {
            let (a, b) = (exps[0], exps[1]);
            if !field_relation_holds(&[(1, 0), (1, a), (1, b)]) {
                return Err(Error::RelationNotSatisfied(format!(
                    "1 + theta^{a} + theta^{b} != 0 in the residue field"
                )));
            }
            if case_id == 1 {
                // 1 + gamma^a + gamma^b = 2 gamma^c
                let z = signed_power_sum(params, &[(1, 0), (1, a), (1, b)]);
                let c = doubled_coordinate(params, &z)?;
                build_word(code, 3, &[(0, 1), (a, 1), (b, 1), (c, 2)])
            } else {
                // -1 + gamma^a + gamma^b = 2 gamma^c
                let z = signed_power_sum(params, &[(-1, 0), (1, a), (1, b)]);
                let c = doubled_coordinate(params, &z)?;
                build_word(code, 1, &[(0, 3), (a, 1), (b, 1), (c, 2)])
            }
        }
        3 | 4 => {
            let (a, b, c) = (exps[0], exps[1], exps[2]);
            if !field_relation_holds(&[(1, 0), (1, a), (1, b), (1, c)]) {
                return Err(Error::RelationNotSatisfied(format!(
                    "1 + theta^{a} + theta^{b} + theta^{c} != 0 in the residue field"
                )));
            }
            let w = signed_power_sum(params, &[(-1, 0), (1, a), (1, b), (1, c)]);
            if case_id == 3 {
                if !w.is_zero() {
                    return Err(Error::RelationNotSatisfied(
                        "-1 + gamma^a + gamma^b + gamma^c != 0; support belongs to case 4".into(),
                    ));
                }
                build_word(code, 2, &[(0, 3), (a, 1), (b, 1), (c, 1)])
            } else {
                if w.is_zero() {
                    return Err(Error::RelationNotSatisfied(
                        "-1 + gamma^a + gamma^b + gamma^c = 0; support belongs to case 3".into(),
                    ));
                }
                let d = doubled_coordinate(params, &w)?;
                build_word(code, 0, &[(0, 3), (a, 1), (b, 1), (c, 1), (d, 2)])
            }
        }
        5 | 6 | 7 | 8 | 9 | 10 => {
            // fully determined rows; the exact relation is the parity check
            let (c_inf, values): (u64, Vec<u64>) = match case_id {
                5 => (0, vec![3, 1, 1, 1, 1, 1]),
                6 => (0, vec![3, 3, 3, 1, 1, 1]),
                7 => (3, vec![1, 1, 1, 1, 1]),
                8 => (1, vec![3, 1, 1, 1, 1]),
                9 => (3, vec![3, 3, 1, 1, 1]),
                10 => (1, vec![3, 3, 3, 1, 1]),
                _ => unreachable!(),
            };
            let mut placements = vec![(0u64, values[0])];
            placements.extend(exps.iter().zip(&values[1..]).map(|(&e, &v)| (e, v)));
            build_word(code, c_inf, &placements)
        }
        11 => {
            let t = exps[0];
            let order = params.order();
            if order % 3 != 0 || (3 * t) % order != 0 {
                return Err(Error::InvalidParam(format!(
                    "case 11 needs t with 3t = 0 mod {order}"
                )));
            }
            let t2 = (2 * t) % order;
            build_word(code, 1, &[(0, 1), (t, 1), (t2, 1)])
        }
        12 => {
            let placements: Vec<(u64, u64)> = exps.iter().map(|&e| (e, 1)).collect();
            build_word(code, 0, &placements)
        }
        _ => unreachable!(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum P8Variant {
    /// Lift of the case-1 support: (a, b) with 1 + theta^a + theta^b = 0.
    Odd,
    /// Lift of the case-11 support: (t) with t = N/3.
    Even,
}

/// Builds a Lee-weight-6 codeword of P_8 on the supplied support.
///
/// For the case-1 lift the doubled coordinate c comes from the 2-adic
/// digits of 1 + xi^a + xi^b; the sign of the +/-2 xi^c entry is settled by
/// constructing both candidates and keeping the one with zero syndrome.
pub fn p8_min_lee_word(code: &GehCode, variant: P8Variant, exps: &[u64]) -> Result<Codeword> {
    let params = code.params();
    if params.q() != 8 {
        return Err(Error::InvalidParam(
            "this construction is defined over GR(8, m)".into(),
        ));
    }
    match variant {
        P8Variant::Odd => {
            if exps.len() != 2 {
                return Err(Error::LengthMismatch {
                    expected: 2,
                    got: exps.len(),
                });
            }
            check_exponents(params, exps, false)?;
            let (a, b) = (exps[0], exps[1]);
            let field = params.residue_field()?;
            if !signed_power_sum(&field, &[(1, 0), (1, a), (1, b)]).is_zero() {
                return Err(Error::RelationNotSatisfied(format!(
                    "1 + theta^{a} + theta^{b} != 0 in the residue field"
                )));
            }
            let z = signed_power_sum(params, &[(1, 0), (1, a), (1, b)]);
            let c = doubled_coordinate(params, &z)?;
            if c == 0 || c == a || c == b {
                return Err(Error::DegenerateSupport(format!(
                    "doubled coordinate {c} collides with the support"
                )));
            }
            for (c_inf, c_val) in [(7u64, 6u64), (3, 2)] {
                if let Ok(word) = build_word(code, c_inf, &[(0, 1), (a, 1), (b, 1), (c, c_val)]) {
                    if word.weight().lee == 6 {
                        return Ok(word);
                    }
                }
            }
            Err(Error::DegenerateSupport(
                "no sign candidate yields a Lee-weight-6 codeword".into(),
            ))
        }
        P8Variant::Even => {
            if exps.len() != 1 {
                return Err(Error::LengthMismatch {
                    expected: 1,
                    got: exps.len(),
                });
            }
            let t = exps[0];
            let order = params.order();
            if order % 3 != 0 {
                return Err(Error::InvalidParam(
                    "the even-m construction needs 3 to divide 2^m - 1".into(),
                ));
            }
            if t == 0 || (3 * t) % order != 0 {
                return Err(Error::InvalidParam(format!(
                    "need t nonzero with 3t = 0 mod {order}"
                )));
            }
            let t2 = (2 * t) % order;
            let rel = signed_power_sum(params, &[(1, 0), (1, t), (1, t2)]);
            if !rel.is_zero() {
                return Err(Error::RelationNotSatisfied(
                    "1 + xi^t + xi^2t != 0".into(),
                ));
            }
            build_word(code, 5, &[(0, 1), (t, 1), (t2, 1)])
        }
    }
}

/// Outcome of an exhaustive dependency scan over powers of gamma.
#[derive(Debug, Clone)]
pub struct DependencyReport {
    pub item: u8,
    pub m: u32,
    pub holds: bool,
    /// Offending exponent tuples; for item 1 the tuple is (j, k, sign
    /// combination index).
    pub counterexamples: Vec<Vec<u64>>,
    pub tuples_checked: u64,
}

/// Exhaustively verifies one item of the power-dependency facts over
/// GR(4, m):
///   1. +/-gamma^j +/- gamma^k is invertible for 0 <= j < k < N (m >= 2);
///   2. gamma^j - gamma^k != +/-gamma^l for distinct j, k, l (m >= 2);
///   3. equal differences of powers force equal index pairs (m >= 3);
///   4. a vanishing sum of four powers forces equal indices (odd m >= 3).
pub fn check_gamma_dependencies(params: &RingParams, item: u8) -> Result<DependencyReport> {
    if params.q() != 4 {
        return Err(Error::InvalidParam(
            "dependency checks are defined over GR(4, m)".into(),
        ));
    }
    let m = params.m();
    if !(1..=4).contains(&item) {
        return Err(Error::InvalidParam(format!("no such item: {item}")));
    }
    if m > 6 {
        return Err(Error::InvalidParam(
            "exhaustive dependency checks are budgeted for m <= 6".into(),
        ));
    }
    if (item == 3 || item == 4) && m < 3 {
        return Err(Error::InvalidParam(format!("item {item} requires m >= 3")));
    }
    if item == 4 && m % 2 == 0 {
        return Err(Error::InvalidParam("item 4 requires odd m".into()));
    }
    Ok(scan_gamma_item(params, item))
}

/// Raw scan without precondition gating; used by the checker and, for the
/// parity restriction of item 4, to confirm that even m really does admit
/// counterexamples.
pub(crate) fn scan_gamma_item(params: &RingParams, item: u8) -> DependencyReport {
    let n = params.order();
    let mut counterexamples = Vec::new();
    let mut checked = 0u64;
    const CEX_CAP: usize = 64;
    match item {
        1 => {
            for j in 0..n {
                for k in (j + 1)..n {
                    for (combo, (sj, sk)) in
                        [(1i64, 1i64), (1, -1), (-1, 1), (-1, -1)].iter().enumerate()
                    {
                        checked += 1;
                        let x = signed_power_sum(params, &[(*sj, j), (*sk, k)]);
                        if !params.is_unit(&x) && counterexamples.len() < CEX_CAP {
                            counterexamples.push(vec![j, k, combo as u64]);
                        }
                    }
                }
            }
        }
        2 => {
            for j in 0..n {
                for k in 0..n {
                    if j == k {
                        continue;
                    }
                    let d = params.sub(&params.xi_pow(j as i64), &params.xi_pow(k as i64));
                    for cand in [d.clone(), params.neg(&d)] {
                        checked += 1;
                        if let Some(l) = params.teich_log(&cand) {
                            if l != j && l != k && counterexamples.len() < CEX_CAP {
                                counterexamples.push(vec![j, k, l]);
                            }
                        }
                    }
                }
            }
        }
        3 => {
            use std::collections::HashMap;
            let mut by_diff: HashMap<RingElement, Vec<(u64, u64)>> = HashMap::new();
            let mut pairs = 0u64;
            for i in 0..n {
                for j in 0..n {
                    if i == j {
                        continue;
                    }
                    pairs += 1;
                    let d = params.sub(&params.xi_pow(i as i64), &params.xi_pow(j as i64));
                    by_diff.entry(d).or_default().push((i, j));
                }
            }
            // every ordered pair is compared against every other pair
            checked = pairs * pairs;
            let mut groups: Vec<_> = by_diff.into_iter().collect();
            groups.sort_by(|a, b| a.1.cmp(&b.1));
            for (_, group) in groups {
                if group.len() > 1 {
                    for w in group.windows(2) {
                        if counterexamples.len() < CEX_CAP {
                            counterexamples.push(vec![w[0].0, w[0].1, w[1].0, w[1].1]);
                        }
                    }
                }
            }
        }
        4 => {
            for i in 0..n {
                for j in i..n {
                    for k in j..n {
                        for l in k..n {
                            checked += 1;
                            let all_equal = i == j && j == k && k == l;
                            if all_equal {
                                continue;
                            }
                            let s = signed_power_sum(
                                params,
                                &[(1, i), (1, j), (1, k), (1, l)],
                            );
                            if s.is_zero() && counterexamples.len() < CEX_CAP {
                                counterexamples.push(vec![i, j, k, l]);
                            }
                        }
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    DependencyReport {
        item,
        m: params.m(),
        holds: counterexamples.is_empty(),
        counterexamples,
        tuples_checked: checked,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn discrete_log_examples() {
        let field = RingParams::new(1, 3).unwrap();
        assert_eq!(discrete_log(&field, &field.one()).unwrap(), 0);
        assert_eq!(discrete_log(&field, &field.xi()).unwrap(), 1);
        // 1 + theta + theta^5 = 0, so 1 + theta = theta^5
        let x = field.add(&field.one(), &field.xi());
        assert_eq!(discrete_log(&field, &x).unwrap(), 5);
        assert!(discrete_log(&field, &field.zero()).is_err());
        let r8 = RingParams::new(3, 3).unwrap();
        let not_teich = r8.scalar(3);
        assert!(discrete_log(&r8, &not_teich).is_err());
    }

    #[test]
    fn weight4_word_m3() {
        let code = GehCode::from_params(1, 3).unwrap();
        let w = hamming_weight4_word(&code).unwrap();
        assert_eq!(w.entries(), &[1, 1, 1, 0, 0, 0, 1, 0]);
        assert!(code.is_codeword(&w).unwrap());
        assert_eq!(w.weight().hamming, 4);
    }

    #[test]
    fn weight4_word_m4() {
        let code = GehCode::from_params(1, 4).unwrap();
        let params = code.params();
        // theta^4 = theta + 1 for the default degree-4 polynomial
        let target = params.add(&params.one(), &params.xi());
        assert_eq!(params.xi_pow(4), target);
        let w = hamming_weight4_word(&code).unwrap();
        let support: Vec<usize> = (0..w.len()).filter(|&i| w.entries()[i] != 0).collect();
        assert_eq!(support, vec![0, 1, 2, 5]); // inf, 0, 1, 4
        assert!(code.is_codeword(&w).unwrap());
    }

    #[test]
    fn weight6_word_m4() {
        let code = GehCode::from_params(1, 4).unwrap();
        let params = code.params();
        // power-table oracle: 1 + theta + theta^2 + theta^3 = theta^12
        let target = signed_power_sum(params, &[(1, 0), (1, 1), (1, 2), (1, 3)]);
        assert_eq!(params.xi_pow(12), target);
        let w = hamming_weight6_word(&code).unwrap();
        let support: Vec<usize> = (0..w.len()).filter(|&i| w.entries()[i] != 0).collect();
        assert_eq!(support, vec![0, 1, 2, 3, 4, 13]); // inf, 0, 1, 2, 3, 12
        assert!(code.is_codeword(&w).unwrap());
        assert_eq!(w.weight().hamming, 6);
    }

    #[test]
    fn weight6_word_requires_m4() {
        let code = GehCode::from_params(1, 3).unwrap();
        assert!(matches!(
            hamming_weight6_word(&code),
            Err(Error::InvalidParam(_))
        ));
    }

    #[test]
    fn p4_case1_example() {
        let code = GehCode::from_params(2, 3).unwrap();
        let w = p4_case_word(&code, 1, &[1, 5]).unwrap();
        assert_eq!(w.entries(), &[3, 1, 1, 2, 0, 0, 1, 0]);
        assert_eq!(w.weight().lee, 6);
    }

    #[test]
    fn p4_case11_example() {
        let code = GehCode::from_params(2, 4).unwrap();
        let w = p4_case_word(&code, 11, &[5]).unwrap();
        assert_eq!(
            w.entries(),
            &[1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]
        );
        assert_eq!(w.weight().lee, 4);
    }

    #[test]
    fn p4_case12_support_found_by_search() {
        let code = GehCode::from_params(2, 4).unwrap();
        let params = code.params();
        let n = params.order();
        let mut found = None;
        'outer: for a in 0..n {
            for b in (a + 1)..n {
                for c in (b + 1)..n {
                    for d in (c + 1)..n {
                        let s = signed_power_sum(params, &[(1, a), (1, b), (1, c), (1, d)]);
                        if s.is_zero() {
                            found = Some([a, b, c, d]);
                            break 'outer;
                        }
                    }
                }
            }
        }
        let exps = found.expect("even m admits a vanishing 4-power sum");
        let w = p4_case_word(&code, 12, &exps).unwrap();
        assert_eq!(w.entries()[0], 0);
        assert_eq!(w.weight().lee, 4);
        assert_eq!(w.weight().hamming, 4);
    }

    #[test]
    fn p4_case_errors() {
        let code3 = GehCode::from_params(2, 3).unwrap();
        // relation not satisfied: 1 + theta + theta^2 != 0
        assert!(matches!(
            p4_case_word(&code3, 1, &[1, 2]),
            Err(Error::RelationNotSatisfied(_))
        ));
        // parity gate
        assert!(matches!(
            p4_case_word(&code3, 11, &[2]),
            Err(Error::InvalidParam(_))
        ));
        let code4 = GehCode::from_params(2, 4).unwrap();
        assert!(matches!(
            p4_case_word(&code4, 1, &[1, 4]),
            Err(Error::InvalidParam(_))
        ));
        // unknown case, wrong arity, wrong ring level
        assert!(p4_case_word(&code3, 13, &[1, 5]).is_err());
        assert!(matches!(
            p4_case_word(&code3, 1, &[1]),
            Err(Error::LengthMismatch { .. })
        ));
        let code8 = GehCode::from_params(3, 3).unwrap();
        assert!(p4_case_word(&code8, 1, &[1, 5]).is_err());
    }

    #[test]
    fn p4_cases_3_and_4_branch() {
        let code = GehCode::from_params(2, 3).unwrap();
        let params = code.params();
        let field = params.residue_field().unwrap();
        let n = params.order();
        let mut case3 = 0;
        let mut case4 = 0;
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    if a == b || a == c || b == c {
                        continue;
                    }
                    if !signed_power_sum(&field, &[(1, 0), (1, a), (1, b), (1, c)]).is_zero() {
                        continue;
                    }
                    let w = signed_power_sum(params, &[(-1, 0), (1, a), (1, b), (1, c)]);
                    if w.is_zero() {
                        let word = p4_case_word(&code, 3, &[a, b, c]).unwrap();
                        assert_eq!(word.weight().lee, 6);
                        assert!(matches!(
                            p4_case_word(&code, 4, &[a, b, c]),
                            Err(Error::RelationNotSatisfied(_))
                        ));
                        case3 += 1;
                    } else {
                        let word = p4_case_word(&code, 4, &[a, b, c]).unwrap();
                        assert_eq!(word.weight().lee, 6);
                        assert!(matches!(
                            p4_case_word(&code, 3, &[a, b, c]),
                            Err(Error::RelationNotSatisfied(_))
                        ));
                        case4 += 1;
                    }
                }
            }
        }
        assert!(case3 > 0, "case 3 supports exist at m = 3");
        assert!(case4 > 0, "case 4 supports exist at m = 3");
    }

    #[test]
    fn p8_odd_example_m3() {
        let code = GehCode::from_params(3, 3).unwrap();
        let w = p8_min_lee_word(&code, P8Variant::Odd, &[1, 5]).unwrap();
        assert_eq!(w.entries(), &[7, 1, 1, 6, 0, 0, 1, 0]);
        assert_eq!(w.weight().lee, 6);
    }

    #[test]
    fn p8_odd_style_example_m4() {
        let code = GehCode::from_params(3, 4).unwrap();
        let w = p8_min_lee_word(&code, P8Variant::Odd, &[1, 4]).unwrap();
        assert_eq!(
            w.entries(),
            &[7, 1, 1, 0, 0, 1, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0]
        );
        assert_eq!(w.weight().lee, 6);
    }

    #[test]
    fn p8_even_example_m4() {
        let code = GehCode::from_params(3, 4).unwrap();
        let w = p8_min_lee_word(&code, P8Variant::Even, &[5]).unwrap();
        assert_eq!(
            w.entries(),
            &[5, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0]
        );
        assert_eq!(w.weight().lee, 6);
    }

    #[test]
    fn p8_errors() {
        let code = GehCode::from_params(3, 3).unwrap();
        assert!(matches!(
            p8_min_lee_word(&code, P8Variant::Odd, &[1, 2]),
            Err(Error::RelationNotSatisfied(_))
        ));
        // odd m has no cube root of unity
        assert!(p8_min_lee_word(&code, P8Variant::Even, &[2]).is_err());
        let code4 = GehCode::from_params(3, 4).unwrap();
        // degenerate support: (t, 2t) makes the support sum vanish
        assert!(matches!(
            p8_min_lee_word(&code4, P8Variant::Odd, &[5, 10]),
            Err(Error::DegenerateSupport(_))
        ));
        let p4 = GehCode::from_params(2, 3).unwrap();
        assert!(p8_min_lee_word(&p4, P8Variant::Odd, &[1, 5]).is_err());
    }

    #[test]
    fn gamma_dependencies_m3() {
        let params = RingParams::new(2, 3).unwrap();
        for item in 1..=4 {
            let report = check_gamma_dependencies(&params, item).unwrap();
            assert!(report.holds, "item {item} must hold at m = 3");
            assert!(report.counterexamples.is_empty());
            assert!(report.tuples_checked > 0);
        }
    }

    #[test]
    fn gamma_item4_parity_gate() {
        let params = RingParams::new(2, 4).unwrap();
        assert!(matches!(
            check_gamma_dependencies(&params, 4),
            Err(Error::InvalidParam(_))
        ));
        // forcing the scan shows genuine counterexamples at even m,
        // confirming the parity restriction
        let forced = scan_gamma_item(&params, 4);
        assert!(!forced.holds);
        assert!(!forced.counterexamples.is_empty());
    }

    #[test]
    fn gamma_checker_rejects_bad_input() {
        let params = RingParams::new(2, 3).unwrap();
        assert!(check_gamma_dependencies(&params, 5).is_err());
        let p8 = RingParams::new(3, 3).unwrap();
        assert!(check_gamma_dependencies(&p8, 1).is_err());
        let p2_2 = RingParams::new(2, 2).unwrap();
        assert!(check_gamma_dependencies(&p2_2, 3).is_err());
    }
}
