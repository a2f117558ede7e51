//! Castelnuovo polynomials and their bijection with Hilbert series of
//! normalized rank-one modules.
//!
//! A Castelnuovo polynomial is a polynomial with nonnegative integer
//! coefficients `s_0, s_1, ...` such that `s_i = i + 1` for `i < sigma` and
//! the remaining coefficients are nonincreasing and bounded by `sigma`
//! (`sigma = 0` forces the zero polynomial). The even weight is the sum of
//! the even-indexed coefficients, the odd weight the sum of the odd-indexed
//! ones, and the pairs of weights that occur are exactly the set
//! `N = {(n_e, n_o) : n_e - (n_e - n_o)^2 >= 0}`.

use crate::series::{expand_over_ha, ha_coefficient, LaurentPoly, TruncatedSeries};
use num::{BigInt, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CastelnuovoError {
    #[error("shape violation at index {index}")]
    Shape { index: usize },
    #[error("1 - q is not divisible by (1-t)^2")]
    NotDivisible,
    #[error("quotient has a coefficient outside 0..=sigma at degree {degree}")]
    BadQuotient { degree: i64 },
    #[error("partition parts must be positive and strictly decreasing")]
    NotDistinct,
}

/// Even and odd weights of a Castelnuovo polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct InvariantPair {
    pub n_e: u64,
    pub n_o: u64,
}

impl InvariantPair {
    pub fn new(n_e: u64, n_o: u64) -> Self {
        InvariantPair { n_e, n_o }
    }

    /// Membership in `N`: `n_e - (n_e - n_o)^2 >= 0`.
    pub fn in_n(&self) -> bool {
        let d = self.n_e as i64 - self.n_o as i64;
        self.n_e as i64 - d * d >= 0
    }
}

/// Coefficient list of a Castelnuovo polynomial; the empty list is the zero
/// polynomial. Trailing zeros are stripped on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CastelnuovoPoly {
    s: Vec<u64>,
}

impl CastelnuovoPoly {
    pub fn zero() -> Self {
        CastelnuovoPoly { s: Vec::new() }
    }

    /// Validate the staircase-then-nonincreasing shape. The error carries
    /// the first offending index.
    pub fn validate(coeffs: &[u64]) -> Result<Self, CastelnuovoError> {
        let mut s = coeffs.to_vec();
        while s.last() == Some(&0) {
            s.pop();
        }
        let sigma = Self::staircase_prefix(&s);
        if let Some(&first_tail) = s.get(sigma) {
            if first_tail > sigma as u64 {
                return Err(CastelnuovoError::Shape { index: sigma });
            }
            for i in sigma + 1..s.len() {
                if s[i] > s[i - 1] {
                    return Err(CastelnuovoError::Shape { index: i });
                }
            }
        }
        Ok(CastelnuovoPoly { s })
    }

    fn staircase_prefix(s: &[u64]) -> usize {
        s.iter()
            .enumerate()
            .take_while(|&(i, &c)| c == i as u64 + 1)
            .count()
    }

    /// The staircase length: the maximal `sigma` with `s_i = i + 1` for
    /// `i < sigma`.
    pub fn sigma(&self) -> usize {
        Self::staircase_prefix(&self.s)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.s.is_empty()
    }

    pub fn weights(&self) -> InvariantPair {
        let n_e = self.s.iter().step_by(2).sum();
        let n_o = self.s.iter().skip(1).step_by(2).sum();
        InvariantPair::new(n_e, n_o)
    }

    /// As a Laurent polynomial in `t`.
    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.s
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i64, c as i64)),
        )
    }

    /// The Hilbert series `1/((1-t)^2(1-t^2)) - s(t)/(1-t^2)` through
    /// degree `order`.
    pub fn to_hilbert(&self, order: i64) -> TruncatedSeries {
        let coeffs = (0..=order.max(0))
            .map(|n| {
                // Coefficient of s(t)/(1-t^2): sum of s_i over i <= n with
                // i of the same parity as n.
                let tail: u64 = self
                    .s
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i as i64 <= n && (n - i as i64) % 2 == 0)
                    .map(|(_, &c)| c)
                    .sum();
                ha_coefficient(n) - BigInt::from(tail)
            })
            .collect();
        TruncatedSeries::new(0, coeffs)
    }

    /// The characteristic polynomial `1 - s(t)(1-t)^2` of the normalized
    /// module with this Castelnuovo polynomial.
    pub fn char_poly(&self) -> LaurentPoly {
        let omt = LaurentPoly::one_minus_t();
        LaurentPoly::one().sub(&self.to_laurent().mul(&omt).mul(&omt))
    }

    /// Inverse of [`CastelnuovoPoly::char_poly`]: extract `s` from a
    /// normalized characteristic polynomial with `q(1) = 1`.
    pub fn from_char_poly(q: &LaurentPoly) -> Result<Self, CastelnuovoError> {
        let omt = LaurentPoly::one_minus_t();
        let numerator = LaurentPoly::one().sub(q);
        let s_poly = numerator
            .div_exact(&omt)
            .and_then(|p| p.div_exact(&omt))
            .ok_or(CastelnuovoError::NotDivisible)?;
        if s_poly.min_degree().is_some_and(|d| d < 0) {
            return Err(CastelnuovoError::BadQuotient {
                degree: s_poly.min_degree().unwrap(),
            });
        }
        let top = s_poly.max_degree().unwrap_or(-1);
        let mut coeffs = Vec::new();
        for d in 0..=top {
            let c = s_poly.coeff(d);
            let c: u64 =
                u64::try_from(&c).map_err(|_| CastelnuovoError::BadQuotient { degree: d })?;
            coeffs.push(c);
        }
        Self::validate(&coeffs)
    }

    /// Left-align the diagram rows: part `j` (1-based) has length
    /// `#{i : s_i >= j}`. The result always has strictly decreasing parts.
    pub fn to_partition(&self) -> DistinctPartition {
        let max = self.s.iter().copied().max().unwrap_or(0);
        let parts: Vec<u64> = (1..=max)
            .map(|j| self.s.iter().filter(|&&c| c >= j).count() as u64)
            .collect();
        DistinctPartition::new(parts).expect("Castelnuovo rows are strictly decreasing")
    }

    /// ASCII column chart; even columns are drawn with '#', odd with '.'.
    pub fn render_diagram(&self) -> String {
        let height = self.s.iter().copied().max().unwrap_or(0);
        let mut lines = Vec::new();
        for level in (1..=height).rev() {
            let line: String = self
                .s
                .iter()
                .enumerate()
                .map(|(i, &c)| {
                    if c >= level {
                        if i % 2 == 0 {
                            '#'
                        } else {
                            '\u{00b7}'
                        }
                    } else {
                        ' '
                    }
                })
                .collect();
            lines.push(line.trim_end().to_string());
        }
        lines.join("\n")
    }
}

/// A partition with strictly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DistinctPartition {
    parts: Vec<u64>,
}

impl DistinctPartition {
    pub fn new(parts: Vec<u64>) -> Result<Self, CastelnuovoError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] <= w[1]) {
            return Err(CastelnuovoError::NotDistinct);
        }
        Ok(DistinctPartition { parts })
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }
}

/// Chessboard weights of the Ferrers diagram: cell `(row j from bottom,
/// column i from left)` is black iff `i + j` is even. Returns
/// `(black count, white count)`; the largest part is the bottom row.
pub fn chess_weights(partition: &DistinctPartition) -> InvariantPair {
    let mut black = 0u64;
    let mut white = 0u64;
    for (j, &len) in partition.parts().iter().enumerate() {
        for i in 0..len {
            if (i + j as u64).is_multiple_of(2) {
                black += 1;
            } else {
                white += 1;
            }
        }
    }
    InvariantPair::new(black, white)
}

/// All Castelnuovo polynomials of even weight `n_e` and odd weight `n_o`,
/// in descending lexicographic order on coefficient lists (the order the
/// reference table prints). Empty exactly when `(n_e, n_o)` lies outside
/// `N`.
pub fn enumerate(n_e: u64, n_o: u64) -> Vec<CastelnuovoPoly> {
    let mut out = Vec::new();
    // Longest staircase whose partial weights could still fit.
    let mut sigma_max = 0usize;
    while staircase_weights(sigma_max + 1).0 <= n_e && staircase_weights(sigma_max + 1).1 <= n_o {
        sigma_max += 1;
    }
    for sigma in (0..=sigma_max).rev() {
        let (we, wo) = staircase_weights(sigma);
        if we > n_e || wo > n_o {
            continue;
        }
        let mut prefix: Vec<u64> = (1..=sigma as u64).collect();
        extend_tail(&mut prefix, sigma as u64, we, wo, n_e, n_o, &mut out);
    }
    out
}

fn staircase_weights(sigma: usize) -> (u64, u64) {
    let mut we = 0;
    let mut wo = 0;
    for i in 0..sigma as u64 {
        if i % 2 == 0 {
            we += i + 1;
        } else {
            wo += i + 1;
        }
    }
    (we, wo)
}

fn extend_tail(
    prefix: &mut Vec<u64>,
    cap: u64,
    we: u64,
    wo: u64,
    n_e: u64,
    n_o: u64,
    out: &mut Vec<CastelnuovoPoly>,
) {
    // Extensions first (larger next coefficient first) keeps the output in
    // descending lexicographic order; the current prefix is recorded after
    // all of its extensions.
    let even_pos = prefix.len().is_multiple_of(2);
    for c in (1..=cap).rev() {
        let (we2, wo2) = if even_pos { (we + c, wo) } else { (we, wo + c) };
        if we2 > n_e || wo2 > n_o {
            continue;
        }
        prefix.push(c);
        extend_tail(prefix, c, we2, wo2, n_e, n_o, out);
        prefix.pop();
    }
    if we == n_e && wo == n_o {
        out.push(CastelnuovoPoly { s: prefix.clone() });
    }
}

/// Number of Castelnuovo polynomials with the given weights.
pub fn count(n_e: u64, n_o: u64) -> u64 {
    enumerate(n_e, n_o).len() as u64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryCase {
    /// `(n_e - l, n_o - l) = (k^2, k(k+1))`; the diagram ends with a white
    /// (odd) column.
    Case1,
    /// `(n_e - l, n_o - l) = ((k+1)^2, k(k+1))`; the diagram ends with a
    /// black (even) column.
    Case2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NMembership {
    pub k: u64,
    pub l: u64,
    pub case: BoundaryCase,
}

/// For `(n_e, n_o)` in `N`, the unique `l >= 0` with
/// `(n_e - l, n_o - l)` in `N` and `(n_e - l - 1, n_o - l - 1)` not in `N`,
/// together with the `k` and case tag of the boundary point
/// `(n_e - l, n_o - l)`. Returns `None` outside `N`.
pub fn n_membership(n_e: u64, n_o: u64) -> Option<NMembership> {
    let delta = n_e as i64 - n_o as i64;
    let l = n_e as i64 - delta * delta;
    if l < 0 {
        return None;
    }
    let (k, case) = if delta <= 0 {
        ((-delta) as u64, BoundaryCase::Case1)
    } else {
        ((delta - 1) as u64, BoundaryCase::Case2)
    };
    Some(NMembership {
        k,
        l: l as u64,
        case,
    })
}

/// The unique Castelnuovo polynomial at a boundary point of `N`: the pure
/// staircase of length `2k` (case 1) or `2k + 1` (case 2), with weights
/// `(k^2, k(k+1))` resp. `((k+1)^2, k(k+1))`.
pub fn extremal_castelnuovo(k: u64, case: BoundaryCase) -> CastelnuovoPoly {
    let sigma = match case {
        BoundaryCase::Case1 => 2 * k,
        BoundaryCase::Case2 => 2 * k + 1,
    };
    CastelnuovoPoly {
        s: (1..=sigma).collect(),
    }
}

/// Hilbert series of the normalized module attached to `s`, as the
/// `expand_over_ha` of its characteristic polynomial. Exposed for
/// cross-checks; agrees with [`CastelnuovoPoly::to_hilbert`].
pub fn hilbert_via_char_poly(s: &CastelnuovoPoly, order: i64) -> TruncatedSeries {
    let q = s.char_poly();
    let series = expand_over_ha(&q, order.max(q.max_degree().unwrap_or(0)))
        .expect("order is clamped to the top degree");
    let coeffs = (0..=order.max(0))
        .map(|n| series.coeff(n).unwrap_or_else(BigInt::zero))
        .collect();
    TruncatedSeries::new(0, coeffs)
}
