//! Betti tables of torsion-free modules of projective dimension one.
//!
//! A table records generator multiplicities `a_i` and relation
//! multiplicities `b_i` of a minimal length-one free resolution. With
//! `sigma` the lowest generator degree, admissibility means `b_i = 0` for
//! `i <= sigma` and the strict partial-sum condition
//! `sum_{i<=l} b_i < sum_{i<l} a_i` for every `l > sigma`.

use crate::castelnuovo::{n_membership, BoundaryCase};
use crate::series::{LaurentPoly, TruncatedSeries};
use num::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BettiError {
    #[error("a table needs at least one generator")]
    NoGenerators,
    #[error("relation in degree {degree} at or below the lowest generator degree")]
    RelationTooLow { degree: i64 },
    #[error("partial-sum condition fails at l = {l}")]
    PartialSum { l: i64 },
    #[error("({0}, {1}) is not a boundary point of the invariant range")]
    NotExtremal(u64, u64),
    #[error("series truncated at {order}, but the table has support through {needed}")]
    TruncationTooShort { order: i64, needed: i64 },
}

/// Multiplicities of generators (`a`) and relations (`b`) by degree; only
/// nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    a: BTreeMap<i64, u64>,
    b: BTreeMap<i64, u64>,
}

impl BettiTable {
    /// Validate the two admissibility conditions; errors carry the first
    /// violated degree.
    pub fn validate(
        a: impl IntoIterator<Item = (i64, u64)>,
        b: impl IntoIterator<Item = (i64, u64)>,
    ) -> Result<Self, BettiError> {
        let a: BTreeMap<i64, u64> = a.into_iter().filter(|&(_, m)| m > 0).collect();
        let b: BTreeMap<i64, u64> = b.into_iter().filter(|&(_, m)| m > 0).collect();
        let &sigma = a.keys().next().ok_or(BettiError::NoGenerators)?;
        if let Some((&d, _)) = b.iter().find(|&(&d, _)| d <= sigma) {
            return Err(BettiError::RelationTooLow { degree: d });
        }
        let table = BettiTable { a, b };
        let top = table.max_support();
        for l in sigma + 1..=top + 1 {
            if table.b_sum_through(l) >= table.a_sum_below(l) {
                return Err(BettiError::PartialSum { l });
            }
        }
        Ok(table)
    }

    pub fn generators(&self) -> &BTreeMap<i64, u64> {
        &self.a
    }

    pub fn relations(&self) -> &BTreeMap<i64, u64> {
        &self.b
    }

    /// Lowest generator degree.
    pub fn sigma(&self) -> i64 {
        *self
            .a
            .keys()
            .next()
            .expect("validated tables have generators")
    }

    pub fn max_support(&self) -> i64 {
        let ta = self.a.keys().next_back().copied().unwrap_or(i64::MIN);
        let tb = self.b.keys().next_back().copied().unwrap_or(i64::MIN);
        ta.max(tb)
    }

    fn a_sum_below(&self, l: i64) -> u64 {
        self.a.range(..l).map(|(_, &m)| m).sum()
    }

    fn b_sum_through(&self, l: i64) -> u64 {
        self.b.range(..=l).map(|(_, &m)| m).sum()
    }

    /// The characteristic polynomial `sum_i (a_i - b_i) t^i`.
    pub fn char_poly(&self) -> LaurentPoly {
        let mut terms: BTreeMap<i64, i64> = BTreeMap::new();
        for (&d, &m) in &self.a {
            *terms.entry(d).or_insert(0) += m as i64;
        }
        for (&d, &m) in &self.b {
            *terms.entry(d).or_insert(0) -= m as i64;
        }
        LaurentPoly::from_terms(terms)
    }

    /// `1 - sum_i (a_i - b_i) h_i`, the self-Ext dimension of the resolved
    /// module when its endomorphisms are scalars.
    pub fn ext1_graded_dim(&self, h: &TruncatedSeries) -> Result<BigInt, BettiError> {
        let needed = self.max_support();
        if h.order() < needed {
            return Err(BettiError::TruncationTooShort {
                order: h.order(),
                needed,
            });
        }
        let mut acc = BigInt::from(1);
        for (&d, &m) in &self.a {
            acc -= BigInt::from(m) * h.coeff(d).expect("order checked above");
        }
        for (&d, &m) in &self.b {
            acc += BigInt::from(m) * h.coeff(d).expect("order checked above");
        }
        Ok(acc)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let degmap = |m: &BTreeMap<i64, u64>| {
            serde_json::Value::Object(
                m.iter()
                    .map(|(d, c)| (d.to_string(), serde_json::Value::from(*c)))
                    .collect(),
            )
        };
        serde_json::json!({ "a": degmap(&self.a), "b": degmap(&self.b) })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, String> {
        let field = |key: &str| -> Result<BTreeMap<i64, u64>, String> {
            let obj = v
                .get(key)
                .and_then(|x| x.as_object())
                .ok_or_else(|| format!("missing object field {key:?}"))?;
            obj.iter()
                .map(|(d, c)| {
                    let d: i64 = d.parse().map_err(|_| format!("bad degree {d:?}"))?;
                    let c = c.as_u64().ok_or_else(|| format!("bad count {c}"))?;
                    Ok((d, c))
                })
                .collect()
        };
        BettiTable::validate(field("a")?, field("b")?).map_err(|e| e.to_string())
    }

    /// Human-readable resolution, e.g. `0 -> A(-3)^2 -> A(-2)^3 -> M -> 0`.
    pub fn render(&self) -> String {
        let side = |m: &BTreeMap<i64, u64>| {
            if m.is_empty() {
                return "0".to_string();
            }
            m.iter()
                .map(|(&d, &c)| {
                    let term = if d == 0 {
                        "A".to_string()
                    } else {
                        format!("A({})", -d)
                    };
                    if c == 1 {
                        term
                    } else {
                        format!("{term}^{c}")
                    }
                })
                .collect::<Vec<_>>()
                .join(" + ")
        };
        format!("0 -> {} -> {} -> M -> 0", side(&self.b), side(&self.a))
    }
}

/// All admissible tables with `a_i - b_i = q_i` and support within
/// `degree_bound` (defaulting to the top degree of `q`).
///
/// The minimal table has `a_i = max(q_i, 0)` and `b_i = max(-q_i, 0)`;
/// every other table adds canceling pairs `(a_i + 1, b_i + 1)`. A pair in
/// degree `i` lowers the partial-sum slack at `l = i` by one and leaves
/// the slack at every other degree unchanged, so the admissible pair
/// counts per degree are independent and enumeration is a finite product.
/// For rank-one `q` the slack beyond the top degree is zero, which is why
/// the default bound suffices.
pub fn enumerate_for(q: &LaurentPoly, degree_bound: Option<i64>) -> Vec<BettiTable> {
    let Some(top) = q.max_degree() else {
        return Vec::new();
    };
    let bound = degree_bound.unwrap_or(top);
    let mut a = BTreeMap::new();
    let mut b = BTreeMap::new();
    for (d, c) in q.terms() {
        if c > &BigInt::from(0) {
            a.insert(d, u64::try_from(c).expect("positive"));
        } else {
            b.insert(d, u64::try_from(&-c).expect("negative negated"));
        }
    }
    let Ok(base) = BettiTable::validate(a, b) else {
        return Vec::new();
    };
    let sigma = base.sigma();
    // Slack gap(l) = a_sum_below(l) - b_sum_through(l) >= 1; a degree can
    // absorb gap(l) - 1 extra pairs.
    let slots: Vec<(i64, u64)> = (sigma + 1..=bound)
        .map(|l| (l, base.a_sum_below(l) - base.b_sum_through(l) - 1))
        .filter(|&(_, room)| room > 0)
        .collect();
    let mut out = Vec::new();
    let mut counts = vec![0u64; slots.len()];
    loop {
        let mut a = base.generators().clone();
        let mut b = base.relations().clone();
        for (&(d, _), &c) in slots.iter().zip(&counts) {
            if c > 0 {
                *a.entry(d).or_insert(0) += c;
                *b.entry(d).or_insert(0) += c;
            }
        }
        let table = BettiTable::validate(a, b).expect("pair counts within slack stay admissible");
        out.push(table);
        // Odometer over pair counts, most significant slot last.
        let mut k = 0;
        loop {
            if k == slots.len() {
                return out;
            }
            if counts[k] < slots[k].1 {
                counts[k] += 1;
                break;
            }
            counts[k] = 0;
            k += 1;
        }
    }
}

/// The unique resolution at a boundary point of the invariant range:
/// `0 -> A(-c-1)^c -> A(-c)^{c+1} -> I_0 -> 0` with `c = 2k` in case 1 and
/// `c = 2k + 1` in case 2. Rejects interior points (`l > 0`) and pairs
/// outside the range.
pub fn extremal_resolution(n_e: u64, n_o: u64) -> Result<BettiTable, BettiError> {
    let m = n_membership(n_e, n_o).ok_or(BettiError::NotExtremal(n_e, n_o))?;
    if m.l != 0 {
        return Err(BettiError::NotExtremal(n_e, n_o));
    }
    let c = match m.case {
        BoundaryCase::Case1 => 2 * m.k,
        BoundaryCase::Case2 => 2 * m.k + 1,
    } as i64;
    BettiTable::validate([(c, c as u64 + 1)], [(c + 1, c as u64)])
}
