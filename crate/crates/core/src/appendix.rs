//! Golden regression table: Hilbert series data for all invariant pairs
//! `(n_e, n_o)` with `n_e <= 3` and `n_o <= 3`.
//!
//! Each row pins one Castelnuovo polynomial together with its Hilbert
//! coefficients through degree six, the complete set of admissible minimal
//! resolutions, and the self-Ext dimension computed from the resolution.
//! The checked-in JSON file is the hand-transcribed reference; the
//! regenerator must reproduce it byte for byte.

use crate::betti::{enumerate_for, BettiTable};
use crate::castelnuovo::{enumerate, InvariantPair};
use num::BigInt;
use serde::{Deserialize, Serialize};

/// Reference data checked into the repository.
pub const GOLDEN_JSON: &str = include_str!("../data/appendix_b.json");

pub const TABLE_DESCRIPTION: &str = "Reference table for invariants (n_e, n_o) <= (3, 3): \
Castelnuovo coefficients, Hilbert coefficients through degree 6, all admissible minimal \
resolutions, and dim Ext^1(I, I). Regenerate and compare with `qhilb appendix --check`.";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixRow {
    /// `(n_e, n_o)`.
    pub invariants: (u64, u64),
    /// Castelnuovo coefficients, lowest degree first.
    pub castelnuovo: Vec<u64>,
    /// Hilbert coefficients for degrees 0 through 6, as decimal strings.
    pub hilbert: Vec<String>,
    /// Every admissible minimal resolution for the row's series.
    pub resolutions: Vec<serde_json::Value>,
    /// `dim Ext^1(I, I)` computed from any resolution of the row.
    pub ext1: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AppendixTable {
    pub description: String,
    pub rows: Vec<AppendixRow>,
}

/// Regenerate every row from the enumeration, series and resolution
/// machinery: invariant pairs in lexicographic order, Castelnuovo
/// polynomials within a pair in the enumeration (descending) order.
pub fn regenerate() -> AppendixTable {
    let mut rows = Vec::new();
    for n_e in 0..=3u64 {
        for n_o in 0..=3u64 {
            if !InvariantPair::new(n_e, n_o).in_n() {
                continue;
            }
            for s in enumerate(n_e, n_o) {
                let q = s.char_poly();
                let tables = enumerate_for(&q, None);
                let top = tables
                    .iter()
                    .map(BettiTable::max_support)
                    .max()
                    .unwrap_or(6)
                    .max(6);
                let h = s.to_hilbert(top);
                let ext1 = tables
                    .first()
                    .map(|t| t.ext1_graded_dim(&h).expect("series covers the support"))
                    .unwrap_or_else(|| BigInt::from(0));
                let hilbert = (0..=6)
                    .map(|n| h.coeff(n).expect("order at least 6").to_string())
                    .collect();
                rows.push(AppendixRow {
                    invariants: (n_e, n_o),
                    castelnuovo: s.coeffs().to_vec(),
                    hilbert,
                    resolutions: tables.iter().map(BettiTable::to_json).collect(),
                    ext1: i64::try_from(&ext1).expect("reference dimensions are small"),
                });
            }
        }
    }
    AppendixTable {
        description: TABLE_DESCRIPTION.to_string(),
        rows,
    }
}

/// Canonical serialization used for the byte-exact comparison.
pub fn canonical_json(table: &AppendixTable) -> String {
    let mut s = serde_json::to_string_pretty(table).expect("table serializes");
    s.push('\n');
    s
}

/// Compare the regenerated table against the checked-in reference,
/// returning a line diff on mismatch.
pub fn check_against_golden() -> Result<(), String> {
    let regenerated = canonical_json(&regenerate());
    if regenerated == GOLDEN_JSON {
        return Ok(());
    }
    let mut diff = String::from("regenerated table deviates from the reference:\n");
    for (i, (a, b)) in GOLDEN_JSON.lines().zip(regenerated.lines()).enumerate() {
        if a != b {
            diff.push_str(&format!(
                "line {}:\n  reference:   {}\n  regenerated: {}\n",
                i + 1,
                a,
                b
            ));
        }
    }
    let (gl, rl) = (GOLDEN_JSON.lines().count(), regenerated.lines().count());
    if gl != rl {
        diff.push_str(&format!(
            "line counts differ: reference {gl}, regenerated {rl}\n"
        ));
    }
    Err(diff)
}
