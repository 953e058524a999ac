//! Signed distance to the origin and the ordering it induces.
//!
//! Each number is scored by `rho = delta * D(n, 0)`, where `delta` is the sign
//! of its value index and `D` the L_p distance of its `(V, A)` interval to
//! that of the origin `<(0, 0, 0, 0); 0, 1>`. Larger `rho` ranks higher.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::indices::{va_index, Lambda, VaIndex};
use crate::metric::{va_distance, PNorm};
use crate::trifn::Trifn;

pub const DEFAULT_TIE_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RankError {
    #[error("nothing to rank")]
    Empty,
    #[error("tie epsilon {0} must be a non-negative number")]
    TieEpsilon(f64),
    #[error("item {index} scores a non-finite value (V={value}, A={ambiguity}, rho={rho})")]
    NonFinite {
        index: usize,
        value: f64,
        ambiguity: f64,
        rho: f64,
    },
}

/// Sign of the value index; zero counts as positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    pub fn as_f64(self) -> f64 {
        match self {
            Sign::Negative => -1.0,
            Sign::Positive => 1.0,
        }
    }
}

pub fn delta(n: &Trifn, lambda: Lambda) -> Sign {
    sign_of(&va_index(n, lambda))
}

fn sign_of(idx: &VaIndex) -> Sign {
    if idx.value >= 0.0 {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

fn rho_of(idx: &VaIndex, p: PNorm) -> f64 {
    let origin = VaIndex {
        value: 0.0,
        ambiguity: 0.0,
        lambda: idx.lambda,
    };
    sign_of(idx).as_f64() * va_distance(p, idx, &origin)
}

/// Ranking score of `n`.
pub fn rho(n: &Trifn, p: PNorm, lambda: Lambda) -> f64 {
    rho_of(&va_index(n, lambda), p)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankConfig {
    pub p: PNorm,
    pub lambda: Lambda,
    pub tie_epsilon: f64,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig {
            p: PNorm::TWO,
            lambda: Lambda::HALF,
            tie_epsilon: DEFAULT_TIE_EPSILON,
        }
    }
}

impl RankConfig {
    pub fn with_p(p: PNorm) -> Self {
        RankConfig {
            p,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankedEntry<Id> {
    pub id: Id,
    pub value: f64,
    pub ambiguity: f64,
    pub rho: f64,
}

/// Entries sorted best first, with equivalence classes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RankOutcome<Id> {
    pub entries: Vec<RankedEntry<Id>>,
    /// Partition of `entries` into runs of consecutive entries whose
    /// neighbouring `rho` values differ by at most `tie_epsilon`, stored as
    /// index ranges into `entries`. Singletons are included.
    pub tie_groups: Vec<std::ops::Range<usize>>,
    pub config: RankConfig,
}

/// Scores and orders `items`. Equal scores keep their input order.
pub fn rank<Id: Clone>(items: &[(Id, Trifn)], config: RankConfig) -> Result<RankOutcome<Id>, RankError> {
    if items.is_empty() {
        return Err(RankError::Empty);
    }
    if !(config.tie_epsilon >= 0.0) {
        return Err(RankError::TieEpsilon(config.tie_epsilon));
    }
    let mut entries: Vec<RankedEntry<Id>> = items
        .iter()
        .map(|(id, n)| {
            let idx = va_index(n, config.lambda);
            RankedEntry {
                id: id.clone(),
                value: idx.value,
                ambiguity: idx.ambiguity,
                rho: rho_of(&idx, config.p),
            }
        })
        .collect();
    if let Some((index, e)) = entries
        .iter()
        .enumerate()
        .find(|(_, e)| !(e.value.is_finite() && e.ambiguity.is_finite() && e.rho.is_finite()))
    {
        return Err(RankError::NonFinite {
            index,
            value: e.value,
            ambiguity: e.ambiguity,
            rho: e.rho,
        });
    }
    entries.sort_by(|x, y| y.rho.total_cmp(&x.rho));

    let mut tie_groups = Vec::new();
    let mut start = 0;
    for i in 1..=entries.len() {
        if i == entries.len() || entries[i - 1].rho - entries[i].rho > config.tie_epsilon {
            tie_groups.push(start..i);
            start = i;
        }
    }
    Ok(RankOutcome {
        entries,
        tie_groups,
        config,
    })
}

impl<Id> RankOutcome<Id> {
    pub fn has_ties(&self) -> bool {
        self.tie_groups.iter().any(|g| g.len() > 1)
    }

    /// Identifiers best first.
    pub fn ids(&self) -> impl Iterator<Item = &Id> {
        self.entries.iter().map(|e| &e.id)
    }

    pub fn rho_of(&self, id: &Id) -> Option<f64>
    where
        Id: PartialEq,
    {
        self.entries.iter().find(|e| &e.id == id).map(|e| e.rho)
    }
}

impl<Id: fmt::Display> RankOutcome<Id> {
    /// `"c ≻ a ∼ b"`, best first.
    pub fn render_descending(&self) -> String {
        self.render(" ≻ ", self.tie_groups.to_vec())
    }

    /// `"b ∼ a ≺ c"`, worst first.
    pub fn render_ascending(&self) -> String {
        let groups: Vec<_> = self.tie_groups.iter().rev().cloned().collect();
        self.render(" ≺ ", groups)
    }

    fn render(&self, separator: &str, groups: Vec<std::ops::Range<usize>>) -> String {
        groups
            .into_iter()
            .map(|g| {
                self.entries[g]
                    .iter()
                    .map(|e| e.id.to_string())
                    .collect::<Vec<_>>()
                    .join(" ∼ ")
            })
            .collect::<Vec<_>>()
            .join(separator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn tri(t1: f64, t2: f64, t3: f64, w: f64, u: f64) -> Trifn {
        Trifn::triangular(t1, t2, t3, w, u).unwrap()
    }

    #[test]
    fn overflow_is_rejected() {
        let huge = Trifn::crisp(1e308, 1.0, 0.0).unwrap();
        let items = [("ok", Trifn::ORIGIN), ("huge", huge)];
        match rank(&items, RankConfig::default()) {
            Err(RankError::NonFinite { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected NonFinite, got {other:?}"),
        }
    }

    #[test]
    fn delta_signs() {
        let a = tri(0.5, 0.7, 0.9, 0.7, 0.2);
        assert_eq!(delta(&a, Lambda::HALF), Sign::Positive);
        assert_eq!(delta(&-a, Lambda::HALF), Sign::Negative);
        assert_eq!(delta(&Trifn::ORIGIN, Lambda::HALF), Sign::Positive);
    }

    #[test]
    fn rho_table_cells() {
        let b = tri(0.2, 0.3, 0.4, 0.6, 0.4);
        assert_abs_diff_eq!(rho(&b, PNorm::TWO, Lambda::HALF), 0.1171, epsilon = 2e-4);
        let c = Trifn::new(0.21, 0.27, 0.32, 0.35, 0.6, 0.3).unwrap();
        assert_abs_diff_eq!(rho(&c, PNorm::THREE, Lambda::HALF), 0.1319, epsilon = 2e-4);
        let neg_b = -Trifn::new(0.3, 0.4, 0.5, 0.6, 0.7, 0.1).unwrap();
        // sign(V) * sqrt((V^2 + A^2 + VA) / 3) with V = -0.36, A = 0.4/3
        let (v, a) = (-0.36_f64, 0.4_f64 / 3.0);
        let expected = -((v * v + a * a + v * a) / 3.0).sqrt();
        assert_abs_diff_eq!(rho(&neg_b, PNorm::TWO, Lambda::HALF), expected, epsilon = 1e-14);
        assert_abs_diff_eq!(expected, -0.182_01, epsilon = 1e-5);
        assert_eq!(rho(&Trifn::ORIGIN, PNorm::THREE, Lambda::HALF), 0.0);
    }

    #[test]
    fn ranks_set1() {
        let items = vec![
            ("a", tri(0.5, 0.7, 0.9, 0.7, 0.2)),
            ("b", tri(0.2, 0.3, 0.4, 0.6, 0.4)),
            ("c", tri(0.4, 0.7, 0.9, 0.6, 0.3)),
        ];
        let outcome = rank(&items, RankConfig::default()).unwrap();
        assert_eq!(outcome.render_ascending(), "b ≺ c ≺ a");
        assert_eq!(outcome.render_descending(), "a ≻ c ≻ b");
        assert!(!outcome.has_ties());
    }

    #[test]
    fn singleton_and_empty() {
        let items = vec![("only", tri(0.1, 0.2, 0.3, 0.5, 0.5))];
        let outcome = rank(&items, RankConfig::default()).unwrap();
        assert_eq!(outcome.render_descending(), "only");
        assert_eq!(outcome.tie_groups, vec![0..1]);
        let empty: Vec<(&str, Trifn)> = Vec::new();
        assert_eq!(rank(&empty, RankConfig::default()).unwrap_err(), RankError::Empty);
    }

    #[test]
    fn ties_are_stable_and_grouped() {
        let n = tri(0.1, 0.2, 0.3, 0.5, 0.5);
        let items = vec![("x", n), ("top", tri(0.5, 0.6, 0.7, 0.5, 0.5)), ("y", n)];
        let outcome = rank(&items, RankConfig::default()).unwrap();
        assert_eq!(outcome.render_descending(), "top ≻ x ∼ y");
        assert_eq!(outcome.render_ascending(), "x ∼ y ≺ top");
        assert_eq!(outcome.tie_groups, vec![0..1, 1..3]);
    }

    #[test]
    fn rejects_negative_tie_epsilon() {
        let items = vec![("x", Trifn::ORIGIN)];
        let config = RankConfig {
            tie_epsilon: -1.0,
            ..Default::default()
        };
        assert!(matches!(rank(&items, config), Err(RankError::TieEpsilon(_))));
    }
}
