use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ArmId;

/// Ranking bijection of a set of arms by a real-valued score.
///
/// Rank 1 holds the largest value. Equal values are ordered by ascending arm
/// id, so the arm with the lowest id wins every tie and `top()` is the
/// deterministic argmax.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankMap {
    /// Arms in rank order: `order[r - 1]` has rank `r`.
    order: Vec<ArmId>,
    value_of: BTreeMap<ArmId, f64>,
}

impl RankMap {
    /// Ranks `domain` by `value(a)`.
    pub fn from_fn<F>(domain: &[ArmId], value: F) -> Result<Self>
    where
        F: Fn(ArmId) -> Option<f64>,
    {
        if domain.is_empty() {
            return Err(Error::EmptyRankingDomain);
        }
        let mut entries = Vec::with_capacity(domain.len());
        for &a in domain {
            match value(a) {
                Some(v) if !v.is_nan() => entries.push((a, v)),
                _ => return Err(Error::BadRankingValue(a)),
            }
        }
        entries.sort_by(|x, y| {
            y.1.partial_cmp(&x.1)
                .unwrap_or(Ordering::Equal)
                .then(x.0.cmp(&y.0))
        });
        entries.dedup_by_key(|e| e.0);
        Ok(RankMap {
            order: entries.iter().map(|e| e.0).collect(),
            value_of: entries.into_iter().collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// The rank-1 arm.
    pub fn top(&self) -> ArmId {
        self.order[0]
    }

    /// The arm at 1-based `rank`.
    pub fn arm_at(&self, rank: usize) -> ArmId {
        self.order[rank - 1]
    }

    /// The value at 1-based `rank`, i.e. the `rank`-th largest value.
    pub fn value_at(&self, rank: usize) -> f64 {
        self.value_of[&self.arm_at(rank)]
    }

    pub fn rank_of(&self, arm: ArmId) -> Option<usize> {
        self.order.iter().position(|&a| a == arm).map(|i| i + 1)
    }

    pub fn value_of(&self, arm: ArmId) -> Option<f64> {
        self.value_of.get(&arm).copied()
    }

    pub fn order(&self) -> &[ArmId] {
        &self.order
    }
}

/// Ranks the arms of `domain` by their entries in `values`.
pub fn rank(values: &BTreeMap<ArmId, f64>, domain: &[ArmId]) -> Result<RankMap> {
    RankMap::from_fn(domain, |a| values.get(&a).copied())
}
