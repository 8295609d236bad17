//! Phase allocation for a fixed sampling budget.
//!
//! With `K` arms and budget `H`, phase `k` pulls each surviving arm until it
//! has `n_k = ceil((H - K) / ((K + 1 - k) * (H_K - 1/2)))` samples, where
//! `H_K` is the `K`-th harmonic number. The ceilings are evaluated in exact
//! rational arithmetic so the budget identity never fails to rounding.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `sum_{i=1}^{k} 1/i`.
pub fn harmonic_number(k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::HarmonicIndex);
    }
    // summing smallest terms first keeps the error small for large k
    Ok((1..=k).rev().map(|i| 1.0 / i as f64).sum())
}

fn harmonic_exact(k: usize) -> BigRational {
    (1..=k).fold(BigRational::zero(), |acc, i| {
        acc + BigRational::new(BigInt::one(), BigInt::from(i))
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseSchedule {
    pub horizon: u64,
    pub num_arms: usize,
    /// Cumulative pulls per surviving arm at the end of phase `k` (`n[k-1]`).
    pub n: Vec<u64>,
    /// New pulls per surviving arm in phase `k` (`increments[k-1]`).
    pub increments: Vec<u64>,
    /// Total pulls drawn by the end of phase `k` (`t[k-1]`).
    pub t: Vec<u64>,
    /// `H_K` for `K = num_arms`.
    pub harmonic: f64,
}

impl PhaseSchedule {
    pub fn num_phases(&self) -> usize {
        self.n.len()
    }

    /// Cumulative per-arm samples at the end of 1-based phase `k`.
    pub fn n_at(&self, k: usize) -> u64 {
        self.n[k - 1]
    }

    /// New per-arm samples in 1-based phase `k`.
    pub fn increment_at(&self, k: usize) -> u64 {
        self.increments[k - 1]
    }

    /// `sum_k (K - k + 1) N_k`, the number of pulls a full run draws.
    pub fn total_pulls(&self) -> u64 {
        self.t.last().copied().unwrap_or(0)
    }

    /// Recomputes the phase-end sample counts from the increments.
    pub fn recompute_t(&self) -> Vec<u64> {
        let k_arms = self.num_arms as u64;
        self.increments
            .iter()
            .enumerate()
            .scan(0u64, |acc, (j, &inc)| {
                *acc += (k_arms - j as u64) * inc;
                Some(*acc)
            })
            .collect()
    }
}

pub fn make_schedule(num_arms: usize, horizon: u64) -> Result<PhaseSchedule> {
    if num_arms < 2 {
        return Err(Error::InvalidInstance(format!(
            "need at least 2 arms, got {num_arms}"
        )));
    }
    if horizon < num_arms as u64 {
        return Err(Error::BudgetBelowArmCount {
            horizon,
            arms: num_arms,
        });
    }
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let denom_base = harmonic_exact(num_arms) - half;
    let spare = BigRational::from_integer(BigInt::from(horizon - num_arms as u64));

    let mut n = Vec::with_capacity(num_arms - 1);
    for k in 1..num_arms {
        let phase_weight = BigRational::from_integer(BigInt::from(num_arms + 1 - k));
        let x = &spare / (phase_weight * &denom_base);
        let nk = x.ceil().to_integer().to_u64().expect("n_k fits in u64");
        n.push(nk);
    }
    let increments: Vec<u64> = n
        .iter()
        .scan(0u64, |prev, &nk| {
            let inc = nk - *prev;
            *prev = nk;
            Some(inc)
        })
        .collect();

    let mut sched = PhaseSchedule {
        horizon,
        num_arms,
        n,
        increments,
        t: Vec::new(),
        harmonic: harmonic_number(num_arms)?,
    };
    sched.t = sched.recompute_t();
    debug_assert!(sched.total_pulls() <= horizon);
    Ok(sched)
}
