use serde::{Deserialize, Serialize};

use super::{BanditInstance, RankMap};
use crate::error::{Error, Result};
use crate::ArmId;

/// Ground-truth difficulty of an instance, computed from true means.
///
/// `delta_c` and `delta` are indexed by arm id. With `epsilon = delta_tol = 0`
/// these are the plain feasibility and reward gaps; positive tolerances are
/// added to every gap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub feasible_set: Vec<ArmId>,
    /// The `m` best feasible arms, in true rank order.
    pub top_m: Vec<ArmId>,
    /// Feasible reward means, non-increasing.
    pub ordered_means: Vec<f64>,
    pub delta_c: Vec<f64>,
    pub delta: Vec<f64>,
    pub delta_min: f64,
    pub epsilon: f64,
    pub delta_tol: f64,
    /// True reward means by arm id.
    pub reward_means: Vec<f64>,
    /// True cost means by arm id.
    pub cost_means: Vec<f64>,
    pub tau: f64,
}

impl ComplexityProfile {
    /// `A_f(m)` as a sorted id list.
    pub fn top_m_sorted(&self) -> Vec<ArmId> {
        let mut v = self.top_m.clone();
        v.sort_unstable();
        v
    }

    pub fn min_delta_c(&self) -> f64 {
        self.delta_c.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn min_delta(&self) -> f64 {
        self.delta.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `max` of the true gaps over `arms`.
    pub fn max_delta_over(&self, arms: &[ArmId]) -> Option<f64> {
        arms.iter().map(|&a| self.delta[a]).reduce(f64::max)
    }

    /// Whether `a` is epsilon-feasible: `C(a) <= tau - epsilon`.
    pub fn is_epsilon_feasible(cost_mean: f64, tau: f64, epsilon: f64) -> bool {
        cost_mean <= tau - epsilon
    }

    /// Whether `a` is epsilon-infeasible: `C(a) > tau + epsilon`.
    pub fn is_epsilon_infeasible(cost_mean: f64, tau: f64, epsilon: f64) -> bool {
        cost_mean > tau + epsilon
    }
}

/// Computes the feasible set, the top-`m` target and the gap quantities.
pub fn ground_truth(
    instance: &BanditInstance,
    epsilon: f64,
    delta_tol: f64,
) -> Result<ComplexityProfile> {
    for (name, v) in [("epsilon", epsilon), ("delta_tol", delta_tol)] {
        if !(v >= 0.0 && v.is_finite()) {
            return Err(Error::InvalidTolerance(format!("{name} = {v}")));
        }
    }
    let tau = instance.tau();
    let m = instance.m();
    let mu = instance.reward_means();
    let cost = instance.cost_means();

    if epsilon == 0.0 {
        if let Some(a) = cost.iter().position(|&c| c == tau) {
            return Err(Error::DegenerateInstance(format!(
                "arm {a} has cost mean equal to tau; set epsilon > 0"
            )));
        }
    }

    let feasible = instance.feasible_set();
    if m >= feasible.len() {
        return Err(Error::TargetCountNotBelowFeasible {
            m,
            feasible: feasible.len(),
        });
    }
    let ranked = RankMap::from_fn(&feasible, |a| Some(mu[a]))?;
    let ordered_means: Vec<f64> = (1..=ranked.len()).map(|r| ranked.value_at(r)).collect();

    if delta_tol == 0.0 {
        if let Some(w) = ordered_means.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::DegenerateInstance(format!(
                "feasible arms {} and {} share reward mean {}; set delta_tol > 0",
                ranked.arm_at(w + 1),
                ranked.arm_at(w + 2),
                ordered_means[w]
            )));
        }
    }

    let delta_c: Vec<f64> = cost.iter().map(|&c| (c - tau).abs() + epsilon).collect();

    // ordered_means is 0-based: mu_(i) = ordered_means[i - 1]
    let mut delta = vec![f64::NAN; instance.num_arms()];
    for &a in &feasible {
        let r = ranked.rank_of(a).expect("feasible arm is ranked");
        let gap = if r <= m {
            ordered_means[r - 1] - ordered_means[m]
        } else {
            ordered_means[m - 1] - ordered_means[r - 1]
        };
        delta[a] = gap + delta_tol;
    }
    let fill = feasible
        .iter()
        .map(|&a| delta[a])
        .fold(f64::INFINITY, f64::min);
    for d in delta.iter_mut().filter(|d| d.is_nan()) {
        *d = fill;
    }

    let delta_min = delta_c
        .iter()
        .zip(&delta)
        .map(|(&dc, &d)| (dc / 2.0).min(d / 8.0))
        .fold(f64::INFINITY, f64::min);

    Ok(ComplexityProfile {
        feasible_set: feasible,
        top_m: ranked.order()[..m].to_vec(),
        ordered_means,
        delta_c,
        delta,
        delta_min,
        epsilon,
        delta_tol,
        reward_means: mu,
        cost_means: cost,
        tau,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn six_arm() -> BanditInstance {
        BanditInstance::bernoulli(
            &[0.9, 0.8, 0.7, 0.6, 0.5, 0.4],
            &[0.2, 0.3, 0.7, 0.4, 0.8, 0.3],
            0.5,
            2,
        )
        .unwrap()
    }

    #[test]
    fn four_feasible_gaps() {
        // feasible means 0.9, 0.7, 0.5, 0.3 plus one infeasible arm
        let inst = BanditInstance::point_masses(
            &[0.9, 0.7, 0.5, 0.3, 0.95],
            &[0.1, 0.1, 0.1, 0.1, 0.9],
            0.5,
            2,
        )
        .unwrap();
        let p = ground_truth(&inst, 0.0, 0.0).unwrap();
        let want = [0.4, 0.2, 0.2, 0.4, 0.2];
        for (got, want) in p.delta.iter().zip(want) {
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
    }

    #[test]
    fn six_arm_instance() {
        let p = ground_truth(&six_arm(), 0.0, 0.0).unwrap();
        assert_eq!(p.feasible_set, vec![0, 1, 3, 5]);
        assert_eq!(p.top_m_sorted(), vec![0, 1]);
        assert_relative_eq!(p.delta_min, 0.025, epsilon = 1e-12);
        assert_relative_eq!(p.min_delta_c(), 0.1, epsilon = 1e-12);
        assert_relative_eq!(p.min_delta(), 0.2, epsilon = 1e-12);
        for infeasible in [2, 4] {
            assert_relative_eq!(p.delta[infeasible], 0.2, epsilon = 1e-12);
        }
    }

    #[test]
    fn cost_on_threshold_needs_epsilon() {
        let inst =
            BanditInstance::point_masses(&[0.9, 0.8, 0.7], &[0.5, 0.1, 0.2], 0.5, 1).unwrap();
        assert!(matches!(
            ground_truth(&inst, 0.0, 0.0),
            Err(Error::DegenerateInstance(_))
        ));
        let p = ground_truth(&inst, 0.05, 0.0).unwrap();
        assert_relative_eq!(p.delta_c[0], 0.05);
        assert!(p.delta_min > 0.0);
    }

    #[test]
    fn duplicate_means_need_delta_tol() {
        let inst = BanditInstance::point_masses(&[0.9, 0.7, 0.7, 0.3], &[0.1; 4], 0.5, 2).unwrap();
        assert!(matches!(
            ground_truth(&inst, 0.0, 0.0),
            Err(Error::DegenerateInstance(_))
        ));
        let p = ground_truth(&inst, 0.0, 0.01).unwrap();
        // arms 1 and 2 straddle the top-2 boundary with a zero raw gap
        assert_relative_eq!(p.delta[1], 0.01, epsilon = 1e-12);
        assert_relative_eq!(p.delta[2], 0.01, epsilon = 1e-12);
        assert_relative_eq!(p.delta[0], 0.21, epsilon = 1e-12);
        assert_eq!(p.top_m, vec![0, 1]);
    }

    #[test]
    fn negative_tolerance_rejected() {
        assert!(matches!(
            ground_truth(&six_arm(), -0.1, 0.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn epsilon_feasibility_classes() {
        assert!(ComplexityProfile::is_epsilon_feasible(0.4, 0.5, 0.1));
        assert!(!ComplexityProfile::is_epsilon_feasible(0.45, 0.5, 0.1));
        assert!(ComplexityProfile::is_epsilon_infeasible(0.61, 0.5, 0.1));
        assert!(!ComplexityProfile::is_epsilon_infeasible(0.55, 0.5, 0.1));
    }

    proptest! {
        #[test]
        fn extreme_rank_gaps(
            means in prop::collection::hash_set(0u32..1000, 3..12),
            m_frac in 0.0..1.0f64,
        ) {
            let mu: Vec<f64> = means.into_iter().map(|v| v as f64 / 1000.0).collect();
            let n = mu.len();
            let m = 1 + ((n - 2) as f64 * m_frac) as usize;
            let costs = vec![0.1; n];
            let inst = BanditInstance::point_masses(&mu, &costs, 0.5, m).unwrap();
            let p = ground_truth(&inst, 0.0, 0.0).unwrap();
            let o = &p.ordered_means;
            let best = p.top_m[0];
            let worst = *inst.arm_ids().iter().min_by(|&&a, &&b| mu[a].total_cmp(&mu[b])).unwrap();
            prop_assert_eq!(p.delta[best], o[0] - o[m]);
            prop_assert_eq!(p.delta[worst], o[m - 1] - o[n - 1]);
            prop_assert!(p.delta.iter().all(|&d| d > 0.0));
            prop_assert!(p.delta_c.iter().all(|&d| d > 0.0));
            let dm = p.delta_c.iter().zip(&p.delta)
                .map(|(c, d)| (c / 2.0).min(d / 8.0)).fold(f64::INFINITY, f64::min);
            prop_assert_eq!(p.delta_min, dm);
        }
    }
}
