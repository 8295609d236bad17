use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::ArmDistribution;
use crate::error::{Error, Result};
use crate::ArmId;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Arm {
    pub reward: ArmDistribution,
    pub cost: ArmDistribution,
}

impl Arm {
    pub fn new(reward: ArmDistribution, cost: ArmDistribution) -> Self {
        Arm { reward, cost }
    }
}

/// Serialized form of an instance; arm ids are list positions.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub tau: f64,
    pub m: usize,
    pub arms: Vec<Arm>,
}

/// A constrained bandit: arms with reward and cost laws on `[0, 1]`, a cost
/// threshold `tau` and the number `m` of feasible arms to identify.
///
/// Construction enforces `|A| >= 2`, `tau > 0` and `m < |A_f|`, with `A_f`
/// taken from the true cost means.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "InstanceSpec", into = "InstanceSpec")]
pub struct BanditInstance {
    arms: Vec<Arm>,
    tau: f64,
    m: usize,
}

impl TryFrom<InstanceSpec> for BanditInstance {
    type Error = Error;

    fn try_from(spec: InstanceSpec) -> Result<Self> {
        BanditInstance::new(spec.arms, spec.tau, spec.m)
    }
}

impl From<BanditInstance> for InstanceSpec {
    fn from(inst: BanditInstance) -> Self {
        InstanceSpec {
            tau: inst.tau,
            m: inst.m,
            arms: inst.arms,
        }
    }
}

impl BanditInstance {
    pub fn new(arms: Vec<Arm>, tau: f64, m: usize) -> Result<Self> {
        if arms.len() < 2 {
            return Err(Error::InvalidInstance(format!(
                "need at least 2 arms, got {}",
                arms.len()
            )));
        }
        if !(tau > 0.0 && tau.is_finite()) {
            return Err(Error::InvalidInstance(format!(
                "tau must be positive, got {tau}"
            )));
        }
        if m == 0 {
            return Err(Error::InvalidInstance("m must be at least 1".into()));
        }
        for arm in &arms {
            arm.reward.validate()?;
            arm.cost.validate()?;
        }
        let inst = BanditInstance { arms, tau, m };
        let feasible = inst.feasible_set().len();
        if m >= feasible {
            return Err(Error::TargetCountNotBelowFeasible { m, feasible });
        }
        Ok(inst)
    }

    /// Builds an instance from point-mass rewards and costs.
    pub fn point_masses(rewards: &[f64], costs: &[f64], tau: f64, m: usize) -> Result<Self> {
        Self::from_pairs(rewards, costs, tau, m, ArmDistribution::point_mass)
    }

    /// Builds an instance from Bernoulli rewards and costs.
    pub fn bernoulli(rewards: &[f64], costs: &[f64], tau: f64, m: usize) -> Result<Self> {
        Self::from_pairs(rewards, costs, tau, m, ArmDistribution::bernoulli)
    }

    fn from_pairs(
        rewards: &[f64],
        costs: &[f64],
        tau: f64,
        m: usize,
        make: fn(f64) -> Result<ArmDistribution>,
    ) -> Result<Self> {
        if rewards.len() != costs.len() {
            return Err(Error::InvalidInstance(format!(
                "{} reward means but {} cost means",
                rewards.len(),
                costs.len()
            )));
        }
        let arms = rewards
            .iter()
            .zip(costs)
            .map(|(&r, &c)| Ok(Arm::new(make(r)?, make(c)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(arms, tau, m)
    }

    pub fn num_arms(&self) -> usize {
        self.arms.len()
    }

    pub fn arms(&self) -> &[Arm] {
        &self.arms
    }

    pub fn arm(&self, id: ArmId) -> Result<&Arm> {
        self.arms.get(id).ok_or(Error::UnknownArm(id))
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arm_ids(&self) -> Vec<ArmId> {
        (0..self.arms.len()).collect()
    }

    /// True reward mean of each arm.
    pub fn reward_means(&self) -> Vec<f64> {
        self.arms.iter().map(|a| a.reward.mean()).collect()
    }

    /// True cost mean of each arm.
    pub fn cost_means(&self) -> Vec<f64> {
        self.arms.iter().map(|a| a.cost.mean()).collect()
    }

    /// Arms with `C(a) <= tau`, ascending by id.
    pub fn feasible_set(&self) -> Vec<ArmId> {
        self.arms
            .iter()
            .enumerate()
            .filter(|(_, a)| a.cost.mean() <= self.tau)
            .map(|(i, _)| i)
            .collect()
    }

    /// Draws one `(reward, cost)` pair for `arm`.
    pub fn draw(&self, arm: ArmId, stream: &mut RandomStream) -> Result<SampleDraw> {
        let spec = *self.arm(arm)?;
        let reward = spec.reward.sample(stream.channel(arm, Channel::Reward));
        let cost = spec.cost.sample(stream.channel(arm, Channel::Cost));
        stream.clock += 1;
        Ok(SampleDraw {
            arm,
            reward,
            cost,
            time_index: stream.clock,
        })
    }
}

/// One pull of one arm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SampleDraw {
    pub arm: ArmId,
    pub reward: f64,
    pub cost: f64,
    /// 1-based position of this pull within the run.
    pub time_index: u64,
}

#[derive(Debug, Clone, Copy)]
enum Channel {
    Reward = 0,
    Cost = 1,
}

/// Per-trial source of randomness.
///
/// Every `(arm, channel)` pair owns a separate ChaCha8 stream keyed by the
/// trial seed, so the reward tape of one arm does not depend on how many
/// draws other arms or the cost channel have consumed.
#[derive(Debug, Clone)]
pub struct RandomStream {
    seed: u64,
    channels: Vec<Option<ChaCha8Rng>>,
    clock: u64,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        RandomStream {
            seed,
            channels: Vec::new(),
            clock: 0,
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Number of pulls drawn so far.
    pub fn pulls(&self) -> u64 {
        self.clock
    }

    fn channel(&mut self, arm: ArmId, channel: Channel) -> &mut ChaCha8Rng {
        let idx = arm * 2 + channel as usize;
        if self.channels.len() <= idx {
            self.channels.resize(idx + 1, None);
        }
        let seed = self.seed;
        self.channels[idx].get_or_insert_with(|| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            rng
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_bernoulli() -> BanditInstance {
        BanditInstance::bernoulli(&[0.6, 0.4, 0.5], &[0.2, 0.3, 0.9], 0.5, 1).unwrap()
    }

    #[test]
    fn construction_checks() {
        let one = vec![Arm::new(
            ArmDistribution::point_mass(0.5).unwrap(),
            ArmDistribution::point_mass(0.1).unwrap(),
        )];
        assert!(BanditInstance::new(one, 0.5, 1).is_err());
        // only one feasible arm with m = 1
        let err = BanditInstance::point_masses(&[0.5, 0.6], &[0.2, 0.9], 0.5, 1).unwrap_err();
        assert!(matches!(
            err,
            Error::TargetCountNotBelowFeasible { m: 1, feasible: 1 }
        ));
        assert!(BanditInstance::point_masses(&[0.5, 0.6], &[0.2, 0.3], 0.0, 1).is_err());
        assert!(BanditInstance::point_masses(&[0.5, 0.6], &[0.2, 0.3], 0.5, 0).is_err());
    }

    #[test]
    fn point_mass_draws_are_exact() {
        let inst = BanditInstance::point_masses(&[0.8, 0.1], &[0.2, 0.3], 0.5, 1).unwrap();
        let mut s = RandomStream::new(3);
        for t in 1..=5 {
            let d = inst.draw(0, &mut s).unwrap();
            assert_eq!((d.reward, d.cost, d.time_index), (0.8, 0.2, t));
        }
    }

    #[test]
    fn unknown_arm() {
        let mut s = RandomStream::new(0);
        assert!(matches!(
            two_bernoulli().draw(7, &mut s),
            Err(Error::UnknownArm(7))
        ));
    }

    #[test]
    fn same_seed_same_tape() {
        let inst = two_bernoulli();
        let tape = |seed| {
            let mut s = RandomStream::new(seed);
            (0..200)
                .map(|i| inst.draw(i % 3, &mut s).unwrap())
                .collect::<Vec<_>>()
        };
        assert_eq!(tape(9), tape(9));
        assert_ne!(tape(9), tape(10));
    }

    #[test]
    fn reward_tape_is_independent_of_other_arms() {
        let inst = two_bernoulli();
        let mut solo = RandomStream::new(5);
        let a: Vec<f64> = (0..100)
            .map(|_| inst.draw(0, &mut solo).unwrap().reward)
            .collect();

        let mut mixed = RandomStream::new(5);
        let mut b = Vec::new();
        for i in 0..100 {
            for _ in 0..(i % 4) {
                inst.draw(1, &mut mixed).unwrap();
                inst.draw(2, &mut mixed).unwrap();
            }
            b.push(inst.draw(0, &mut mixed).unwrap().reward);
        }
        assert_eq!(a, b);
    }

    #[test]
    fn serde_validates_on_load() {
        let bad = r#"{"tau":0.5,"m":2,"arms":[
            {"reward":{"kind":"point_mass","value":0.9},"cost":{"kind":"point_mass","value":0.1}},
            {"reward":{"kind":"point_mass","value":0.8},"cost":{"kind":"point_mass","value":0.1}}]}"#;
        assert!(serde_json::from_str::<BanditInstance>(bad).is_err());
        let inst = two_bernoulli();
        let back: BanditInstance =
            serde_json::from_str(&serde_json::to_string(&inst).unwrap()).unwrap();
        assert_eq!(back, inst);
    }
}
