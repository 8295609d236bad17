use rand::Rng;
use rand_distr::{Beta, Distribution};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sampling law for one reward or cost channel of an arm. Every variant has
/// support inside `[0, 1]` and a closed-form mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ArmDistribution {
    PointMass { value: f64 },
    Bernoulli { p: f64 },
    Uniform { lo: f64, hi: f64 },
    Beta { alpha: f64, beta: f64 },
}

fn unit(x: f64) -> bool {
    (0.0..=1.0).contains(&x)
}

impl ArmDistribution {
    pub fn point_mass(value: f64) -> Result<Self> {
        let d = ArmDistribution::PointMass { value };
        d.validate()?;
        Ok(d)
    }

    pub fn bernoulli(p: f64) -> Result<Self> {
        let d = ArmDistribution::Bernoulli { p };
        d.validate()?;
        Ok(d)
    }

    pub fn uniform(lo: f64, hi: f64) -> Result<Self> {
        let d = ArmDistribution::Uniform { lo, hi };
        d.validate()?;
        Ok(d)
    }

    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        let d = ArmDistribution::Beta { alpha, beta };
        d.validate()?;
        Ok(d)
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            ArmDistribution::PointMass { value } => unit(value),
            ArmDistribution::Bernoulli { p } => unit(p),
            ArmDistribution::Uniform { lo, hi } => unit(lo) && unit(hi) && lo <= hi,
            ArmDistribution::Beta { alpha, beta } => {
                alpha > 0.0 && beta > 0.0 && alpha.is_finite() && beta.is_finite()
            }
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidDistribution(format!("{self:?}")))
        }
    }

    pub fn mean(&self) -> f64 {
        match *self {
            ArmDistribution::PointMass { value } => value,
            ArmDistribution::Bernoulli { p } => p,
            ArmDistribution::Uniform { lo, hi } => (lo + hi) / 2.0,
            ArmDistribution::Beta { alpha, beta } => alpha / (alpha + beta),
        }
    }

    /// Draws one value. Assumes `validate` has passed.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        match *self {
            ArmDistribution::PointMass { value } => value,
            ArmDistribution::Bernoulli { p } => {
                if rng.random_bool(p) {
                    1.0
                } else {
                    0.0
                }
            }
            ArmDistribution::Uniform { lo, hi } => lo + (hi - lo) * rng.random::<f64>(),
            ArmDistribution::Beta { alpha, beta } => Beta::new(alpha, beta)
                .expect("validated beta parameters")
                .sample(rng)
                .clamp(0.0, 1.0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(ArmDistribution::point_mass(1.2).is_err());
        assert!(ArmDistribution::bernoulli(-0.1).is_err());
        assert!(ArmDistribution::uniform(0.6, 0.4).is_err());
        assert!(ArmDistribution::uniform(0.0, 1.5).is_err());
        assert!(ArmDistribution::beta(0.0, 1.0).is_err());
        assert!(ArmDistribution::bernoulli(f64::NAN).is_err());
    }

    #[test]
    fn closed_form_means() {
        assert_eq!(ArmDistribution::point_mass(0.3).unwrap().mean(), 0.3);
        assert_eq!(ArmDistribution::bernoulli(0.7).unwrap().mean(), 0.7);
        assert_eq!(ArmDistribution::uniform(0.2, 0.6).unwrap().mean(), 0.4);
        assert_eq!(ArmDistribution::beta(2.0, 6.0).unwrap().mean(), 0.25);
    }

    #[test]
    fn bernoulli_law_of_large_numbers() {
        let p = 0.3;
        let d = ArmDistribution::bernoulli(p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let n = 100_000;
        let mean = (0..n).map(|_| d.sample(&mut rng)).sum::<f64>() / n as f64;
        let tol = 3.0 * (p * (1.0 - p) / n as f64).sqrt();
        assert!((mean - p).abs() <= tol, "mean {mean} tol {tol}");
    }

    #[test]
    fn serde_tagged_form() {
        let d: ArmDistribution =
            serde_json::from_str(r#"{"kind":"beta","alpha":2.0,"beta":3.0}"#).unwrap();
        assert_eq!(
            d,
            ArmDistribution::Beta {
                alpha: 2.0,
                beta: 3.0
            }
        );
        let s = serde_json::to_string(&ArmDistribution::Bernoulli { p: 0.5 }).unwrap();
        assert_eq!(s, r#"{"kind":"bernoulli","p":0.5}"#);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn any_distribution() -> impl Strategy<Value = ArmDistribution> {
        prop_oneof![
            (0.0..=1.0f64).prop_map(|value| ArmDistribution::PointMass { value }),
            (0.0..=1.0f64).prop_map(|p| ArmDistribution::Bernoulli { p }),
            (0.0..=1.0f64, 0.0..=1.0f64).prop_map(|(a, b)| ArmDistribution::Uniform {
                lo: a.min(b),
                hi: a.max(b)
            }),
            (0.05..20.0f64, 0.05..20.0f64)
                .prop_map(|(alpha, beta)| ArmDistribution::Beta { alpha, beta }),
        ]
    }

    proptest! {
        #[test]
        fn draws_stay_in_unit_interval(d in any_distribution(), seed in any::<u64>()) {
            prop_assert!(d.validate().is_ok());
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..64 {
                let x = d.sample(&mut rng);
                prop_assert!((0.0..=1.0).contains(&x), "{:?} drew {}", d, x);
            }
        }
    }
}
