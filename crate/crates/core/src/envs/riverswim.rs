//! Continuous River Swim on [0, 1]. The high reward sits at observation 0
//! (upstream) and a small consolation reward at 1 (downstream). Swimming up
//! is stochastically switched to down, and displacements carry Gaussian
//! noise. The task is continuing: no step ever terminates.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::{EnvInfo, EnvStep, Environment};
use crate::seeding::Prng;

pub const UP: usize = 0;
pub const DOWN: usize = 1;

#[derive(Debug, Clone)]
pub struct RiverSwimParams {
    /// Probability that an `up` action is applied as `down`.
    pub p_switch: f64,
    /// Mean displacement magnitude per step.
    pub displacement: f64,
    /// Std of the displacement noise.
    pub noise_std: f64,
    /// `up` from [0, upstream_band] pays 1.
    pub upstream_band: f64,
    /// `down` from [1 - downstream_band, 1] pays 0.005.
    pub downstream_band: f64,
}

impl Default for RiverSwimParams {
    fn default() -> Self {
        RiverSwimParams {
            p_switch: 0.3,
            displacement: 0.1,
            noise_std: 0.01,
            upstream_band: 0.05,
            downstream_band: 0.05,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RiverSwim {
    params: RiverSwimParams,
    x: f64,
}

impl RiverSwim {
    pub fn new(params: RiverSwimParams) -> Self {
        RiverSwim { params, x: 1.0 }
    }

    pub fn position(&self) -> f64 {
        self.x
    }
}

impl Environment for RiverSwim {
    fn info(&self) -> EnvInfo {
        EnvInfo {
            obs_dim: 1,
            n_actions: 2,
            obs_lo: vec![0.0],
            obs_hi: vec![1.0],
            tabular_dim: None,
        }
    }

    fn reset(&mut self, rng: &mut Prng) -> Vec<f64> {
        self.x = rng.gen_range(0.9..1.0);
        vec![self.x]
    }

    fn step(&mut self, action: usize, rng: &mut Prng) -> EnvStep {
        assert!(action < 2, "riverswim actions are up (0) and down (1)");
        let p = &self.params;

        // Reward depends on the chosen action and the state it is taken from.
        let reward = if action == UP && self.x <= p.upstream_band {
            1.0
        } else if action == DOWN && self.x >= 1.0 - p.downstream_band {
            0.005
        } else {
            0.0
        };

        let applied_down = match action {
            UP => rng.gen_range(0.0..1.0) < p.p_switch,
            _ => true,
        };
        let magnitude = if p.noise_std > 0.0 {
            p.displacement + Normal::new(0.0, p.noise_std).unwrap().sample(rng)
        } else {
            p.displacement
        };
        self.x = if applied_down {
            (self.x + magnitude).clamp(0.0, 1.0)
        } else {
            (self.x - magnitude).clamp(0.0, 1.0)
        };

        EnvStep {
            reward,
            next_obs: vec![self.x],
            discount: 1.0,
            terminal: false,
            truncated: false,
        }
    }
}
