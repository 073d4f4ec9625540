//! The four classic exploration environments, all using transition-based
//! discounting: the step's discount is 0 exactly when the episode terminates,
//! so episodic and continuing tasks share one interface.

mod deepsea;
mod mountaincar;
mod puddleworld;
mod riverswim;

pub use deepsea::{Deepsea, DeepseaState};
pub use mountaincar::MountainCar;
pub use puddleworld::{PuddleWorld, PuddleWorldParams};
pub use riverswim::{RiverSwim, RiverSwimParams};

use crate::seeding::Prng;

/// One environment transition.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvStep {
    pub reward: f64,
    pub next_obs: Vec<f64>,
    /// 0.0 exactly when `terminal` is true, 1.0 otherwise.
    pub discount: f64,
    pub terminal: bool,
    /// Episode cut off by the step limit; the transition still bootstraps.
    pub truncated: bool,
}

/// Static facts an agent needs to build its function approximator.
#[derive(Debug, Clone)]
pub struct EnvInfo {
    pub obs_dim: usize,
    pub n_actions: usize,
    pub obs_lo: Vec<f64>,
    pub obs_hi: Vec<f64>,
    /// Number of distinct states when observations are state indices.
    pub tabular_dim: Option<usize>,
}

pub trait Environment {
    fn info(&self) -> EnvInfo;
    fn reset(&mut self, rng: &mut Prng) -> Vec<f64>;
    /// Step the environment. Panics if called on a terminal state.
    fn step(&mut self, action: usize, rng: &mut Prng) -> EnvStep;
}

/// Environment names accepted in configs.
pub const ENV_NAMES: [&str; 5] = [
    "deepsea",
    "deepsea_pure",
    "riverswim",
    "puddleworld",
    "mountaincar_sparse",
];
