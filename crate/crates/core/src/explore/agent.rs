//! The interface every agent exposes to the experiment harness.

use crate::learner::Transition;
use crate::seeding::Prng;

/// What happened inside one `observe` call.
#[derive(Debug, Clone, Copy, Default)]
pub struct StepReport {
    /// Number of mini-batch updates performed.
    pub updates: usize,
    /// Whether target networks were synced on this step.
    pub synced: bool,
}

pub trait Agent {
    /// Called at every episode start (and once before the first step).
    fn begin_episode(&mut self, _rng: &mut Prng) {}

    /// Choose an action for the raw observation.
    fn act(&mut self, obs: &[f64], rng: &mut Prng) -> usize;

    /// Ingest a transition: store it, update, and advance target networks.
    fn observe(&mut self, t: Transition, rng: &mut Prng) -> StepReport;

    /// Current action values at an observation, for diagnostics.
    fn action_values(&self, obs: &[f64]) -> Vec<f64>;

    /// Current behavior bonus per action, if the agent has one.
    fn bonus_values(&self, _obs: &[f64]) -> Option<Vec<f64>> {
        None
    }
}
