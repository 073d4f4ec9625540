//! The undirected baseline: Double DQN with an epsilon-greedy behavior
//! policy.

use crate::approx::FeatureMap;
use crate::learner::{select_action_eps_greedy, AgentConfig, ReplayBuffer, Transition, ValueHead};
use crate::seeding::Prng;

use super::agent::{Agent, StepReport};

pub struct EpsGreedyAgent {
    fmap: FeatureMap,
    head: ValueHead,
    buffer: ReplayBuffer,
    cfg: AgentConfig,
}

impl EpsGreedyAgent {
    pub fn new(fmap: FeatureMap, head: ValueHead, cfg: AgentConfig) -> Self {
        let buffer = ReplayBuffer::new(cfg.buffer_capacity);
        EpsGreedyAgent { fmap, head, buffer, cfg }
    }

    pub fn head(&self) -> &ValueHead {
        &self.head
    }
}

impl Agent for EpsGreedyAgent {
    fn act(&mut self, obs: &[f64], rng: &mut Prng) -> usize {
        let q = self.head.live().values(&self.fmap.featurize(obs));
        select_action_eps_greedy(&q, self.cfg.epsilon, rng)
    }

    fn observe(&mut self, t: Transition, rng: &mut Prng) -> StepReport {
        self.buffer.add(t);
        let updates = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(batch) => {
                self.head.ddqn_update(&batch, &self.fmap, rng);
                1
            }
            Err(_) => 0,
        };
        let synced = self.head.tick();
        StepReport { updates, synced }
    }

    fn action_values(&self, obs: &[f64]) -> Vec<f64> {
        self.head.live().values(&self.fmap.featurize(obs))
    }
}
