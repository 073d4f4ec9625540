//! Bootstrap DQN with additive random prior functions.
//!
//! Each head composes a learnable function with a frozen random prior,
//! q_i(s,a) = f_i(s,a) + c * p_i(s,a). One head is sampled uniformly per
//! episode and followed greedily (Thompson-style). Every head trains on the
//! same mini-batch; there is no data bootstrapping. DQN-P is the k = 1
//! special case, where resampling is a no-op.

use rand::Rng;

use crate::approx::{FeatureMap, Features, QFunction};
use crate::learner::{
    argmax_random_tie, AgentConfig, ReplayBuffer, TdItem, Transition, ValueHead,
};
use crate::seeding::Prng;

use super::agent::{Agent, StepReport};

/// A learnable function with its frozen additive prior.
pub struct PriorHead {
    pub head: ValueHead,
    pub prior: QFunction,
}

impl PriorHead {
    /// Composed values f(s,a) + c * p(s,a) from the live function.
    pub fn composed_values(&self, feats: &Features, c: f64) -> Vec<f64> {
        let mut v = self.head.live().values(feats);
        let p = self.prior.values(feats);
        for (vi, pi) in v.iter_mut().zip(p.iter()) {
            *vi += c * pi;
        }
        v
    }

    /// One TD step on a batch with externally chosen bootstrap actions.
    /// Gradients flow only through the learnable part.
    pub fn update(
        &mut self,
        batch: &[&Transition],
        fmap: &FeatureMap,
        c: f64,
        next_actions: &[usize],
    ) -> f64 {
        let items: Vec<TdItem> = batch
            .iter()
            .zip(next_actions.iter())
            .map(|(t, &a_next)| {
                let feats = fmap.featurize(&t.obs);
                let next_feats = fmap.featurize(&t.next_obs);
                let offset_cur = c * self.prior.value(&feats, t.action);
                let offset_next = if t.discount != 0.0 {
                    c * self.prior.value(&next_feats, a_next)
                } else {
                    0.0
                };
                TdItem {
                    feats,
                    action: t.action,
                    reward: t.reward,
                    discount: t.discount,
                    next_feats,
                    next_action: a_next,
                    offset_cur,
                    offset_next,
                }
            })
            .collect();
        self.head.td_step(&items)
    }

    /// Greedy bootstrap action in the composed live value.
    pub fn greedy_next(&self, next_feats: &Features, c: f64, rng: &mut Prng) -> usize {
        argmax_random_tie(&self.composed_values(next_feats, c), rng)
    }
}

pub struct BdqnAgent {
    fmap: FeatureMap,
    heads: Vec<PriorHead>,
    buffer: ReplayBuffer,
    cfg: AgentConfig,
    active: usize,
    resample: bool,
}

impl BdqnAgent {
    pub fn new(fmap: FeatureMap, heads: Vec<PriorHead>, cfg: AgentConfig, resample: bool) -> Self {
        assert!(!heads.is_empty());
        let buffer = ReplayBuffer::new(cfg.buffer_capacity);
        BdqnAgent { fmap, heads, buffer, cfg, active: 0, resample }
    }

    pub fn active_head(&self) -> usize {
        self.active
    }

    pub fn heads(&self) -> &[PriorHead] {
        &self.heads
    }
}

impl Agent for BdqnAgent {
    fn begin_episode(&mut self, rng: &mut Prng) {
        if self.resample {
            self.active = rng.gen_range(0..self.heads.len());
        }
    }

    fn act(&mut self, obs: &[f64], rng: &mut Prng) -> usize {
        let feats = self.fmap.featurize(obs);
        let v = self.heads[self.active].composed_values(&feats, self.cfg.c);
        argmax_random_tie(&v, rng)
    }

    fn observe(&mut self, t: Transition, rng: &mut Prng) -> StepReport {
        self.buffer.add(t);
        let batch = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(b) => b,
            Err(_) => return StepReport::default(),
        };
        let c = self.cfg.c;
        let mut updates = 0;
        for head in &mut self.heads {
            let next_actions: Vec<usize> = batch
                .iter()
                .map(|t| {
                    if t.discount != 0.0 {
                        head.greedy_next(&self.fmap.featurize(&t.next_obs), c, rng)
                    } else {
                        0
                    }
                })
                .collect();
            head.update(&batch, &self.fmap, c, &next_actions);
            updates += 1;
        }
        let mut synced = false;
        for head in &mut self.heads {
            synced = head.head.tick() || synced;
        }
        StepReport { updates, synced }
    }

    fn action_values(&self, obs: &[f64]) -> Vec<f64> {
        let feats = self.fmap.featurize(obs);
        self.heads[self.active].composed_values(&feats, self.cfg.c)
    }
}
