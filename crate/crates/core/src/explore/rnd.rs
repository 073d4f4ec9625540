//! Random network distillation as a value-bonus method. A predictor network
//! is regressed onto a frozen random target's 64-dimensional embedding; the
//! squared embedding error at the next state is the intrinsic reward, and a
//! non-episodic intrinsic value head turns it into a behavior bonus.

use crate::approx::{FeatureMap, Features, Optimizer, QFunction};
use crate::learner::{select_action_optimistic, AgentConfig, ReplayBuffer, TdItem, Transition, ValueHead};
use crate::learner::TargetPolicyMode;
use crate::seeding::Prng;

use super::agent::{Agent, StepReport};
use super::intrinsic::IntrinsicValueHead;

/// Squared L2 error between the target and predictor embeddings of a state.
pub fn rnd_bonus(target: &QFunction, predictor: &QFunction, feats: &Features) -> f64 {
    let t = target.values(feats);
    let p = predictor.values(feats);
    t.iter().zip(p.iter()).map(|(a, b)| (a - b) * (a - b)).sum()
}

pub struct RndAgent {
    fmap: FeatureMap,
    head: ValueHead,
    intrinsic: IntrinsicValueHead,
    embed_target: QFunction,
    embed_pred: QFunction,
    embed_opt: Optimizer,
    embed_grad: Vec<f64>,
    buffer: ReplayBuffer,
    cfg: AgentConfig,
}

impl RndAgent {
    pub fn new(
        fmap: FeatureMap,
        head: ValueHead,
        intrinsic: IntrinsicValueHead,
        embed_target: QFunction,
        embed_pred: QFunction,
        embed_opt: Optimizer,
        cfg: AgentConfig,
    ) -> Self {
        let buffer = ReplayBuffer::new(cfg.buffer_capacity);
        let n = embed_pred.n_params();
        RndAgent {
            fmap,
            head,
            intrinsic,
            embed_target,
            embed_pred,
            embed_opt,
            embed_grad: vec![0.0; n],
            buffer,
            cfg,
        }
    }

    pub fn embed_bonus(&self, feats: &Features) -> f64 {
        rnd_bonus(&self.embed_target, &self.embed_pred, feats)
    }

    /// Regress the predictor embedding onto the frozen target at the
    /// batch's next states. Mean squared error over the batch.
    fn embed_update(&mut self, batch: &[&Transition]) {
        let m = batch.len() as f64;
        self.embed_grad.fill(0.0);
        for t in batch {
            let feats = self.fmap.featurize(&t.next_obs);
            let target = self.embed_target.values(&feats);
            let pred = self.embed_pred.values(&feats);
            for (o, (pv, tv)) in pred.iter().zip(target.iter()).enumerate() {
                // d/dp of (p - t)^2, averaged over the batch.
                let coeff = 2.0 * (pv - tv) / m;
                self.embed_pred.accumulate_grad(&feats, o, coeff, &mut self.embed_grad);
            }
        }
        self.embed_opt.step(self.embed_pred.params_mut(), &self.embed_grad);
    }

    fn update_main(&mut self, rng: &mut Prng) {
        let batch = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(b) => b,
            Err(_) => return,
        };
        let items: Vec<TdItem> = batch
            .iter()
            .map(|t| {
                let next_feats = self.fmap.featurize(&t.next_obs);
                let a_next = if t.discount != 0.0 {
                    let q = self.head.live().values(&next_feats);
                    match self.cfg.target_policy {
                        TargetPolicyMode::Greedy => {
                            crate::learner::argmax_random_tie(&q, rng)
                        }
                        TargetPolicyMode::Optimistic => {
                            let b = self.intrinsic.values(&next_feats);
                            select_action_optimistic(&q, &b, self.cfg.c, rng)
                        }
                    }
                } else {
                    0
                };
                TdItem::new(&self.fmap, t, t.reward, t.discount, a_next)
            })
            .collect();
        self.head.td_step(&items);
    }
}

impl Agent for RndAgent {
    fn act(&mut self, obs: &[f64], rng: &mut Prng) -> usize {
        let feats = self.fmap.featurize(obs);
        let q = self.head.live().values(&feats);
        let b = self.intrinsic.values(&feats);
        select_action_optimistic(&q, &b, self.cfg.c, rng)
    }

    fn observe(&mut self, t: Transition, rng: &mut Prng) -> StepReport {
        self.buffer.add(t);
        self.update_main(rng);
        let batch = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(b) => b,
            Err(_) => {
                let synced = self.head.tick() | self.intrinsic.tick();
                return StepReport { updates: 0, synced };
            }
        };
        // Intrinsic rewards from the current (pre-update) embeddings, at the
        // transitions' next states.
        let rewards: Vec<f64> = batch
            .iter()
            .map(|t| self.embed_bonus(&self.fmap.featurize(&t.next_obs)))
            .collect();
        self.embed_update(&batch);
        self.intrinsic.update(&batch, &self.fmap, &rewards, rng);
        let synced = self.head.tick() | self.intrinsic.tick();
        StepReport { updates: 3, synced }
    }

    fn action_values(&self, obs: &[f64]) -> Vec<f64> {
        self.head.live().values(&self.fmap.featurize(obs))
    }

    fn bonus_values(&self, obs: &[f64]) -> Option<Vec<f64>> {
        Some(self.intrinsic.values(&self.fmap.featurize(obs)))
    }
}
