//! The value-bonus agent: Double DQN plus an RQF ensemble whose maximum
//! predictor-target error, scaled by c, is added to the action values inside
//! the behavior policy's argmax.
//!
//! Per environment step the agent performs exactly two mini-batch updates
//! regardless of ensemble size: one on the main value function and one on a
//! uniformly chosen RQF predictor. The supervised variant (VBE-SL) regresses
//! the chosen predictor directly onto its frozen target instead of running
//! the TD update.

use rand::Rng;

use crate::approx::FeatureMap;
use crate::learner::{
    select_action_optimistic, AgentConfig, ReplayBuffer, TargetPolicyMode, TdItem, Transition,
    ValueHead,
};
use crate::seeding::Prng;

use super::agent::{Agent, StepReport};
use super::rqf::{NextActionRule, RqfEnsemble};

pub struct VbeAgent {
    fmap: FeatureMap,
    head: ValueHead,
    ens: RqfEnsemble,
    buffer: ReplayBuffer,
    cfg: AgentConfig,
    supervised: bool,
    last_member: Option<usize>,
}

impl VbeAgent {
    pub fn new(
        fmap: FeatureMap,
        head: ValueHead,
        ens: RqfEnsemble,
        cfg: AgentConfig,
        supervised: bool,
    ) -> Self {
        let buffer = ReplayBuffer::new(cfg.buffer_capacity);
        VbeAgent { fmap, head, ens, buffer, cfg, supervised, last_member: None }
    }

    pub fn ensemble(&self) -> &RqfEnsemble {
        &self.ens
    }

    pub fn head(&self) -> &ValueHead {
        &self.head
    }

    fn next_rule(&self) -> NextActionRule {
        match self.cfg.target_policy {
            TargetPolicyMode::Greedy => NextActionRule::GreedyMain,
            TargetPolicyMode::Optimistic => NextActionRule::OptimisticMain,
        }
    }

    /// Main-value update with the configured target-policy rule.
    fn update_main(&mut self, rng: &mut Prng) {
        let batch = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(b) => b,
            Err(_) => return,
        };
        let rule = self.next_rule();
        let items: Vec<TdItem> = batch
            .iter()
            .map(|t| {
                let next_feats = self.fmap.featurize(&t.next_obs);
                let a_next = if t.discount != 0.0 {
                    self.ens.next_action(
                        rule,
                        self.head.live(),
                        self.cfg.c,
                        &next_feats,
                        rng,
                    )
                } else {
                    0
                };
                TdItem::new(&self.fmap, t, t.reward, t.discount, a_next)
            })
            .collect();
        self.head.td_step(&items);
    }

    /// One update of a uniformly sampled ensemble member.
    fn update_one_rqf(&mut self, rng: &mut Prng) -> usize {
        let i = rng.gen_range(0..self.ens.len());
        let batch = match self.buffer.sample(self.cfg.batch, rng) {
            Ok(b) => b,
            Err(_) => return i,
        };
        if self.supervised {
            self.ens.sl_update(i, &batch, &self.fmap);
        } else {
            let rule = self.next_rule();
            // The ensemble is borrowed for bonus lookups inside action
            // selection, so split the borrow: clone nothing, pass the live
            // main net in.
            let head_live = &self.head;
            self.ens.td_update(
                i,
                &batch,
                &self.fmap,
                rule,
                head_live.live(),
                self.cfg.c,
                rng,
            );
        }
        i
    }

    /// Index of the member updated on the most recent step, for tests.
    pub fn last_updated_member(&self) -> Option<usize> {
        self.last_member
    }
}

impl VbeAgent {
    fn tick_all(&mut self) -> bool {
        let synced = self.head.tick();
        self.ens.tick();
        synced
    }
}

impl Agent for VbeAgent {
    fn act(&mut self, obs: &[f64], rng: &mut Prng) -> usize {
        let feats = self.fmap.featurize(obs);
        let q = self.head.live().values(&feats);
        let b = self.ens.bonus_all(&feats);
        select_action_optimistic(&q, &b, self.cfg.c, rng)
    }

    fn observe(&mut self, t: Transition, rng: &mut Prng) -> StepReport {
        self.buffer.add(t);
        self.update_main(rng);
        let i = self.update_one_rqf(rng);
        self.last_member = Some(i);
        let synced = self.tick_all();
        StepReport { updates: 2, synced }
    }

    fn action_values(&self, obs: &[f64]) -> Vec<f64> {
        self.head.live().values(&self.fmap.featurize(obs))
    }

    fn bonus_values(&self, obs: &[f64]) -> Option<Vec<f64>> {
        Some(self.ens.bonus_all(&self.fmap.featurize(obs)))
    }
}
