//! Target networks and the Double-DQN style temporal-difference update.
//!
//! The update for one transition (s, a, r, s', gamma) moves the live
//! parameters by `eta * delta * grad q(s,a)` with
//! `delta = r + gamma * q_frozen(s', argmax_a' q_live(s', a')) - q_live(s, a)`:
//! the live network picks the bootstrap action, the frozen copy evaluates it.

use crate::approx::{FeatureMap, Features, Optimizer, QFunction};
use crate::learner::policy::argmax_random_tie;
use crate::learner::replay::Transition;
use crate::seeding::Prng;

/// A live function and its periodically synced frozen copy.
#[derive(Debug, Clone)]
pub struct TargetNetPair {
    pub live: QFunction,
    pub frozen: QFunction,
    pub period: usize,
    pub since_sync: usize,
}

impl TargetNetPair {
    pub fn new(live: QFunction, period: usize) -> Self {
        assert!(period > 0);
        let frozen = live.clone();
        TargetNetPair { live, frozen, period, since_sync: 0 }
    }

    pub fn sync(&mut self) {
        self.frozen.sync_from(&self.live);
        self.since_sync = 0;
    }

    /// Count one agent step; sync when the period elapses. Returns whether a
    /// sync happened.
    pub fn tick(&mut self) -> bool {
        self.since_sync += 1;
        if self.since_sync >= self.period {
            self.sync();
            true
        } else {
            false
        }
    }
}

/// One prepared element of a TD mini-batch. `offset_cur`/`offset_next` carry
/// any frozen additive term (a scaled prior) on the prediction and bootstrap
/// sides; gradients never flow through them.
#[derive(Debug, Clone)]
pub struct TdItem {
    pub feats: Features,
    pub action: usize,
    pub reward: f64,
    pub discount: f64,
    pub next_feats: Features,
    pub next_action: usize,
    pub offset_cur: f64,
    pub offset_next: f64,
}

impl TdItem {
    pub fn new(
        fmap: &FeatureMap,
        t: &Transition,
        reward: f64,
        discount: f64,
        next_action: usize,
    ) -> Self {
        TdItem {
            feats: fmap.featurize(&t.obs),
            action: t.action,
            reward,
            discount,
            next_feats: fmap.featurize(&t.next_obs),
            next_action,
            offset_cur: 0.0,
            offset_next: 0.0,
        }
    }
}

/// A trainable value function bundled with its target copy and optimizer.
#[derive(Debug, Clone)]
pub struct ValueHead {
    pub pair: TargetNetPair,
    opt: Optimizer,
    grad: Vec<f64>,
}

impl ValueHead {
    pub fn new(q: QFunction, opt: Optimizer, period: usize) -> Self {
        let n = q.n_params();
        ValueHead { pair: TargetNetPair::new(q, period), opt, grad: vec![0.0; n] }
    }

    pub fn live(&self) -> &QFunction {
        &self.pair.live
    }

    pub fn frozen(&self) -> &QFunction {
        &self.pair.frozen
    }

    pub fn tick(&mut self) -> bool {
        self.pair.tick()
    }

    /// One optimizer step on the mean half-squared TD error of `items`.
    /// Only the taken action's output receives gradient. Returns the loss.
    pub fn td_step(&mut self, items: &[TdItem]) -> f64 {
        assert!(!items.is_empty(), "td_step needs a nonempty batch");
        let m = items.len() as f64;
        let mut deltas = Vec::with_capacity(items.len());
        let mut loss = 0.0;
        for it in items {
            let pred = self.pair.live.value(&it.feats, it.action) + it.offset_cur;
            let bootstrap = if it.discount != 0.0 {
                it.discount
                    * (self.pair.frozen.value(&it.next_feats, it.next_action) + it.offset_next)
            } else {
                0.0
            };
            let delta = it.reward + bootstrap - pred;
            loss += 0.5 * delta * delta / m;
            deltas.push(delta);
        }
        self.grad.fill(0.0);
        for (it, delta) in items.iter().zip(deltas.iter()) {
            self.pair
                .live
                .accumulate_grad(&it.feats, it.action, -delta / m, &mut self.grad);
        }
        self.opt.step(self.pair.live.params_mut(), &self.grad);
        loss
    }

    /// One supervised regression step of the live function toward per-item
    /// target values at the taken actions, with loss `(target - value)^2`
    /// averaged over the batch.
    pub fn regression_step(&mut self, items: &[(Features, usize, f64)]) -> f64 {
        assert!(!items.is_empty());
        let m = items.len() as f64;
        let mut residuals = Vec::with_capacity(items.len());
        let mut loss = 0.0;
        for (feats, action, target) in items {
            let r = target - self.pair.live.value(feats, *action);
            loss += r * r / m;
            residuals.push(r);
        }
        self.grad.fill(0.0);
        for ((feats, action, _), r) in items.iter().zip(residuals.iter()) {
            self.pair
                .live
                .accumulate_grad(feats, *action, -2.0 * r / m, &mut self.grad);
        }
        self.opt.step(self.pair.live.params_mut(), &self.grad);
        loss
    }

    /// The plain Double-DQN update on a replay batch: greedy bootstrap
    /// actions from the live network, rewards and discounts from the
    /// transitions.
    pub fn ddqn_update(
        &mut self,
        batch: &[&Transition],
        fmap: &FeatureMap,
        rng: &mut Prng,
    ) -> f64 {
        let items: Vec<TdItem> = batch
            .iter()
            .map(|t| {
                let next_feats = fmap.featurize(&t.next_obs);
                let a_next = if t.discount != 0.0 {
                    argmax_random_tie(&self.pair.live.values(&next_feats), rng)
                } else {
                    0
                };
                TdItem::new(fmap, t, t.reward, t.discount, a_next)
            })
            .collect();
        self.td_step(&items)
    }
}

/// The Double-DQN bootstrap target for a single transition.
pub fn ddqn_target(
    q_live: &QFunction,
    q_frozen: &QFunction,
    t: &Transition,
    fmap: &FeatureMap,
    rng: &mut Prng,
) -> f64 {
    if t.discount == 0.0 {
        return t.reward;
    }
    let next_feats = fmap.featurize(&t.next_obs);
    let a_next = argmax_random_tie(&q_live.values(&next_feats), rng);
    t.reward + t.discount * q_frozen.value(&next_feats, a_next)
}
