//! A value function trained on intrinsic reward bonuses. Reward-bonus
//! methods (RND, ACB) learn their behavior bonus b(s,a) this way: the bonus
//! propagates only retroactively, after a reward bonus has been observed.

use crate::approx::{FeatureMap, Features, QFunction};
use crate::learner::{argmax_random_tie, TdItem, Transition, ValueHead};
use crate::seeding::Prng;

/// The intrinsic head is non-episodic: its TD targets keep the agent's
/// discount even on terminal transitions, so intrinsic value flows across
/// episode boundaries.
pub struct IntrinsicValueHead {
    pub head: ValueHead,
    pub non_episodic: bool,
    gamma: f64,
}

impl IntrinsicValueHead {
    pub fn new(head: ValueHead, gamma: f64) -> Self {
        IntrinsicValueHead { head, non_episodic: true, gamma }
    }

    pub fn values(&self, feats: &Features) -> Vec<f64> {
        self.head.live().values(feats)
    }

    pub fn live(&self) -> &QFunction {
        self.head.live()
    }

    /// One TD step on `batch` with the given intrinsic rewards. Bootstrap
    /// actions come from this head's own live argmax.
    pub fn update(
        &mut self,
        batch: &[&Transition],
        fmap: &FeatureMap,
        rewards: &[f64],
        rng: &mut Prng,
    ) -> f64 {
        let items: Vec<TdItem> = batch
            .iter()
            .zip(rewards.iter())
            .map(|(t, &r)| {
                let next_feats = fmap.featurize(&t.next_obs);
                let discount = if self.non_episodic { self.gamma } else { t.discount };
                let a_next =
                    argmax_random_tie(&self.head.live().values(&next_feats), rng);
                TdItem::new(fmap, t, r, discount, a_next)
            })
            .collect();
        self.head.td_step(&items)
    }

    pub fn tick(&mut self) -> bool {
        self.head.tick()
    }
}
