//! The random action-value function (RQF) ensemble.
//!
//! Each member pairs a frozen random target f*_i with a trainable predictor
//! f^_i of the same architecture and init family. The predictor learns by
//! temporal difference on the implicit reward
//!
//!     r_i = f*_i(s, a) - gamma * f*_i(s', a')
//!
//! whose TD fixed point under any fixed action rule is f*_i itself, so the
//! value bonus max_i |f^_i - f*_i| can decay to zero. The bootstrap action
//! a' comes from the main value function, not from the ensemble.

use rand::Rng;

use crate::approx::{FeatureMap, Features, Optimizer, QFunction};
use crate::learner::{argmax_random_tie, select_action_optimistic, TdItem, Transition, ValueHead};
use crate::seeding::Prng;

/// How bootstrap actions a' are chosen inside updates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NextActionRule {
    /// argmax of the main live value function (the default, off-policy rule).
    GreedyMain,
    /// argmax of main value plus scaled bonus (the on-policy variant).
    OptimisticMain,
    /// Uniformly random; used by fixed-policy oracles.
    Uniform,
}

#[derive(Debug, Clone)]
pub struct RqfEnsemble {
    targets: Vec<QFunction>,
    predictors: Vec<ValueHead>,
}

impl RqfEnsemble {
    /// Build `k` members. Targets and predictors are drawn independently
    /// from the same factory, so initial bonuses are nonzero.
    pub fn new(
        k: usize,
        mut make_net: impl FnMut(&mut Prng) -> QFunction,
        mut make_opt: impl FnMut(usize) -> Optimizer,
        target_period: usize,
        rng: &mut Prng,
    ) -> Self {
        assert!(k >= 1);
        let targets: Vec<QFunction> = (0..k).map(|_| make_net(rng)).collect();
        let predictors = (0..k)
            .map(|_| {
                let net = make_net(rng);
                let opt = make_opt(net.n_params());
                ValueHead::new(net, opt, target_period)
            })
            .collect();
        RqfEnsemble { targets, predictors }
    }

    pub fn len(&self) -> usize {
        self.targets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.targets.is_empty()
    }

    pub fn target(&self, i: usize) -> &QFunction {
        &self.targets[i]
    }

    pub fn predictor(&self, i: usize) -> &ValueHead {
        &self.predictors[i]
    }

    pub fn predictor_mut(&mut self, i: usize) -> &mut ValueHead {
        &mut self.predictors[i]
    }

    /// The value bonus: the largest absolute predictor-target gap.
    pub fn bonus(&self, feats: &Features, action: usize) -> f64 {
        self.targets
            .iter()
            .zip(self.predictors.iter())
            .map(|(t, p)| (p.live().value(feats, action) - t.value(feats, action)).abs())
            .fold(0.0, f64::max)
    }

    /// Bonus for every action at once.
    pub fn bonus_all(&self, feats: &Features) -> Vec<f64> {
        let n_actions = self.targets[0].n_outputs();
        let mut out = vec![0.0; n_actions];
        for (t, p) in self.targets.iter().zip(self.predictors.iter()) {
            let tv = t.values(feats);
            let pv = p.live().values(feats);
            for a in 0..n_actions {
                let gap = (pv[a] - tv[a]).abs();
                if gap > out[a] {
                    out[a] = gap;
                }
            }
        }
        out
    }

    /// The implicit reward of member `i` for one transition, given the
    /// bootstrap action. The target function is frozen; the transition's own
    /// discount applies.
    pub fn rqf_reward(
        &self,
        i: usize,
        t: &Transition,
        fmap: &FeatureMap,
        next_action: usize,
    ) -> f64 {
        let f = &self.targets[i];
        let cur = f.value(&fmap.featurize(&t.obs), t.action);
        if t.discount == 0.0 {
            cur
        } else {
            cur - t.discount * f.value(&fmap.featurize(&t.next_obs), next_action)
        }
    }

    /// Choose the bootstrap action for a next-state feature vector.
    pub fn next_action(
        &self,
        rule: NextActionRule,
        main_live: &QFunction,
        bonus_scale: f64,
        next_feats: &Features,
        rng: &mut Prng,
    ) -> usize {
        match rule {
            NextActionRule::GreedyMain => {
                argmax_random_tie(&main_live.values(next_feats), rng)
            }
            NextActionRule::OptimisticMain => {
                let q = main_live.values(next_feats);
                let b = self.bonus_all(next_feats);
                select_action_optimistic(&q, &b, bonus_scale, rng)
            }
            NextActionRule::Uniform => rng.gen_range(0..main_live.n_outputs()),
        }
    }

    /// One TD step of predictor `i` on a batch: rewards are the member's
    /// implicit rewards, the bootstrap uses the predictor's own frozen copy,
    /// and one shared a' per transition serves both the reward and the
    /// bootstrap.
    pub fn td_update(
        &mut self,
        i: usize,
        batch: &[&Transition],
        fmap: &FeatureMap,
        rule: NextActionRule,
        main_live: &QFunction,
        bonus_scale: f64,
        rng: &mut Prng,
    ) -> f64 {
        let items: Vec<TdItem> = batch
            .iter()
            .map(|t| {
                let next_feats = fmap.featurize(&t.next_obs);
                let a_next = if t.discount != 0.0 {
                    self.next_action(rule, main_live, bonus_scale, &next_feats, rng)
                } else {
                    0
                };
                let reward = self.rqf_reward(i, t, fmap, a_next);
                TdItem::new(fmap, t, reward, t.discount, a_next)
            })
            .collect();
        self.predictors[i].td_step(&items)
    }

    /// Supervised-regression step of predictor `i` onto its frozen target at
    /// the batch's state-action pairs. No rewards, no bootstrapping.
    pub fn sl_update(&mut self, i: usize, batch: &[&Transition], fmap: &FeatureMap) -> f64 {
        let target = &self.targets[i];
        let items: Vec<(Features, usize, f64)> = batch
            .iter()
            .map(|t| {
                let feats = fmap.featurize(&t.obs);
                let y = target.value(&feats, t.action);
                (feats, t.action, y)
            })
            .collect();
        self.predictors[i].regression_step(&items)
    }

    /// Count one agent step on every predictor's target-net pair.
    pub fn tick(&mut self) {
        for p in &mut self.predictors {
            p.tick();
        }
    }

    /// Force predictor `i` (and its frozen copy) to equal its target.
    pub fn clamp_predictor_to_target(&mut self, i: usize) {
        let t = self.targets[i].clone();
        self.predictors[i].pair.live.sync_from(&t);
        self.predictors[i].pair.sync();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::approx::{InitScheme, OptimizerKind};
    use crate::seeding::derive_rng;

    fn one_hot_map(dim: usize) -> FeatureMap {
        FeatureMap::OneHot { dim }
    }

    fn make_ensemble(k: usize, dim: usize, actions: usize, seed: u64) -> RqfEnsemble {
        let mut rng = derive_rng(seed, 0, 0);
        RqfEnsemble::new(
            k,
            |r| QFunction::linear(dim, actions, false, &InitScheme::UniformFanIn, r),
            |n| Optimizer::new(OptimizerKind::Sgd, 0.1, n),
            1,
            &mut rng,
        )
    }

    fn tr(s: usize, a: usize, s2: usize, discount: f64) -> Transition {
        Transition {
            obs: vec![s as f64],
            action: a,
            reward: 0.0,
            next_obs: vec![s2 as f64],
            discount,
        }
    }

    #[test]
    fn terminal_reward_is_target_value() {
        let ens = make_ensemble(2, 3, 2, 0);
        let fmap = one_hot_map(3);
        let t = tr(1, 0, 2, 0.0);
        let expect = ens.target(0).value(&fmap.featurize(&[1.0]), 0);
        assert_eq!(ens.rqf_reward(0, &t, &fmap, 0), expect);
    }

    #[test]
    fn constant_target_with_unit_discount_telescopes_to_zero() {
        let mut ens = make_ensemble(1, 3, 2, 1);
        for p in ens.targets[0].params_mut() {
            *p = 4.25;
        }
        let fmap = one_hot_map(3);
        let t = tr(0, 1, 2, 1.0);
        assert_eq!(ens.rqf_reward(0, &t, &fmap, 0), 0.0);
    }

    #[test]
    fn hand_set_reward_arithmetic() {
        // f*(s,a) = 2, f*(s',a') = 1, gamma = 0.5 -> reward 1.5.
        let mut ens = make_ensemble(1, 2, 1, 2);
        let fmap = one_hot_map(2);
        ens.targets[0].params_mut().copy_from_slice(&[2.0, 1.0]);
        let t = tr(0, 0, 1, 0.5);
        assert!((ens.rqf_reward(0, &t, &fmap, 0) - 1.5).abs() < 1e-15);
    }

    #[test]
    fn bonus_is_max_absolute_gap() {
        let mut ens = make_ensemble(3, 2, 1, 3);
        let fmap = one_hot_map(2);
        let f = fmap.featurize(&[0.0]);
        // Set target/predictor gaps of 0.2, 0.7, 0.1 at (s0, a0).
        for (i, gap) in [0.2, 0.7, 0.1].iter().enumerate() {
            let tv = 1.0;
            ens.targets[i].params_mut()[0] = tv;
            ens.predictors[i].pair.live.params_mut()[0] = tv + gap;
        }
        assert!((ens.bonus(&f, 0) - 0.7).abs() < 1e-15);
        assert!((ens.bonus_all(&f)[0] - 0.7).abs() < 1e-15);
    }

    #[test]
    fn predictor_equal_to_target_is_a_fixed_point() {
        let mut ens = make_ensemble(1, 4, 2, 4);
        ens.clamp_predictor_to_target(0);
        let fmap = one_hot_map(4);
        let f = fmap.featurize(&[1.0]);
        assert_eq!(ens.bonus(&f, 0), 0.0);
        let mut rng = derive_rng(5, 0, 0);
        let main = QFunction::linear(4, 2, false, &InitScheme::Zeros, &mut rng);
        let batch_owned: Vec<Transition> =
            vec![tr(0, 0, 1, 0.9), tr(1, 1, 2, 0.9), tr(2, 0, 3, 0.0)];
        let batch: Vec<&Transition> = batch_owned.iter().collect();
        let before = ens.predictor(0).live().params().to_vec();
        let loss = ens.td_update(0, &batch, &fmap, NextActionRule::GreedyMain, &main, 0.0, &mut rng);
        assert!(loss < 1e-24, "loss {loss}");
        assert_eq!(ens.predictor(0).live().params(), &before[..]);
    }

    #[test]
    fn one_transition_sgd_moves_by_eta_delta() {
        let mut ens = make_ensemble(1, 3, 2, 6);
        let fmap = one_hot_map(3);
        let mut rng = derive_rng(7, 0, 0);
        let main = QFunction::linear(3, 2, false, &InitScheme::Zeros, &mut rng);
        let t = tr(0, 1, 1, 0.0);
        let feats = fmap.featurize(&[0.0]);
        let before = ens.predictor(0).live().value(&feats, 1);
        // Terminal transition: delta = f*(s,a) - f^(s,a).
        let delta = ens.target(0).value(&feats, 1) - before;
        let batch = [&t];
        ens.td_update(0, &batch, &fmap, NextActionRule::GreedyMain, &main, 0.0, &mut rng);
        let after = ens.predictor(0).live().value(&feats, 1);
        assert!((after - before - 0.1 * delta).abs() < 1e-15);
    }

    #[test]
    fn fixed_policy_chain_predictor_converges_to_target() {
        // Uniform-random fixed policy on a 5-state chain; TD drives the
        // predictor to the frozen target, its exact fixed point.
        let n_states = 5;
        let mut ens = make_ensemble(1, n_states, 2, 8);
        let fmap = one_hot_map(n_states);
        let mut rng = derive_rng(9, 0, 0);
        let main = QFunction::linear(n_states, 2, false, &InitScheme::Zeros, &mut rng);
        let gamma = 0.9;
        let mut s = 0usize;
        for _ in 0..60_000 {
            let a = rng.gen_range(0..2usize);
            let s2 = if a == 1 { (s + 1).min(n_states - 1) } else { s.saturating_sub(1) };
            let t = tr(s, a, s2, gamma);
            let batch = [&t];
            ens.td_update(0, &batch, &fmap, NextActionRule::Uniform, &main, 0.0, &mut rng);
            ens.tick();
            s = s2;
        }
        let mut worst: f64 = 0.0;
        for st in 0..n_states {
            let f = fmap.featurize(&[st as f64]);
            for a in 0..2 {
                let gap = (ens.predictor(0).live().value(&f, a)
                    - ens.target(0).value(&f, a))
                .abs();
                worst = worst.max(gap);
            }
        }
        assert!(worst < 1e-3, "max |f^ - f*| = {worst}");
    }

    #[test]
    fn sl_gap_shrinks_geometrically() {
        let mut ens = make_ensemble(1, 2, 1, 10);
        let fmap = one_hot_map(2);
        let feats = fmap.featurize(&[0.0]);
        let t = tr(0, 0, 1, 1.0);
        let eta = 0.1;
        let mut gap = ens.target(0).value(&feats, 0) - ens.predictor(0).live().value(&feats, 0);
        for _ in 0..6 {
            let batch = [&t];
            ens.sl_update(0, &batch, &fmap);
            gap *= 1.0 - 2.0 * eta;
            let now =
                ens.target(0).value(&feats, 0) - ens.predictor(0).live().value(&feats, 0);
            assert!((now - gap).abs() < 1e-12);
        }
    }

    #[test]
    fn sl_never_touches_unsampled_state_actions() {
        let mut ens = make_ensemble(1, 4, 2, 11);
        let fmap = one_hot_map(4);
        let untouched = fmap.featurize(&[3.0]);
        let before: Vec<f64> = (0..2)
            .map(|a| ens.predictor(0).live().value(&untouched, a))
            .collect();
        let t = tr(0, 0, 3, 0.9);
        for _ in 0..50 {
            let batch = [&t];
            ens.sl_update(0, &batch, &fmap);
        }
        let after: Vec<f64> = (0..2)
            .map(|a| ens.predictor(0).live().value(&untouched, a))
            .collect();
        assert_eq!(before, after);
    }

    #[test]
    fn td_update_depends_on_downstream_values_sl_does_not() {
        // The deep-exploration distinction: the TD update of a sampled (s,a)
        // moves by an amount that depends on the (never-sampled) next state's
        // values; the supervised update does not.
        let fmap = one_hot_map(4);
        let t = tr(0, 0, 3, 0.9);
        let feats = fmap.featurize(&[0.0]);
        let mut rng = derive_rng(13, 0, 0);
        let main = QFunction::linear(4, 2, false, &InitScheme::Zeros, &mut rng);

        // Perturb the predictor's values at the downstream state s3 only
        // (both actions, weight indices 3 and 7 in the output-major layout).
        let run_td = |perturb: f64| -> f64 {
            let mut ens = make_ensemble(1, 4, 2, 12);
            for idx in [3, 7] {
                ens.predictors[0].pair.live.params_mut()[idx] += perturb;
            }
            ens.predictors[0].pair.sync();
            let mut r = derive_rng(14, 0, 0);
            let batch = [&t];
            ens.td_update(0, &batch, &fmap, NextActionRule::Uniform, &main, 0.0, &mut r);
            ens.predictor(0).live().value(&feats, 0)
        };
        assert_ne!(run_td(0.0), run_td(5.0));

        let run_sl = |perturb: f64| -> f64 {
            let mut ens = make_ensemble(1, 4, 2, 12);
            for idx in [3, 7] {
                ens.predictors[0].pair.live.params_mut()[idx] += perturb;
            }
            ens.predictors[0].pair.sync();
            let batch = [&t];
            ens.sl_update(0, &batch, &fmap);
            ens.predictor(0).live().value(&feats, 0)
        };
        assert_eq!(run_sl(0.0), run_sl(5.0));
    }
}
