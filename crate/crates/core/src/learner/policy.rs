//! Behavior-policy action selection.

use rand::Rng;

use crate::seeding::Prng;

/// Argmax with uniform random tie-breaking. Deterministic first-index
/// tie-breaking would bias gridworld agents toward one action.
pub fn argmax_random_tie(values: &[f64], rng: &mut Prng) -> usize {
    assert!(!values.is_empty());
    let mut best = values[0];
    let mut count = 1usize;
    let mut chosen = 0usize;
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > best {
            best = v;
            count = 1;
            chosen = i;
        } else if v == best {
            // Reservoir sample among ties.
            count += 1;
            if rng.gen_range(0..count) == 0 {
                chosen = i;
            }
        }
    }
    chosen
}

/// Greedy in `q + c * bonus`.
pub fn select_action_optimistic(q: &[f64], bonus: &[f64], c: f64, rng: &mut Prng) -> usize {
    debug_assert_eq!(q.len(), bonus.len());
    let combined: Vec<f64> = q.iter().zip(bonus.iter()).map(|(a, b)| a + c * b).collect();
    argmax_random_tie(&combined, rng)
}

/// Uniform action with probability epsilon, greedy otherwise.
pub fn select_action_eps_greedy(q: &[f64], epsilon: f64, rng: &mut Prng) -> usize {
    debug_assert!((0.0..=1.0).contains(&epsilon));
    if epsilon > 0.0 && rng.gen_range(0.0..1.0) < epsilon {
        rng.gen_range(0..q.len())
    } else {
        argmax_random_tie(q, rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::derive_rng;

    #[test]
    fn zero_scale_or_zero_bonus_is_greedy() {
        let mut rng = derive_rng(0, 0, 0);
        let q = [0.1, 0.9, 0.3];
        assert_eq!(select_action_optimistic(&q, &[5.0, 0.0, 0.0], 0.0, &mut rng), 1);
        assert_eq!(select_action_optimistic(&q, &[0.0, 0.0, 0.0], 3.0, &mut rng), 1);
    }

    #[test]
    fn bonus_overrides_value() {
        let mut rng = derive_rng(0, 0, 0);
        // q = [1, 0], b = [0, 2], c = 1: 1 < 2 so action 1 wins.
        assert_eq!(select_action_optimistic(&[1.0, 0.0], &[0.0, 2.0], 1.0, &mut rng), 1);
    }

    #[test]
    fn eps_zero_is_greedy() {
        let mut rng = derive_rng(0, 0, 0);
        for _ in 0..100 {
            assert_eq!(select_action_eps_greedy(&[0.0, 1.0, 0.5], 0.0, &mut rng), 1);
        }
    }

    #[test]
    fn eps_one_is_uniform_within_3_sigma() {
        let mut rng = derive_rng(1, 0, 0);
        let q = [0.0, 9.0, 1.0, 2.0];
        let n = 100_000usize;
        let mut counts = [0usize; 4];
        for _ in 0..n {
            counts[select_action_eps_greedy(&q, 1.0, &mut rng)] += 1;
        }
        let p = 0.25;
        let sigma = (p * (1.0 - p) * n as f64).sqrt();
        for c in counts {
            assert!((c as f64 - n as f64 * p).abs() < 3.0 * sigma, "counts {counts:?}");
        }
    }

    #[test]
    fn eps_tenth_nongreedy_frequency() {
        // Nongreedy frequency should be eps * (|A| - 1) / |A|.
        let mut rng = derive_rng(2, 0, 0);
        let q = [0.0, 9.0, 1.0, 2.0];
        let n = 100_000usize;
        let mut nongreedy = 0usize;
        for _ in 0..n {
            if select_action_eps_greedy(&q, 0.1, &mut rng) != 1 {
                nongreedy += 1;
            }
        }
        let p = 0.1 * 3.0 / 4.0;
        let sigma = (p * (1.0 - p) * n as f64).sqrt();
        assert!((nongreedy as f64 - n as f64 * p).abs() < 3.0 * sigma);
    }

    #[test]
    fn ties_break_uniformly() {
        let mut rng = derive_rng(3, 0, 0);
        let q = [1.0, 1.0, 0.0, 1.0];
        let n = 60_000usize;
        let mut counts = [0usize; 4];
        for _ in 0..n {
            counts[argmax_random_tie(&q, &mut rng)] += 1;
        }
        assert_eq!(counts[2], 0);
        let p = 1.0 / 3.0;
        let sigma = (p * (1.0 - p) * n as f64).sqrt();
        for i in [0, 1, 3] {
            assert!((counts[i] as f64 - n as f64 * p).abs() < 3.0 * sigma);
        }
    }

    #[test]
    fn adding_a_constant_does_not_change_selection() {
        let mut a = derive_rng(4, 0, 0);
        let mut b = derive_rng(4, 0, 0);
        let q = [0.3, 0.7, 0.7, -0.1];
        let shifted: Vec<f64> = q.iter().map(|v| v + 123.5).collect();
        for _ in 0..1000 {
            assert_eq!(argmax_random_tie(&q, &mut a), argmax_random_tie(&shifted, &mut b));
        }
    }
}
