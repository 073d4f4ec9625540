//! Sparse Mountain Car: the classic underpowered-car dynamics with the
//! reward offset by 1, so the agent sees 0 everywhere and 1 at the goal.

use rand::Rng;

use super::{EnvInfo, EnvStep, Environment};
use crate::seeding::Prng;

pub const MC_REVERSE: usize = 0;
pub const MC_COAST: usize = 1;
pub const MC_FORWARD: usize = 2;

const POS_MIN: f64 = -1.2;
const POS_MAX: f64 = 0.6;
const VEL_MAX: f64 = 0.07;
const GOAL_POS: f64 = 0.5;

#[derive(Debug, Clone)]
pub struct MountainCar {
    pos: f64,
    vel: f64,
    steps: usize,
    done: bool,
    max_episode_steps: usize,
}

impl MountainCar {
    pub fn new(max_episode_steps: usize) -> Self {
        MountainCar { pos: -0.5, vel: 0.0, steps: 0, done: true, max_episode_steps }
    }

    pub fn state(&self) -> (f64, f64) {
        (self.pos, self.vel)
    }

    #[cfg(test)]
    pub(crate) fn set_state(&mut self, pos: f64, vel: f64) {
        self.pos = pos;
        self.vel = vel;
    }
}

impl Default for MountainCar {
    fn default() -> Self {
        MountainCar::new(1000)
    }
}

impl Environment for MountainCar {
    fn info(&self) -> EnvInfo {
        EnvInfo {
            obs_dim: 2,
            n_actions: 3,
            obs_lo: vec![POS_MIN, -VEL_MAX],
            obs_hi: vec![POS_MAX, VEL_MAX],
            tabular_dim: None,
        }
    }

    fn reset(&mut self, rng: &mut Prng) -> Vec<f64> {
        self.pos = rng.gen_range(-0.6..-0.4);
        self.vel = 0.0;
        self.steps = 0;
        self.done = false;
        vec![self.pos, self.vel]
    }

    fn step(&mut self, action: usize, _rng: &mut Prng) -> EnvStep {
        assert!(!self.done, "stepping a terminal Mountain Car state");
        assert!(action < 3, "mountain car has three actions");
        let thrust = action as f64 - 1.0;
        self.vel += 0.001 * thrust - 0.0025 * (3.0 * self.pos).cos();
        self.vel = self.vel.clamp(-VEL_MAX, VEL_MAX);
        self.pos += self.vel;
        self.pos = self.pos.clamp(POS_MIN, POS_MAX);
        if self.pos <= POS_MIN && self.vel < 0.0 {
            self.vel = 0.0;
        }
        self.steps += 1;

        let terminal = self.pos >= GOAL_POS;
        let truncated = !terminal && self.steps >= self.max_episode_steps;
        self.done = terminal || truncated;
        EnvStep {
            reward: if terminal { 1.0 } else { 0.0 },
            next_obs: vec![self.pos, self.vel],
            discount: if terminal { 0.0 } else { 1.0 },
            terminal,
            truncated,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seeding::derive_rng;
    use rand::Rng;

    #[test]
    fn start_state_in_valley_with_zero_velocity() {
        let mut rng = derive_rng(0, 0, 0);
        let mut env = MountainCar::default();
        for _ in 0..500 {
            let obs = env.reset(&mut rng);
            assert!(obs[0] >= -0.6 && obs[0] <= -0.4);
            assert_eq!(obs[1], 0.0);
        }
    }

    #[test]
    fn goal_pays_one_and_terminates() {
        let mut rng = derive_rng(0, 0, 0);
        let mut env = MountainCar::default();
        env.reset(&mut rng);
        env.set_state(0.49, 0.07);
        let step = env.step(MC_FORWARD, &mut rng);
        assert_eq!(step.reward, 1.0);
        assert_eq!(step.discount, 0.0);
        assert!(step.terminal);
    }

    #[test]
    fn coast_at_valley_bottom_closed_form() {
        let mut rng = derive_rng(0, 0, 0);
        let mut env = MountainCar::default();
        env.reset(&mut rng);
        let x0 = -0.5236;
        env.set_state(x0, 0.0);
        env.step(MC_COAST, &mut rng);
        let v_expect = -0.0025 * (3.0 * x0).cos();
        let (pos, vel) = env.state();
        assert!((vel - v_expect).abs() < 1e-15);
        assert!((pos - (x0 + v_expect)).abs() < 1e-15);
    }

    #[test]
    fn reward_zero_away_from_goal() {
        let mut rng = derive_rng(1, 0, 0);
        let mut env = MountainCar::default();
        env.reset(&mut rng);
        for _ in 0..50 {
            let step = env.step(rng.gen_range(0..3), &mut rng);
            assert_eq!(step.reward, 0.0);
            assert!(!step.terminal, "random flailing should not reach the goal");
        }
    }

    #[test]
    fn state_stays_in_declared_box() {
        let mut rng = derive_rng(2, 0, 0);
        let mut env = MountainCar::new(300);
        for _ in 0..20 {
            env.reset(&mut rng);
            loop {
                let step = env.step(rng.gen_range(0..3), &mut rng);
                assert!(step.next_obs[0] >= POS_MIN && step.next_obs[0] <= POS_MAX);
                assert!(step.next_obs[1].abs() <= VEL_MAX);
                if step.terminal || step.truncated {
                    break;
                }
            }
        }
    }

    #[test]
    fn truncates_at_step_limit() {
        let mut rng = derive_rng(3, 0, 0);
        let mut env = MountainCar::new(10);
        env.reset(&mut rng);
        let mut n = 0;
        loop {
            let step = env.step(MC_COAST, &mut rng);
            n += 1;
            if step.truncated {
                assert!(!step.terminal);
                assert_eq!(step.discount, 1.0);
                break;
            }
            assert!(n <= 10);
        }
        assert_eq!(n, 10);
    }
}
