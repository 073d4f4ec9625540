//! Puddle World: a cost-to-goal task on the unit square with two capsule
//! puddles. Moves are noisy; the per-step reward is -1 plus a penalty that
//! grows toward a puddle's center line. The goal is the top-right corner.

use rand::Rng;
use rand_distr::{Distribution, Normal};

use super::{EnvInfo, EnvStep, Environment};
use crate::seeding::Prng;

pub const PW_UP: usize = 0;
pub const PW_DOWN: usize = 1;
pub const PW_LEFT: usize = 2;
pub const PW_RIGHT: usize = 3;

/// The two puddles: line segments with a common radius.
const PUDDLES: [((f64, f64), (f64, f64)); 2] = [
    ((0.45, 0.4), (0.45, 0.8)),
    ((0.1, 0.75), (0.45, 0.75)),
];
const PUDDLE_RADIUS: f64 = 0.1;
const GOAL_LO: f64 = 0.95;

#[derive(Debug, Clone)]
pub struct PuddleWorldParams {
    pub step_size: f64,
    pub noise_std: f64,
    /// Penalty per unit of penetration depth into a puddle.
    pub penalty_scale: f64,
    pub max_episode_steps: usize,
}

impl Default for PuddleWorldParams {
    fn default() -> Self {
        PuddleWorldParams {
            step_size: 0.005,
            noise_std: 0.1,
            penalty_scale: 400.0,
            max_episode_steps: 1000,
        }
    }
}

fn dist_to_segment(p: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    let (px, py) = p;
    let (ax, ay) = a;
    let (bx, by) = b;
    let (dx, dy) = (bx - ax, by - ay);
    let len2 = dx * dx + dy * dy;
    let t = if len2 == 0.0 {
        0.0
    } else {
        (((px - ax) * dx + (py - ay) * dy) / len2).clamp(0.0, 1.0)
    };
    let (cx, cy) = (ax + t * dx, ay + t * dy);
    ((px - cx).powi(2) + (py - cy).powi(2)).sqrt()
}

/// Penalty at a position: negative inside a puddle, zero at radius and
/// beyond, most negative on the center line.
pub fn puddle_penalty(x: f64, y: f64, penalty_scale: f64) -> f64 {
    let d = PUDDLES
        .iter()
        .map(|(a, b)| dist_to_segment((x, y), *a, *b))
        .fold(f64::INFINITY, f64::min);
    if d < PUDDLE_RADIUS {
        -penalty_scale * (PUDDLE_RADIUS - d)
    } else {
        0.0
    }
}

#[derive(Debug, Clone)]
pub struct PuddleWorld {
    params: PuddleWorldParams,
    pos: (f64, f64),
    steps: usize,
    done: bool,
}

impl PuddleWorld {
    pub fn new(params: PuddleWorldParams) -> Self {
        PuddleWorld { params, pos: (0.2, 0.5), steps: 0, done: true }
    }

    pub fn position(&self) -> (f64, f64) {
        self.pos
    }

    #[cfg(test)]
    pub(crate) fn set_position(&mut self, x: f64, y: f64) {
        self.pos = (x, y);
    }

    fn in_goal(pos: (f64, f64)) -> bool {
        pos.0 >= GOAL_LO && pos.1 >= GOAL_LO
    }
}

impl Environment for PuddleWorld {
    fn info(&self) -> EnvInfo {
        EnvInfo {
            obs_dim: 2,
            n_actions: 4,
            obs_lo: vec![0.0, 0.0],
            obs_hi: vec![1.0, 1.0],
            tabular_dim: None,
        }
    }

    fn reset(&mut self, rng: &mut Prng) -> Vec<f64> {
        self.pos = (rng.gen_range(0.1..0.3), rng.gen_range(0.45..0.65));
        self.steps = 0;
        self.done = false;
        vec![self.pos.0, self.pos.1]
    }

    fn step(&mut self, action: usize, rng: &mut Prng) -> EnvStep {
        assert!(!self.done, "stepping a terminal Puddle World state");
        assert!(action < 4, "puddleworld has four actions");
        let p = &self.params;
        let d = if p.noise_std > 0.0 {
            p.step_size + Normal::new(0.0, p.noise_std).unwrap().sample(rng)
        } else {
            p.step_size
        };
        let (mut x, mut y) = self.pos;
        match action {
            PW_UP => y += d,
            PW_DOWN => y -= d,
            PW_LEFT => x -= d,
            PW_RIGHT => x += d,
            _ => unreachable!(),
        }
        x = x.clamp(0.0, 1.0);
        y = y.clamp(0.0, 1.0);
        self.pos = (x, y);
        self.steps += 1;

        let terminal = Self::in_goal(self.pos);
        let truncated = !terminal && self.steps >= p.max_episode_steps;
        self.done = terminal || truncated;
        let reward = -1.0 + puddle_penalty(x, y, p.penalty_scale);
        EnvStep {
            reward,
            next_obs: vec![x, y],
            discount: if terminal { 0.0 } else { 1.0 },
            terminal,
            truncated,
        }
    }
}
