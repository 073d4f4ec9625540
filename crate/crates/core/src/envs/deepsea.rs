//! Deepsea: an N x N grid where every action moves the agent down one row
//! and the chosen action moves it left or right one column. Only the
//! lower-left triangle is reachable, so there are N(N+1)/2 distinct states.
//! Taking `right` costs 0.01/N everywhere except the bottom-right corner,
//! where it pays 1. The episode lasts exactly N steps.

use super::{EnvInfo, EnvStep, Environment};
use crate::error::Error;
use crate::seeding::Prng;
use crate::Result;

pub const LEFT: usize = 0;
pub const RIGHT: usize = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeepseaState {
    pub row: usize,
    pub col: usize,
}

#[derive(Debug, Clone)]
pub struct Deepsea {
    grid_size: usize,
    reward_free: bool,
    state: DeepseaState,
}

impl Deepsea {
    pub fn new(grid_size: usize, reward_free: bool) -> Result<Self> {
        if grid_size < 1 {
            return Err(Error::InvalidParameter(
                "deepsea grid_size must be at least 1".into(),
            ));
        }
        Ok(Deepsea {
            grid_size,
            reward_free,
            state: DeepseaState { row: 0, col: 0 },
        })
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    /// Number of reachable states, N(N+1)/2.
    pub fn state_count(&self) -> usize {
        self.grid_size * (self.grid_size + 1) / 2
    }

    pub fn state(&self) -> DeepseaState {
        self.state
    }

    /// Flattened triangular index of (row, col), valid for row < N, col <= row.
    pub fn state_index(grid_size: usize, row: usize, col: usize) -> usize {
        debug_assert!(row < grid_size && col <= row);
        row * (row + 1) / 2 + col
    }

    fn obs(&self) -> Vec<f64> {
        // Terminal row encodes as the (out-of-range) padding index.
        if self.state.row >= self.grid_size {
            vec![self.state_count() as f64]
        } else {
            vec![Self::state_index(self.grid_size, self.state.row, self.state.col) as f64]
        }
    }
}

impl Environment for Deepsea {
    fn info(&self) -> EnvInfo {
        EnvInfo {
            obs_dim: 1,
            n_actions: 2,
            obs_lo: vec![0.0],
            obs_hi: vec![(self.state_count()) as f64],
            tabular_dim: Some(self.state_count()),
        }
    }

    fn reset(&mut self, _rng: &mut Prng) -> Vec<f64> {
        self.state = DeepseaState { row: 0, col: 0 };
        self.obs()
    }

    fn step(&mut self, action: usize, _rng: &mut Prng) -> EnvStep {
        let n = self.grid_size;
        assert!(self.state.row < n, "stepping a terminal Deepsea state");
        assert!(action < 2, "deepsea actions are left (0) and right (1)");
        let DeepseaState { row, col } = self.state;

        let at_corner = row == n - 1 && col == n - 1;
        let reward = if self.reward_free {
            0.0
        } else if action == RIGHT {
            if at_corner {
                1.0
            } else {
                -0.01 / n as f64
            }
        } else {
            0.0
        };

        // Collisions with the left edge keep the column; the right move
        // always fits because col <= row.
        let next_col = if action == RIGHT {
            col + 1
        } else {
            col.saturating_sub(1)
        };
        self.state = DeepseaState { row: row + 1, col: next_col };

        let terminal = self.state.row == n;
        EnvStep {
            reward,
            next_obs: self.obs(),
            discount: if terminal { 0.0 } else { 1.0 },
            terminal,
            truncated: false,
        }
    }
}
