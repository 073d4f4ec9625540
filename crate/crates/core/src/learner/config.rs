//! Agent hyperparameters. Defaults follow the classic-control settings:
//! 50K replay, batches of 128, learning rate 0.001, discount 0.99, and
//! target networks synced every 4 agent steps.

use serde::{Deserialize, Serialize};

use crate::approx::OptimizerKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TargetPolicyMode {
    /// Bootstrap actions maximize q alone.
    Greedy,
    /// Bootstrap actions maximize q + c * bonus.
    Optimistic,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct AgentConfig {
    /// Ensemble size k.
    pub k: usize,
    /// Bonus (or prior) scale c.
    pub c: f64,
    /// Target-network sync period tau, in agent steps.
    pub tau: usize,
    /// Mini-batch size m.
    pub batch: usize,
    pub learning_rate: f64,
    pub discount: f64,
    pub target_policy: TargetPolicyMode,
    /// Exploration rate for the epsilon-greedy baseline.
    pub epsilon: f64,
    pub buffer_capacity: usize,
    /// "adam" or "sgd".
    pub optimizer: String,
}

impl Default for AgentConfig {
    fn default() -> Self {
        AgentConfig {
            k: 1,
            c: 1.0,
            tau: 4,
            batch: 128,
            learning_rate: 0.001,
            discount: 0.99,
            target_policy: TargetPolicyMode::Greedy,
            epsilon: 0.1,
            buffer_capacity: 50_000,
            optimizer: "adam".into(),
        }
    }
}

impl AgentConfig {
    pub fn optimizer_kind(&self) -> crate::Result<OptimizerKind> {
        match self.optimizer.as_str() {
            "adam" => Ok(OptimizerKind::adam_default()),
            "sgd" => Ok(OptimizerKind::Sgd),
            other => Err(crate::Error::Config(format!(
                "unknown optimizer `{other}` (expected adam or sgd)"
            ))),
        }
    }

    pub fn validate(&self) -> crate::Result<()> {
        if self.k < 1 {
            return Err(crate::Error::Config("k must be at least 1".into()));
        }
        if self.c < 0.0 {
            return Err(crate::Error::Config("c must be nonnegative".into()));
        }
        if !(0.0..=1.0).contains(&self.epsilon) {
            return Err(crate::Error::Config("epsilon must lie in [0, 1]".into()));
        }
        if !(0.0..=1.0).contains(&self.discount) {
            return Err(crate::Error::Config("discount must lie in [0, 1]".into()));
        }
        if self.tau == 0 || self.batch == 0 || self.buffer_capacity == 0 {
            return Err(crate::Error::Config(
                "tau, batch and buffer_capacity must be positive".into(),
            ));
        }
        self.optimizer_kind().map(|_| ())
    }
}
