//! The base learner: replay, target networks, the Double-DQN update, and
//! action-selection rules.

mod config;
mod ddqn;
mod policy;
mod replay;

pub use config::{AgentConfig, TargetPolicyMode};
pub use ddqn::{ddqn_target, TargetNetPair, TdItem, ValueHead};
pub use policy::{argmax_random_tie, select_action_eps_greedy, select_action_optimistic};
pub use replay::{ReplayBuffer, Transition};
