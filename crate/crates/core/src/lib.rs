//! Deep-exploration agents built on learned value bonuses, together with the
//! classic benchmark environments they are evaluated on and a verification
//! suite for the underlying ensemble identities.
//!
//! The crate is organized around six pieces:
//!
//! - [`envs`]: Deepsea, River Swim, Puddle World and sparse Mountain Car,
//!   all emitting transition-based discounts.
//! - [`approx`]: feature maps (one-hot, tile coding), a small MLP with a
//!   hand-written backward pass, and SGD/Adam.
//! - [`learner`]: replay buffer, target networks, the Double-DQN update and
//!   action-selection rules.
//! - [`explore`]: the value-bonus agents (VBE, VBE-SL) and the baselines
//!   (BDQN, DQN-P, RND, ACB, epsilon-greedy DDQN).
//! - [`harness`]: seeded runs, parameter sweeps, coverage tracking and CSV
//!   logging, driven by TOML configs.
//! - [`verify`]: independent oracles for the ensemble-reward identities,
//!   the optimistic-initialization bound, and bonus decay.

pub mod approx;
pub mod envs;
pub mod error;
pub mod explore;
pub mod harness;
pub mod learner;
pub mod seeding;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
