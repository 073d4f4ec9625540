//! Exploration machinery: the random action-value function (RQF) ensemble
//! behind VBE's value bonuses, plus the baseline agents that share its
//! interface.

mod acb;
mod agent;
mod baseline;
mod bdqn;
mod builder;
mod intrinsic;
mod rnd;
mod rqf;
mod vbe;

pub use acb::{acb_bonus, AcbAgent};
pub use agent::{Agent, StepReport};
pub use baseline::EpsGreedyAgent;
pub use bdqn::{BdqnAgent, PriorHead};
pub use builder::{build_agent, AgentName, FeatureRegime, NetSpec};
pub use intrinsic::IntrinsicValueHead;
pub use rnd::{rnd_bonus, RndAgent};
pub use rqf::{NextActionRule, RqfEnsemble};
pub use vbe::VbeAgent;
