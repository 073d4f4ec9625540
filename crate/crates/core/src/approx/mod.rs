//! Function-approximation substrate: feature maps, a small MLP with a
//! hand-written backward pass, optimizers, and the `QFunction` the agents
//! are built from.

mod features;
mod mlp;
mod optimizer;
mod qfunction;

pub use features::{one_hot, FeatureMap, Features, TileCoding};
pub use mlp::Mlp;
pub use optimizer::{Optimizer, OptimizerKind};
pub use qfunction::{InitScheme, LinearQ, QFunction};
