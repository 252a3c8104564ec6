//! Random walks on hypergraphs and superhypergraphs: transition kernels,
//! seeded trajectory simulation and stationary distributions.

mod kernel;
mod stationary;

pub use kernel::{
    expanded_transition_kernel, shg_transition_kernel, simulate, transition_kernel,
    DanglingPolicy, Selection, TransitionKernel, WalkConfig, ROW_SUM_TOLERANCE,
};
pub use stationary::{
    period, residual, stationary, stationary_with_limit, strong_components, DEFAULT_MAX_ITERS,
};
