// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Chain length outside `[2, cap]`.
    #[error("spin count {n} outside supported range [2, {cap}]")]
    Size { n: u32, cap: u32 },

    #[error("{lambda} (in units of epsilon) is not an eigenvalue of the {n}-spin chain")]
    NotEigenvalue { n: u32, lambda: i64 },

    /// Search instance without a well-defined nontarget amplitude, or an
    /// oracle marking nothing or everything.
    #[error("degenerate search instance: {0}")]
    DegenerateInstance(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{name} = {value} outside domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("probability curve never reaches a nonzero success probability")]
    NoSuccess,

    #[error("threshold {target} not reached within {j_max} iterations (max p = {max_p})")]
    ThresholdUnreached { target: f64, j_max: usize, max_p: f64 },
}
