// SPDX-License-Identifier: Apache-2.0

//! The `(N, M, θ)` parameterisation shared by every search model.

use serde::Serialize;

use crate::error::{Error, Result};

/// A database of `items` entries of which `targets` are marked.
///
/// The angle is derived from the counts on construction, `sin²θ = M/N`,
/// and cannot be set independently.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SearchInstance {
    items: u64,
    targets: u64,
    theta: f64,
}

impl SearchInstance {
    pub fn new(items: u64, targets: u64) -> Result<Self> {
        if items == 0 {
            return Err(Error::InvalidArgument("database size must be positive".into()));
        }
        if targets == 0 || targets > items {
            return Err(Error::InvalidArgument(format!(
                "target count {targets} must lie in [1, {items}]"
            )));
        }
        let theta = (targets as f64 / items as f64).sqrt().asin();
        Ok(Self { items, targets, theta })
    }

    /// `N`.
    pub fn items(&self) -> u64 {
        self.items
    }

    /// `M`.
    pub fn targets(&self) -> u64 {
        self.targets
    }

    /// Grover angle with `sin²θ = M/N`, in `(0, π/2]`.
    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn target_fraction(&self) -> f64 {
        self.targets as f64 / self.items as f64
    }

    pub fn is_full(&self) -> bool {
        self.targets == self.items
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_matches_fraction() {
        for &(n, m) in &[(256u64, 2u64), (256, 70), (4096, 22), (4096, 924), (7, 7), (3, 1)] {
            let inst = SearchInstance::new(n, m).unwrap();
            let frac = m as f64 / n as f64;
            let s2 = inst.theta().sin().powi(2);
            assert!(((s2 - frac) / frac).abs() < 1e-15, "{n} {m}: {s2} vs {frac}");
            assert!(inst.theta() > 0.0 && inst.theta() <= std::f64::consts::FRAC_PI_2);
        }
    }

    #[test]
    fn full_instance_is_right_angle() {
        let inst = SearchInstance::new(16, 16).unwrap();
        assert_eq!(inst.theta(), std::f64::consts::FRAC_PI_2);
        assert!(inst.is_full());
    }

    #[test]
    fn rejects_bad_counts() {
        assert!(SearchInstance::new(0, 0).is_err());
        assert!(SearchInstance::new(8, 0).is_err());
        assert!(SearchInstance::new(8, 9).is_err());
    }
}
