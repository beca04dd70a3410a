// SPDX-License-Identifier: Apache-2.0

//! Classical baselines for comparison with the quantum searches.

use serde::Serialize;

use crate::analysis::{CurveModel, ProbabilityCurve};
use crate::damped::{DampedRecurrence, RecurrenceAngle};
use crate::error::{Error, Result};
use crate::instance::SearchInstance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicalModel {
    /// Independent uniform draws: `P(j) = 1 − (1 − M/N)^j`.
    WithReplacement,
    /// Draws without repetition: `P(j) = 1 − C(N−M, j)/C(N, j)`.
    WithoutReplacement,
    /// The damped recurrence at `cos φ = 0`.
    FullyDamped(RecurrenceAngle),
}

pub fn classical_curve(
    instance: &SearchInstance,
    model: ClassicalModel,
    j_max: usize,
) -> Result<ProbabilityCurve> {
    if j_max == 0 {
        return Err(Error::InvalidArgument("j_max must be at least 1".into()));
    }
    let p = match model {
        ClassicalModel::WithReplacement => with_replacement(instance, j_max),
        ClassicalModel::WithoutReplacement => without_replacement(instance, j_max),
        ClassicalModel::FullyDamped(angle) => {
            DampedRecurrence::from_angle(angle.angle(instance), 0.0)?.success_curve(j_max)
        }
    };
    ProbabilityCurve::new(CurveModel::Classical(model), *instance, p)
}

// Both curves are 1 − (product of per-draw miss probabilities). Each
// without-replacement factor is at most the with-replacement one and rounding
// is monotone, so the ordering and monotonicity survive in floating point.
// P(1) is returned as M/N directly so that E(1) = N/M exactly.

fn with_replacement(instance: &SearchInstance, j_max: usize) -> Vec<f64> {
    let miss = (instance.items() - instance.targets()) as f64 / instance.items() as f64;
    let mut all_miss = 1.0;
    (1..=j_max)
        .map(|j| {
            all_miss *= miss;
            if j == 1 {
                instance.target_fraction()
            } else {
                1.0 - all_miss
            }
        })
        .collect()
}

fn without_replacement(instance: &SearchInstance, j_max: usize) -> Vec<f64> {
    let n = instance.items();
    let misses = n - instance.targets();
    let mut all_miss = 1.0;
    (1..=j_max as u64)
        .map(|j| {
            if j > misses {
                return 1.0;
            }
            let i = j - 1;
            all_miss *= (misses - i) as f64 / (n - i) as f64;
            if j == 1 {
                instance.target_fraction()
            } else {
                1.0 - all_miss
            }
        })
        .collect()
}

/// Minimum of `E(j) = j/P(j)` for sampling with replacement: `(1, N/M)`.
///
/// `1 − q^j ≤ j(1 − q)` bounds `E(j)` below by `1/(1 − q)`, which `j = 1`
/// attains.
pub fn classical_expected_min(instance: &SearchInstance) -> (usize, f64) {
    (1, instance.items() as f64 / instance.targets() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    const ALL: [ClassicalModel; 3] = [
        ClassicalModel::WithReplacement,
        ClassicalModel::WithoutReplacement,
        ClassicalModel::FullyDamped(RecurrenceAngle::Doubled),
    ];

    fn inst(n: u64, m: u64) -> SearchInstance {
        SearchInstance::new(n, m).unwrap()
    }

    #[test]
    fn everything_marked() {
        let i = inst(64, 64);
        for model in ALL {
            let c = classical_curve(&i, model, 20).unwrap();
            assert!(c.p().iter().all(|&p| (p - 1.0).abs() < 1e-12), "{model:?} {:?}", c.p());
        }
        // the undoubled angle leaves half the weight undetected on the first step
        let c = classical_curve(&i, ClassicalModel::FullyDamped(RecurrenceAngle::Amplitude), 3).unwrap();
        assert_eq!(c.p(), &[0.5, 1.0, 1.0]);
    }

    #[test]
    fn single_draw() {
        let i = inst(256, 14);
        for model in [ClassicalModel::WithReplacement, ClassicalModel::WithoutReplacement] {
            let c = classical_curve(&i, model, 3).unwrap();
            assert_abs_diff_eq!(c.p()[0], 14.0 / 256.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn without_replacement_half_deck() {
        let c = classical_curve(&inst(256, 2), ClassicalModel::WithoutReplacement, 300).unwrap();
        let expect = 1.0 - (128.0 * 127.0) / (256.0 * 255.0);
        assert_abs_diff_eq!(c.p()[127], expect, epsilon = 1e-14);
        assert_abs_diff_eq!(c.p()[127], 0.7509804, epsilon = 1e-7);
        assert_eq!(c.p()[254], 1.0);
        assert_eq!(c.p()[299], 1.0);
    }

    #[test]
    fn expected_min() {
        assert_eq!(classical_expected_min(&inst(256, 2)), (1, 128.0));
        let (j, e) = classical_expected_min(&inst(4096, 924));
        assert_eq!(j, 1);
        assert_abs_diff_eq!(e, 4.4329, epsilon = 1e-4);
        assert_eq!(classical_expected_min(&inst(9, 9)), (1, 1.0));
    }

    #[test]
    fn without_dominates_with() {
        let i = inst(256, 42);
        let wr = classical_curve(&i, ClassicalModel::WithReplacement, 400).unwrap();
        let wo = classical_curve(&i, ClassicalModel::WithoutReplacement, 400).unwrap();
        for (j, (a, b)) in wr.p().iter().zip(wo.p()).enumerate() {
            assert!(b >= a, "j={}", j + 1);
            let j = j + 1;
            if (2..=214).contains(&j) && *a < 1.0 {
                assert!(b > a, "strict at j={j}");
            }
        }
    }
}
