// SPDX-License-Identifier: Apache-2.0

//! Expected iterations before success under a run-`j`-then-restart strategy.
//!
//! A search that checks for success after `j` iterations and restarts on
//! failure needs `E(j) = j / P(j)` iterations on average.

use serde::Serialize;

use crate::classical::{classical_curve, ClassicalModel};
use crate::damped::{damped_probability_curve, DampingConfig, RecurrenceAngle};
use crate::error::{Error, Result};
use crate::grover::grover_curve;
use crate::instance::SearchInstance;

/// Which search produced a curve, with the parameters that matter for it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CurveModel {
    Grover,
    Damped {
        cos_phi: f64,
        critical: bool,
        angle: RecurrenceAngle,
    },
    Classical(ClassicalModel),
}

/// The five model families a report can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    Grover,
    Damped,
    ClassicalReplace,
    ClassicalNoreplace,
    ClassicalFullyDamped,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Grover,
        ModelKind::Damped,
        ModelKind::ClassicalReplace,
        ModelKind::ClassicalNoreplace,
        ModelKind::ClassicalFullyDamped,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Grover => "grover",
            ModelKind::Damped => "damped",
            ModelKind::ClassicalReplace => "classical-replace",
            ModelKind::ClassicalNoreplace => "classical-noreplace",
            ModelKind::ClassicalFullyDamped => "classical-fully-damped",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl CurveModel {
    pub fn kind(&self) -> ModelKind {
        match self {
            CurveModel::Grover => ModelKind::Grover,
            CurveModel::Damped { .. } => ModelKind::Damped,
            CurveModel::Classical(ClassicalModel::WithReplacement) => ModelKind::ClassicalReplace,
            CurveModel::Classical(ClassicalModel::WithoutReplacement) => {
                ModelKind::ClassicalNoreplace
            }
            CurveModel::Classical(ClassicalModel::FullyDamped(_)) => {
                ModelKind::ClassicalFullyDamped
            }
        }
    }

    /// `cos φ` for the recurrence-based models.
    pub fn cos_phi(&self) -> Option<f64> {
        match self {
            CurveModel::Damped { cos_phi, .. } => Some(*cos_phi),
            CurveModel::Classical(ClassicalModel::FullyDamped(_)) => Some(0.0),
            _ => None,
        }
    }

    pub fn angle(&self) -> Option<RecurrenceAngle> {
        match self {
            CurveModel::Damped { angle, .. } => Some(*angle),
            CurveModel::Classical(ClassicalModel::FullyDamped(angle)) => Some(*angle),
            _ => None,
        }
    }
}

/// Knobs shared by curve generation across model kinds.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CurveOptions {
    pub damping: DampingConfig,
    pub angle: RecurrenceAngle,
}

/// Success probabilities `P(1..=j_max)`; `p()[j - 1]` is `P(j)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ProbabilityCurve {
    model: CurveModel,
    instance: SearchInstance,
    p: Vec<f64>,
}

impl ProbabilityCurve {
    pub fn new(model: CurveModel, instance: SearchInstance, p: Vec<f64>) -> Result<Self> {
        if p.is_empty() {
            return Err(Error::InvalidArgument("probability curve is empty".into()));
        }
        if let Some(&v) = p.iter().find(|v| !(0.0..=1.0).contains(*v)) {
            return Err(Error::Domain {
                name: "probability",
                value: v,
                domain: "[0, 1]",
            });
        }
        Ok(Self { model, instance, p })
    }

    pub fn generate(
        instance: &SearchInstance,
        kind: ModelKind,
        options: &CurveOptions,
        j_max: usize,
    ) -> Result<Self> {
        if j_max == 0 {
            return Err(Error::InvalidArgument("j_max must be at least 1".into()));
        }
        match kind {
            ModelKind::Grover => Self::new(CurveModel::Grover, *instance, grover_curve(instance, j_max)),
            ModelKind::Damped => {
                damped_probability_curve(instance, options.damping, options.angle, j_max)
            }
            ModelKind::ClassicalReplace => {
                classical_curve(instance, ClassicalModel::WithReplacement, j_max)
            }
            ModelKind::ClassicalNoreplace => {
                classical_curve(instance, ClassicalModel::WithoutReplacement, j_max)
            }
            ModelKind::ClassicalFullyDamped => {
                classical_curve(instance, ClassicalModel::FullyDamped(options.angle), j_max)
            }
        }
    }

    pub fn model(&self) -> &CurveModel {
        &self.model
    }

    pub fn instance(&self) -> &SearchInstance {
        &self.instance
    }

    pub fn p(&self) -> &[f64] {
        &self.p
    }

    pub fn j_max(&self) -> usize {
        self.p.len()
    }

    /// `P(j)` for `1 ≤ j ≤ j_max`; `P(0) = 0`.
    pub fn at(&self, j: usize) -> Option<f64> {
        match j {
            0 => Some(0.0),
            _ => self.p.get(j - 1).copied(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpectedIterationsResult {
    pub model: CurveModel,
    pub j_star: usize,
    pub e_min: f64,
    /// `E(1..=j_max)`, `None` where `P(j) = 0`.
    #[serde(skip)]
    pub e_curve: Vec<Option<f64>>,
    /// The minimum sits at `j_max` and may continue beyond the scan.
    pub saturated: bool,
}

/// Scan range used when none is given: `max(1000, ⌈50·√(N/M)⌉)`.
pub fn default_j_max(instance: &SearchInstance) -> usize {
    let scale = (50.0 * (instance.items() as f64 / instance.targets() as f64).sqrt()).ceil();
    (scale as usize).max(1000)
}

pub fn expected_curve(curve: &ProbabilityCurve) -> Result<Vec<Option<f64>>> {
    let e: Vec<Option<f64>> = curve
        .p
        .iter()
        .enumerate()
        .map(|(i, &p)| (p > 0.0).then(|| (i + 1) as f64 / p))
        .collect();
    if e.iter().all(Option::is_none) {
        return Err(Error::NoSuccess);
    }
    Ok(e)
}

pub fn minimize_expected(curve: &ProbabilityCurve) -> Result<ExpectedIterationsResult> {
    let e_curve = expected_curve(curve)?;
    let (j_star, e_min) = e_curve
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.map(|e| (i + 1, e)))
        // strict < keeps the smallest j on ties
        .fold(None, |best: Option<(usize, f64)>, (j, e)| match best {
            Some((_, b)) if e >= b => best,
            _ => Some((j, e)),
        })
        .expect("expected_curve guarantees a defined entry");
    Ok(ExpectedIterationsResult {
        model: curve.model,
        j_star,
        e_min,
        saturated: j_star == curve.j_max(),
        e_curve,
    })
}

/// Smallest `j` with `P(j) ≥ p_target`.
pub fn queries_to_reach(curve: &ProbabilityCurve, p_target: f64) -> Result<usize> {
    if !(p_target > 0.0 && p_target < 1.0) {
        return Err(Error::Domain {
            name: "p_target",
            value: p_target,
            domain: "(0, 1)",
        });
    }
    curve
        .p
        .iter()
        .position(|&p| p >= p_target)
        .map(|i| i + 1)
        .ok_or_else(|| Error::ThresholdUnreached {
            target: p_target,
            j_max: curve.j_max(),
            max_p: curve.p.iter().copied().fold(0.0, f64::max),
        })
}

/// `E_cs,min / E_dqs,min`; above one means the damped search wins.
pub fn overhead_ratio(classical: &ExpectedIterationsResult, damped: &ExpectedIterationsResult) -> f64 {
    classical.e_min / damped.e_min
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn inst(n: u64, m: u64) -> SearchInstance {
        SearchInstance::new(n, m).unwrap()
    }

    fn ones(len: usize) -> ProbabilityCurve {
        ProbabilityCurve::new(CurveModel::Grover, inst(4, 4), vec![1.0; len]).unwrap()
    }

    #[test]
    fn certain_success() {
        let c = ones(5);
        let e = expected_curve(&c).unwrap();
        assert_eq!(e, (1..=5).map(|j| Some(j as f64)).collect::<Vec<_>>());
        let r = minimize_expected(&c).unwrap();
        assert_eq!((r.j_star, r.e_min, r.saturated), (1, 1.0, false));
        assert_eq!(queries_to_reach(&c, 0.3).unwrap(), 1);
    }

    #[test]
    fn grover_m22() {
        let i = inst(4096, 22);
        let c = ProbabilityCurve::generate(&i, ModelKind::Grover, &CurveOptions::default(), 50)
            .unwrap();
        let e = expected_curve(&c).unwrap();
        let p10 = (21.0 * i.theta()).sin().powi(2);
        assert_abs_diff_eq!(e[9].unwrap(), 10.0 / p10, epsilon = 1e-12);
        assert_abs_diff_eq!(e[9].unwrap(), 10.009, epsilon = 1e-3);

        let r = minimize_expected(&c).unwrap();
        assert_eq!(r.j_star, 7);
        assert_abs_diff_eq!(r.e_min, 8.81, epsilon = 5e-3);
        assert_eq!(queries_to_reach(&c, 0.999).unwrap(), 10);
    }

    #[test]
    fn no_success() {
        let c = ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![0.0; 4]).unwrap();
        assert_eq!(expected_curve(&c), Err(Error::NoSuccess));
        assert_eq!(minimize_expected(&c), Err(Error::NoSuccess));
    }

    #[test]
    fn zero_entries_skipped() {
        let c = ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![0.0, 0.5, 0.25]).unwrap();
        let r = minimize_expected(&c).unwrap();
        assert_eq!(r.e_curve[0], None);
        assert_eq!((r.j_star, r.e_min), (2, 4.0));
    }

    #[test]
    fn ties_prefer_smaller_j() {
        let c = ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![0.25, 0.5, 0.1]).unwrap();
        let r = minimize_expected(&c).unwrap();
        assert_eq!((r.j_star, r.e_min), (1, 4.0));
    }

    #[test]
    fn saturation_flag() {
        let c = ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![0.1, 0.3, 0.9]).unwrap();
        assert!(minimize_expected(&c).unwrap().saturated);
    }

    #[test]
    fn threshold_errors() {
        let c = ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![0.1, 0.3]).unwrap();
        assert_eq!(
            queries_to_reach(&c, 0.5),
            Err(Error::ThresholdUnreached { target: 0.5, j_max: 2, max_p: 0.3 })
        );
        assert!(queries_to_reach(&c, 1.0).is_err());
        assert!(queries_to_reach(&c, 0.0).is_err());
    }

    #[test]
    fn ratios() {
        let c = ones(3);
        let r = minimize_expected(&c).unwrap();
        assert_eq!(overhead_ratio(&r, &r), 1.0);
        let mut cs = r.clone();
        cs.e_min = 128.0;
        let mut dqs = r;
        dqs.e_min = 19.1233;
        assert_abs_diff_eq!(overhead_ratio(&cs, &dqs), 6.693, epsilon = 1e-3);
    }

    #[test]
    fn curve_validation() {
        assert!(ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![]).is_err());
        assert!(ProbabilityCurve::new(CurveModel::Grover, inst(4, 1), vec![1.5]).is_err());
        assert_eq!(ones(2).at(0), Some(0.0));
        assert_eq!(ones(2).at(3), None);
    }

    #[test]
    fn default_scan_range() {
        assert_eq!(default_j_max(&inst(4096, 2)), 2263);
        assert_eq!(default_j_max(&inst(256, 70)), 1000);
    }

    #[test]
    fn model_names_round_trip() {
        for k in ModelKind::ALL {
            assert_eq!(ModelKind::from_name(k.name()), Some(k));
        }
    }
}
