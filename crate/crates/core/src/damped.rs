// SPDX-License-Identifier: Apache-2.0

//! Critically damped quantum search as a three-component recurrence.
//!
//! The system is tracked through the traces `(x, z, t) = (Tr ρX, Tr ρZ, Tr ρ)`
//! of its unnormalised density matrix restricted to the (target, nontarget)
//! plane, with `Z = +1` on the nontarget direction. Each step rotates the
//! `(x, z)` Bloch components and removes weight from the target component
//! according to the damping `cos φ`; `Tr ρ` is the probability that no
//! target has been detected yet, so the success probability is `1 − t`.
//!
//! The rotation angle of the recurrence is selected by [`RecurrenceAngle`].

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use crate::analysis::{CurveModel, ProbabilityCurve};
use crate::error::{Error, Result};
use crate::instance::SearchInstance;

/// How the recurrence angle relates to the instance's Grover angle `θ`
/// (`sin²θ = M/N`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecurrenceAngle {
    /// Recurrence angle `2θ`: the Bloch-sphere angle of the initial state.
    /// One step is one Grover query, and the undamped recurrence gives
    /// `z_j = 1 − 2 sin²((2j+1)θ)`.
    #[default]
    Doubled,
    /// Recurrence angle `θ` itself. One step is half a Grover rotation.
    Amplitude,
}

impl RecurrenceAngle {
    pub fn angle(self, instance: &SearchInstance) -> f64 {
        match self {
            RecurrenceAngle::Doubled => 2.0 * instance.theta(),
            RecurrenceAngle::Amplitude => instance.theta(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RecurrenceAngle::Doubled => "doubled",
            RecurrenceAngle::Amplitude => "amplitude",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum DampingConfig {
    /// `cos φ = (1 − sin θ)/(1 + sin θ)` for the recurrence angle `θ`.
    #[default]
    Critical,
    /// User-supplied `cos φ ∈ [0, 1]`.
    Explicit(f64),
}

impl DampingConfig {
    pub fn explicit(cos_phi: f64) -> Result<Self> {
        check_cos_phi(cos_phi)?;
        Ok(DampingConfig::Explicit(cos_phi))
    }

    pub fn is_critical(&self) -> bool {
        matches!(self, DampingConfig::Critical)
    }

    /// The `cos φ` this configuration uses for recurrence angle `theta`.
    pub fn resolve(&self, theta: f64) -> Result<f64> {
        match *self {
            DampingConfig::Critical => Ok(critical_damping_for_angle(theta)),
            DampingConfig::Explicit(c) => {
                check_cos_phi(c)?;
                Ok(c)
            }
        }
    }
}

fn check_cos_phi(cos_phi: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&cos_phi) {
        return Err(Error::Domain {
            name: "cos_phi",
            value: cos_phi,
            domain: "[0, 1]",
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DampedState {
    /// `Tr(ρX)`.
    pub x: f64,
    /// `Tr(ρZ)`.
    pub z: f64,
    /// `Tr(ρ)`, the probability that the search has not yet succeeded.
    pub t: f64,
}

impl DampedState {
    pub fn success_probability(&self) -> f64 {
        (1.0 - self.t).clamp(0.0, 1.0)
    }
}

/// Rows ordered `(x', z', t')`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub rows: [[f64; 3]; 3],
}

impl TransferMatrix {
    pub fn apply(&self, s: &DampedState) -> DampedState {
        let [r0, r1, r2] = &self.rows;
        DampedState {
            x: r0[0] * s.x + r0[1] * s.z + r0[2] * s.t,
            z: r1[0] * s.x + r1[1] * s.z + r1[2] * s.t,
            t: r2[0] * s.x + r2[1] * s.z + r2[2] * s.t,
        }
    }
}

/// Critical damping for recurrence angle `theta`.
///
/// The rotation is capped at a quarter turn, so angles past `π/2` (more than
/// half the database marked under [`RecurrenceAngle::Doubled`]) are fully
/// damped.
pub fn critical_damping_for_angle(theta: f64) -> f64 {
    let s = theta.min(FRAC_PI_2).sin();
    (1.0 - s) / (1.0 + s)
}

pub fn critical_damping(instance: &SearchInstance, angle: RecurrenceAngle) -> f64 {
    critical_damping_for_angle(angle.angle(instance))
}

pub fn transfer_matrix(theta: f64, cos_phi: f64) -> Result<TransferMatrix> {
    if !(0.0..=PI).contains(&theta) {
        return Err(Error::Domain {
            name: "theta",
            value: theta,
            domain: "[0, pi]",
        });
    }
    check_cos_phi(cos_phi)?;
    let (s2, c2) = (2.0 * theta).sin_cos();
    let cos2 = cos_phi * cos_phi;
    let keep = (1.0 + cos2) / 2.0;
    let lose = (1.0 - cos2) / 2.0;
    Ok(TransferMatrix {
        rows: [
            [c2 * cos_phi, s2 * keep, s2 * lose],
            [-s2 * cos_phi, c2 * keep, c2 * lose],
            [0.0, lose, keep],
        ],
    })
}

pub fn initial_state_for_angle(theta: f64) -> DampedState {
    let (x, z) = theta.sin_cos();
    DampedState { x, z, t: 1.0 }
}

pub fn initial_state(instance: &SearchInstance, angle: RecurrenceAngle) -> DampedState {
    initial_state_for_angle(angle.angle(instance))
}

/// A configured recurrence: angle, damping and the resulting matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DampedRecurrence {
    theta: f64,
    cos_phi: f64,
    matrix: TransferMatrix,
}

impl DampedRecurrence {
    pub fn from_angle(theta: f64, cos_phi: f64) -> Result<Self> {
        Ok(Self {
            theta,
            cos_phi,
            matrix: transfer_matrix(theta, cos_phi)?,
        })
    }

    pub fn new(
        instance: &SearchInstance,
        damping: DampingConfig,
        angle: RecurrenceAngle,
    ) -> Result<Self> {
        let theta = angle.angle(instance);
        Self::from_angle(theta, damping.resolve(theta)?)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn cos_phi(&self) -> f64 {
        self.cos_phi
    }

    pub fn matrix(&self) -> &TransferMatrix {
        &self.matrix
    }

    /// States `0..=j_max`, starting from `(sin θ, cos θ, 1)`.
    pub fn trajectory(&self, j_max: usize) -> Vec<DampedState> {
        let mut out = Vec::with_capacity(j_max + 1);
        let mut state = initial_state_for_angle(self.theta);
        out.push(state);
        for _ in 0..j_max {
            state = self.matrix.apply(&state);
            out.push(state);
        }
        out
    }

    /// `P(1..=j_max)`.
    pub fn success_curve(&self, j_max: usize) -> Vec<f64> {
        self.trajectory(j_max)[1..]
            .iter()
            .map(DampedState::success_probability)
            .collect()
    }
}

pub fn damped_probability_curve(
    instance: &SearchInstance,
    damping: DampingConfig,
    angle: RecurrenceAngle,
    j_max: usize,
) -> Result<ProbabilityCurve> {
    if j_max == 0 {
        return Err(Error::InvalidArgument("j_max must be at least 1".into()));
    }
    let rec = DampedRecurrence::new(instance, damping, angle)?;
    let model = CurveModel::Damped {
        cos_phi: rec.cos_phi(),
        critical: damping.is_critical(),
        angle,
    };
    ProbabilityCurve::new(model, *instance, rec.success_curve(j_max))
}

/// Largest deviation of the undamped (`cos φ = 1`) recurrence from the pure
/// rotation `(sin((2j+1)θ), cos((2j+1)θ))` over `j ≤ j_max`.
pub fn undamped_limit_check(instance: &SearchInstance, angle: RecurrenceAngle, j_max: usize) -> f64 {
    let theta = angle.angle(instance);
    let rec = DampedRecurrence::from_angle(theta, 1.0).expect("angle in range, cos_phi = 1");
    rec.trajectory(j_max)
        .iter()
        .enumerate()
        .map(|(j, s)| {
            let a = (2 * j + 1) as f64 * theta;
            (s.x - a.sin()).abs().max((s.z - a.cos()).abs())
        })
        .fold(0.0, f64::max)
}
