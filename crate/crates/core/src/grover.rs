// SPDX-License-Identifier: Apache-2.0

//! Undamped Grover search, both as the two-dimensional closed form and as a
//! full state-vector simulation with an explicit oracle and diffusion.

use crate::error::{Error, Result};
use crate::instance::SearchInstance;
use crate::spectrum::OracleMask;

/// Per-state amplitudes after `j` Grover iterations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverAmplitudes {
    pub j: usize,
    /// Amplitude of each marked state.
    pub target: f64,
    /// Amplitude of each unmarked state.
    pub nontarget: f64,
}

pub fn closed_form_amplitudes(instance: &SearchInstance, j: usize) -> Result<GroverAmplitudes> {
    if instance.is_full() {
        return Err(Error::DegenerateInstance(
            "every item is a target; nontarget amplitude undefined".into(),
        ));
    }
    let angle = (2 * j + 1) as f64 * instance.theta();
    let m = instance.targets() as f64;
    let rest = (instance.items() - instance.targets()) as f64;
    Ok(GroverAmplitudes {
        j,
        target: angle.sin() / m.sqrt(),
        nontarget: angle.cos() / rest.sqrt(),
    })
}

/// `sin²((2j+1)θ)`.
pub fn success_probability_grover(instance: &SearchInstance, j: usize) -> f64 {
    if instance.is_full() {
        return 1.0;
    }
    let s = ((2 * j + 1) as f64 * instance.theta()).sin();
    s * s
}

/// Grover iteration restricted to the (target, nontarget) plane, acting on
/// the aggregate amplitudes `(√M·k, √(N−M)·l)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverRotation {
    /// `(N − 2M)/N`.
    pub cos_2theta: f64,
    /// `2√(NM − M²)/N`.
    pub sin_2theta: f64,
}

impl GroverRotation {
    /// `[[cos 2θ, sin 2θ], [−sin 2θ, cos 2θ]]`, rows acting on `(target, nontarget)`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [
            [self.cos_2theta, self.sin_2theta],
            [-self.sin_2theta, self.cos_2theta],
        ]
    }

    /// Maps `(target, nontarget)` one step forward.
    pub fn apply(&self, (target, nontarget): (f64, f64)) -> (f64, f64) {
        (
            self.cos_2theta * target + self.sin_2theta * nontarget,
            -self.sin_2theta * target + self.cos_2theta * nontarget,
        )
    }
}

pub fn grover_rotation(instance: &SearchInstance) -> GroverRotation {
    let n = instance.items() as f64;
    let m = instance.targets() as f64;
    GroverRotation {
        cos_2theta: (n - 2.0 * m) / n,
        sin_2theta: 2.0 * (n * m - m * m).sqrt() / n,
    }
}

/// Real amplitudes over the `2^n` computational basis states.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    amplitudes: Vec<f64>,
}

impl StateVector {
    pub fn uniform(dim: usize) -> Self {
        let a = 1.0 / (dim as f64).sqrt();
        Self { amplitudes: vec![a; dim] }
    }

    pub fn amplitudes(&self) -> &[f64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        compensated_sum(self.amplitudes.iter().map(|a| a * a)).sqrt()
    }

    pub fn probability_of(&self, indices: &[usize]) -> f64 {
        indices.iter().map(|&i| self.amplitudes[i].powi(2)).sum()
    }

    /// Phase oracle: negate the marked amplitudes.
    pub fn apply_oracle(&mut self, mask: &OracleMask) {
        for &i in mask.marked() {
            self.amplitudes[i] = -self.amplitudes[i];
        }
    }

    /// Reflection about the uniform superposition, `a_i ↦ 2·mean(a) − a_i`.
    pub fn apply_diffusion(&mut self) {
        let mean = compensated_sum(self.amplitudes.iter().copied()) / self.amplitudes.len() as f64;
        for a in &mut self.amplitudes {
            *a = 2.0 * mean - *a;
        }
    }

    pub fn grover_step(&mut self, mask: &OracleMask) {
        self.apply_oracle(mask);
        self.apply_diffusion();
    }
}

// Neumaier summation; plain sums over 2^12 terms drift past 1e-12 in a few hundred steps.
fn compensated_sum(values: impl Iterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut c = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Iterates a Grover search over the full state vector, calling `observe`
/// with the state after each iteration `0..=j`.
pub fn statevector_trajectory<F>(mask: &OracleMask, j: usize, mut observe: F) -> Result<StateVector>
where
    F: FnMut(usize, &StateVector),
{
    if !mask.is_searchable() {
        return Err(Error::DegenerateInstance(format!(
            "oracle marks {} of {} states",
            mask.len(),
            mask.dimension()
        )));
    }
    let mut state = StateVector::uniform(mask.dimension());
    observe(0, &state);
    for step in 1..=j {
        state.grover_step(mask);
        observe(step, &state);
    }
    Ok(state)
}

pub fn statevector_run(mask: &OracleMask, j: usize) -> Result<StateVector> {
    statevector_trajectory(mask, j, |_, _| {})
}

/// `P(1..=j_max)` for undamped Grover.
pub fn grover_curve(instance: &SearchInstance, j_max: usize) -> Vec<f64> {
    (1..=j_max)
        .map(|j| success_probability_grover(instance, j))
        .collect()
}
