// SPDX-License-Identifier: Apache-2.0

//! Grover, critically damped quantum and classical search over the
//! eigenstates of an open Ising chain.
//!
//! The building blocks are
//! - [`spectrum`]: the diagonal chain Hamiltonian, its degeneracies and
//!   oracle masks,
//! - [`grover`]: undamped Grover search in closed form and as a full
//!   state-vector simulation,
//! - [`damped`]: the damped search recurrence on `(Tr ρX, Tr ρZ, Tr ρ)`,
//! - [`classical`]: classical reference curves,
//! - [`analysis`]: expected iterations before success and their minima,
//! - [`report`] and [`cli`]: serialisation and the `dqs` binary.

pub mod analysis;
pub mod classical;
pub mod cli;
pub mod damped;
pub mod error;
pub mod grover;
pub mod instance;
pub mod report;
pub mod spectrum;

pub use analysis::{
    default_j_max, expected_curve, minimize_expected, overhead_ratio, queries_to_reach,
    CurveModel, CurveOptions, ExpectedIterationsResult, ModelKind, ProbabilityCurve,
};
pub use classical::{classical_curve, classical_expected_min, ClassicalModel};
pub use damped::{
    critical_damping, damped_probability_curve, initial_state, transfer_matrix,
    undamped_limit_check, DampedRecurrence, DampedState, DampingConfig, RecurrenceAngle,
    TransferMatrix,
};
pub use error::{Error, Result};
pub use grover::{
    closed_form_amplitudes, grover_rotation, statevector_run, success_probability_grover,
    GroverAmplitudes, GroverRotation, StateVector,
};
pub use instance::SearchInstance;
pub use spectrum::{
    build_diagonal, oracle_mask, spectrum, EnergyDiagonal, EnergySpectrum, IsingChain, OracleMask,
};
