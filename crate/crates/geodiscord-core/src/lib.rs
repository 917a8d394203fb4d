//! Geometric quantum discord of two qubits in structured reservoirs.
//!
//! This crate bundles three layers, bottom to top:
//!
//! * [`matrix`], [`eig`], [`state`], [`bloch`] — dense complex linear algebra
//!   on small Hilbert spaces (dim ≤ 8): Kronecker products, a cyclic-Jacobi
//!   Hermitian eigensolver, PSD matrix square roots, the trace norm, the
//!   Uhlmann fidelity, density-matrix validation and partial traces.
//! * [`discord`] — the trace-distance discord D_T and the Bures-distance
//!   discord D_B of two-qubit states: closed forms for X states and
//!   Bell-diagonal states, the general 2×n fidelity maximization over Bloch
//!   directions, and an independent measurement-grid oracle for D_T.
//! * [`dynamics`] — exact decoherence of two qubits in independent or common
//!   zero-temperature Lorentzian reservoirs (amplitude-damping Kraus maps,
//!   bright/dark collective decomposition, steady states, critical times),
//!   plus a pseudomode Runge–Kutta oracle for the common-reservoir case.
//!
//! Everything is `no_std`-compatible (with `alloc`); float math comes from
//! `libm` when the `std` feature is disabled. All dynamics are expressed in
//! scaled time γ₀t, so only the ratios λ/γ₀ and δ/γ₀ matter.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod bloch;
pub mod discord;
pub mod dynamics;
pub mod eig;
pub mod error;
pub mod matrix;
pub mod state;

pub use bloch::{sigma_u, PauliBasis, UnitVector3};
pub use discord::{
    classify_state, db_from_fmax, db_pure, discord_of_state, dt_bell_diagonal,
    dt_measurement_oracle, dt_xstate, fmax_2xn, fmax_bell_diagonal, BellDiagonalParams,
    FmaxResult, Measure, MeasurementGrid, StateClass, XStateParams,
};
pub use dynamics::{
    amplitude_common, amplitude_independent, critical_times, discord_at, discord_trace,
    discord_trace_with_grid, evolve_common, evolve_independent, evolve_independent_state,
    ode_oracle_common, steady_common, AmplitudeTriple, InitialPhi, Regime, ReservoirParams,
    TimeSeries, Topology,
};
pub use eig::{herm_eig, herm_eigvals, matrix_sqrt_psd, trace_norm, uhlmann_fidelity, HermEig};
pub use error::Error;
pub use matrix::{kron, ComplexMatrix, C64};
pub use state::{DensityMatrix, Subsystem};
