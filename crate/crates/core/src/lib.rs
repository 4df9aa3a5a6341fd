//! Component-composable time-domain simulation and small-signal analysis for
//! low-inertia power systems.
//!
//! The library models an electrical network as an index-1 semi-explicit DAE:
//! algebraic current-injection balances at the buses, differential equations
//! contributed by dynamic injection devices (synchronous generators and
//! voltage-source inverters built from exchangeable component slots) and by
//! dynamic branches. On top of that sit
//!
//! * a Newton-Raphson power flow and per-device back-solve that produce a
//!   consistent equilibrium ([`init`]),
//! * an implicit variable-order BDF integrator with event-driven
//!   perturbations ([`solver`]), and
//! * small-signal analysis via finite-difference Jacobians, algebraic
//!   elimination and eigenanalysis of the reduced system ([`small_signal`]).
//!
//! The usual flow is: parse a case file into a [`system::System`], compile
//! and initialize it with [`init::initialize`], then hand the resulting
//! model to [`solver::simulate`] and/or [`small_signal::analyze`].

pub mod assembly;
pub mod error;
pub mod generator;
pub mod init;
pub mod inverter;
pub mod network;
pub mod numeric;
pub mod small_signal;
pub mod solver;
pub mod system;

pub use error::Error;

/// Complex scalar used for phasor quantities throughout the crate.
pub type C64 = num_complex::Complex64;
