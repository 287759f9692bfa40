//! Exact-numerics simulator for spin-chain quantum batteries.
//!
//! A battery of `n` qubits starts in the all-uncharged state and is
//! charged by unitary evolution under a driver built from a transverse
//! field, anisotropic Heisenberg exchange, and the z-component of the
//! Dzyaloshinskii-Moriya interaction, all summed over the edges of an
//! interaction graph. The crate reports ergotropy and charging power
//! along the trajectory, ships a preset catalog of experiments over the
//! chain/supercube/polyhedron topologies, and exposes a CLI with
//! deterministic CSV and SVG output.
//!
//! The numerical core is generic over the floating-point scalar (see
//! [`scalar::RealScalar`]); the aliases below fix `f64`, which is what
//! presets, the CLI, and the file formats use.

pub mod error;
pub mod evolution;
pub mod experiments;
pub mod hamiltonian;
pub mod metrics;
pub mod operators;
pub mod scalar;
pub mod topology;

pub use error::{Error, Result};

/// Scalar type used by presets, the CLI, and the file formats.
pub type Real = f64;

/// Dense operator over the n-qubit space at the default precision.
pub type Operator = operators::OperatorMatrix<Real>;

/// Pure state at the default precision.
pub type State = evolution::StateVector<Real>;

/// Model couplings at the default precision.
pub type Params = hamiltonian::ModelParams<Real>;

/// Spectral propagator at the default precision.
pub type Propagator = evolution::SpectralPropagator<Real>;

/// Krylov settings at the default precision.
pub type Krylov = evolution::KrylovConfig<Real>;
