//! Assembly of the battery, transverse-field, exchange, and DMI terms
//! into the full charging/driver Hamiltonian for a given topology.
//!
//! Per edge `(i, j)` (stored with `i < j`) the exchange term is
//! `J*hbar*[(1+delta) XiXj + (1-delta) YiYj + Delta ZiZj]` and the DMI
//! term is `D*(XiYj - YiXj)`. The driver is
//! `H = H_x + H_exchange + H_dmi + lambda * H_battery`.
//!
//! Terms are accumulated column-by-column (a Pauli product has one
//! nonzero per column), so assembly is O(terms * 2^n) with no dense
//! matrix products.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::operators::{OperatorMatrix, PauliAxis};
use crate::scalar::{cplx, RealScalar};
use crate::topology::SpinTopology;

/// All scalar couplings of the model.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct ModelParams<F: RealScalar> {
    /// Exchange coupling J.
    pub j: F,
    /// In-plane anisotropy delta (weights XX vs YY as 1+delta / 1-delta).
    pub delta_xy: F,
    /// Axial anisotropy Delta (weights ZZ).
    pub delta_z: F,
    /// Dzyaloshinskii-Moriya strength D (z-component).
    pub dmi: F,
    /// Transverse field strength Omega.
    pub omega: F,
    /// Larmor frequency omega_0 of the battery splitting.
    pub omega0: F,
    /// Weight of the battery Hamiltonian inside the driver, in [0, 1].
    pub lambda: F,
    /// Reduced Planck constant (1 in all presets).
    pub hbar: F,
}

impl<F: RealScalar> ModelParams<F> {
    /// Ising parameters (delta = 1, Delta = 0) with the standard field
    /// strengths Omega = omega0 = hbar = 1.
    pub fn ising(j: F, dmi: F, lambda: F) -> Self {
        ModelParams {
            j,
            delta_xy: F::one(),
            delta_z: F::zero(),
            dmi,
            omega: F::one(),
            omega0: F::one(),
            lambda,
            hbar: F::one(),
        }
    }

    /// XXZ parameters (delta = 0) with the standard field strengths.
    pub fn xxz(j: F, delta_z: F, dmi: F, lambda: F) -> Self {
        ModelParams {
            j,
            delta_xy: F::zero(),
            delta_z,
            dmi,
            omega: F::one(),
            omega0: F::one(),
            lambda,
            hbar: F::one(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda < F::zero() || self.lambda > F::one() {
            return Err(Error::domain(format!(
                "lambda must lie in [0, 1], got {}",
                self.lambda
            )));
        }
        if self.omega0 <= F::zero() {
            return Err(Error::domain(format!("omega0 must be positive, got {}", self.omega0)));
        }
        if self.omega < F::zero() {
            return Err(Error::domain(format!(
                "Omega must be non-negative, got {}",
                self.omega
            )));
        }
        Ok(())
    }
}

/// Model family, constraining the anisotropy parameters.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ModelKind {
    /// delta = 1, Delta = 0: only XX exchange survives.
    Ising,
    /// delta = 0: isotropic in-plane exchange plus an axial ZZ coupling.
    Xxz,
    /// No constraint on the anisotropies.
    Custom,
}

impl ModelKind {
    pub fn label(self) -> &'static str {
        match self {
            ModelKind::Ising => "ising",
            ModelKind::Xxz => "xxz",
            ModelKind::Custom => "custom",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "ising" => Ok(ModelKind::Ising),
            "xxz" => Ok(ModelKind::Xxz),
            "custom" => Ok(ModelKind::Custom),
            other => Err(Error::domain(format!(
                "unknown model kind `{other}` (expected ising, xxz, or custom)"
            ))),
        }
    }

    /// Check that the anisotropies satisfy this kind's constraints.
    pub fn check<F: RealScalar>(self, params: &ModelParams<F>) -> Result<()> {
        match self {
            ModelKind::Ising => {
                if params.delta_xy != F::one() || params.delta_z != F::zero() {
                    return Err(Error::domain(format!(
                        "ising model requires delta = 1 and Delta = 0, got delta = {}, Delta = {}",
                        params.delta_xy, params.delta_z
                    )));
                }
            }
            ModelKind::Xxz => {
                if params.delta_xy != F::zero() {
                    return Err(Error::domain(format!(
                        "xxz model requires delta = 0, got delta = {}",
                        params.delta_xy
                    )));
                }
            }
            ModelKind::Custom => {}
        }
        Ok(())
    }
}

fn real<F: RealScalar>(x: F) -> Complex<F> {
    cplx(x, F::zero())
}

fn accumulate_battery<F: RealScalar>(m: &mut OperatorMatrix<F>, n: usize, scale: F) {
    for site in 1..=n {
        m.accumulate_pauli_product(real(scale), &[(site, PauliAxis::Z)]);
    }
}

fn accumulate_transverse<F: RealScalar>(m: &mut OperatorMatrix<F>, n: usize, scale: F) {
    for site in 1..=n {
        m.accumulate_pauli_product(real(scale), &[(site, PauliAxis::X)]);
    }
}

fn accumulate_exchange<F: RealScalar>(
    m: &mut OperatorMatrix<F>,
    topology: &SpinTopology,
    params: &ModelParams<F>,
) {
    let jh = params.j * params.hbar;
    let cxx = jh * (F::one() + params.delta_xy);
    let cyy = jh * (F::one() - params.delta_xy);
    let czz = jh * params.delta_z;
    for e in topology.edges() {
        m.accumulate_pauli_product(real(cxx), &[(e.i, PauliAxis::X), (e.j, PauliAxis::X)]);
        m.accumulate_pauli_product(real(cyy), &[(e.i, PauliAxis::Y), (e.j, PauliAxis::Y)]);
        m.accumulate_pauli_product(real(czz), &[(e.i, PauliAxis::Z), (e.j, PauliAxis::Z)]);
    }
}

fn accumulate_dmi<F: RealScalar>(
    m: &mut OperatorMatrix<F>,
    topology: &SpinTopology,
    params: &ModelParams<F>,
) {
    let d = params.dmi;
    for e in topology.edges() {
        m.accumulate_pauli_product(real(d), &[(e.i, PauliAxis::X), (e.j, PauliAxis::Y)]);
        m.accumulate_pauli_product(real(-d), &[(e.i, PauliAxis::Y), (e.j, PauliAxis::X)]);
    }
}

/// Internal battery Hamiltonian `H_B = hbar*omega0 * sum_i Z_i` (diagonal).
pub fn battery_hamiltonian<F: RealScalar>(n: usize, params: &ModelParams<F>) -> OperatorMatrix<F> {
    let mut m = OperatorMatrix::zeros(1 << n);
    accumulate_battery(&mut m, n, params.hbar * params.omega0);
    m
}

/// Transverse charging field `H_x = hbar*Omega * sum_i X_i`.
pub fn transverse_field<F: RealScalar>(n: usize, params: &ModelParams<F>) -> OperatorMatrix<F> {
    let mut m = OperatorMatrix::zeros(1 << n);
    accumulate_transverse(&mut m, n, params.hbar * params.omega);
    m
}

/// Anisotropic exchange term summed over the topology's edges.
pub fn heisenberg_term<F: RealScalar>(
    topology: &SpinTopology,
    params: &ModelParams<F>,
) -> OperatorMatrix<F> {
    let mut m = OperatorMatrix::zeros(1 << topology.n());
    accumulate_exchange(&mut m, topology, params);
    m
}

/// z-axis DMI term `D * sum_edges (XiYj - YiXj)` with `i < j` as stored.
pub fn dmi_term<F: RealScalar>(
    topology: &SpinTopology,
    params: &ModelParams<F>,
) -> OperatorMatrix<F> {
    let mut m = OperatorMatrix::zeros(1 << topology.n());
    accumulate_dmi(&mut m, topology, params);
    m
}

/// Full driver `H = H_x + H_exchange + H_dmi + lambda * H_B`, assembled
/// into a single dense matrix.
pub fn driver_hamiltonian<F: RealScalar>(
    topology: &SpinTopology,
    params: &ModelParams<F>,
) -> OperatorMatrix<F> {
    let n = topology.n();
    let mut m = OperatorMatrix::zeros(1 << n);
    accumulate_transverse(&mut m, n, params.hbar * params.omega);
    accumulate_exchange(&mut m, topology, params);
    accumulate_dmi(&mut m, topology, params);
    accumulate_battery(&mut m, n, params.lambda * params.hbar * params.omega0);
    m
}
