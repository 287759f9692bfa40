//! Unitary time evolution `|psi(t)> = exp(-iHt) |psi(0)>`.
//!
//! Two routes compute the same thing and cross-check each other:
//! a spectral decomposition of the driver (reference path, used up to
//! dimension 1024) and fixed-step Lanczos propagation (scalable path,
//! used for the 12-qubit geometries).

pub mod eigh;
pub mod krylov;

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::operators::OperatorMatrix;
use crate::scalar::{czero, RealScalar};

pub use eigh::EighScalar;
pub use krylov::{krylov_evolve, KrylovConfig};

/// Largest dimension the automatic backend still diagonalizes densely.
pub const SPECTRAL_DIM_LIMIT: usize = 1024;

/// Normalized pure state of an n-qubit register.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<F: RealScalar> {
    n: usize,
    amplitudes: Array1<Complex<F>>,
}

impl<F: RealScalar> StateVector<F> {
    /// Wrap an amplitude vector; the length must be a power of two and
    /// the norm must be 1 (within 1e-6, to admit accumulated roundoff).
    pub fn from_amplitudes(amplitudes: Array1<Complex<F>>) -> Result<Self> {
        let len = amplitudes.len();
        if len == 0 || !len.is_power_of_two() {
            return Err(Error::domain(format!(
                "state length must be a power of two, got {len}"
            )));
        }
        let n = len.trailing_zeros() as usize;
        let norm = amplitudes.iter().map(|z| z.norm_sqr()).sum::<F>().sqrt();
        if (norm - F::one()).abs() > F::of(1e-6) {
            return Err(Error::domain(format!(
                "state vector must be normalized, got norm {norm}"
            )));
        }
        Ok(StateVector { n, amplitudes })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &Array1<Complex<F>> {
        &self.amplitudes
    }

    pub fn norm(&self) -> F {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum::<F>().sqrt()
    }

    pub fn basis_amplitude(&self, index: usize) -> Complex<F> {
        self.amplitudes[index]
    }

    /// `<self|other>`.
    pub fn inner(&self, other: &Self) -> Result<Complex<F>> {
        if self.dim() != other.dim() {
            return Err(Error::domain("state dimension mismatch".to_string()));
        }
        let mut acc = czero();
        for (a, b) in self.amplitudes.iter().zip(other.amplitudes.iter()) {
            acc += a.conj() * *b;
        }
        Ok(acc)
    }

    /// Real part of `<psi| op |psi>`.
    pub fn expectation(&self, op: &OperatorMatrix<F>) -> Result<F> {
        op.expectation(&self.amplitudes)
    }

    /// Max 2-norm distance to another state.
    pub fn distance(&self, other: &Self) -> Result<F> {
        if self.dim() != other.dim() {
            return Err(Error::domain("state dimension mismatch".to_string()));
        }
        let d = self
            .amplitudes
            .iter()
            .zip(other.amplitudes.iter())
            .map(|(a, b)| (*a - *b).norm_sqr())
            .sum::<F>();
        Ok(d.sqrt())
    }
}

/// The all-uncharged battery state `|0...0>`: amplitude 1 on basis
/// index 0.
pub fn uncharged_state<F: RealScalar>(n: usize) -> StateVector<F> {
    assert!(n >= 1, "need at least one qubit");
    let mut amplitudes = Array1::from_elem(1 << n, czero());
    amplitudes[0] = Complex::new(F::one(), F::zero());
    StateVector { n, amplitudes }
}

/// Eigendecomposition of a driver Hamiltonian, reused across a whole
/// time grid: `exp(-iHt) = V diag(exp(-i e t)) V^H`.
#[derive(Clone, Debug)]
pub struct SpectralPropagator<F: RealScalar> {
    eigenvalues: Array1<F>,
    eigenvectors: Array2<Complex<F>>,
}

impl<F: EighScalar> SpectralPropagator<F> {
    pub fn new(h: &OperatorMatrix<F>) -> Result<Self> {
        let herm = h.hermiticity_error();
        if herm > F::of(1e-12) {
            return Err(Error::domain(format!(
                "spectral propagator requires a Hermitian operator, deviation {herm:e}"
            )));
        }
        let (eigenvalues, eigenvectors) = F::eigh_hermitian(h.entries())?;
        Ok(SpectralPropagator {
            eigenvalues,
            eigenvectors,
        })
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> &Array1<F> {
        &self.eigenvalues
    }

    pub fn eigenvectors(&self) -> &Array2<Complex<F>> {
        &self.eigenvectors
    }

    /// `V diag(exp(-i e t)) V^H |psi0>`.
    pub fn evolve(&self, psi0: &StateVector<F>, t: F) -> Result<StateVector<F>> {
        if psi0.dim() != self.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: propagator is {}, state is {}",
                self.dim(),
                psi0.dim()
            )));
        }
        if t == F::zero() {
            return Ok(psi0.clone());
        }
        let dim = self.dim();
        let v = &self.eigenvectors;
        // c = V^H psi0, accumulated row-by-row for cache locality.
        let mut c = vec![czero::<F>(); dim];
        for (r, psi_r) in psi0.amplitudes.iter().enumerate() {
            for (k, ck) in c.iter_mut().enumerate() {
                *ck += v[[r, k]].conj() * *psi_r;
            }
        }
        for (k, ck) in c.iter_mut().enumerate() {
            *ck *= Complex::from_polar(F::one(), -self.eigenvalues[k] * t);
        }
        let mut out = Array1::from_elem(dim, czero::<F>());
        for (r, out_r) in out.iter_mut().enumerate() {
            let mut acc = czero();
            for (k, ck) in c.iter().enumerate() {
                acc += v[[r, k]] * *ck;
            }
            *out_r = acc;
        }
        StateVector::from_amplitudes(out)
    }

    /// Max-abs deviation of `V diag(e) V^H` from the original matrix.
    pub fn reconstruction_error(&self, h: &OperatorMatrix<F>) -> F {
        let dim = self.dim();
        let v = &self.eigenvectors;
        let mut worst = F::zero();
        for r in 0..dim {
            for c in 0..dim {
                let mut acc = czero::<F>();
                for k in 0..dim {
                    acc += v[[r, k]] * Complex::new(self.eigenvalues[k], F::zero()) * v[[c, k]].conj();
                }
                worst = worst.max((acc - h.entries()[[r, c]]).norm());
            }
        }
        worst
    }

    /// Max-abs deviation of `V^H V` from the identity.
    pub fn unitarity_error(&self) -> F {
        let dim = self.dim();
        let v = &self.eigenvectors;
        let mut worst = F::zero();
        for c1 in 0..dim {
            for c2 in 0..dim {
                let mut acc = czero::<F>();
                for r in 0..dim {
                    acc += v[[r, c1]].conj() * v[[r, c2]];
                }
                let want = if c1 == c2 { F::one() } else { F::zero() };
                worst = worst.max((acc - Complex::new(want, F::zero())).norm());
            }
        }
        worst
    }
}

/// Which propagation route a trajectory uses.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EvolutionBackend {
    /// Spectral up to [`SPECTRAL_DIM_LIMIT`], Krylov beyond.
    Auto,
    Spectral,
    Krylov,
}

impl EvolutionBackend {
    pub fn label(self) -> &'static str {
        match self {
            EvolutionBackend::Auto => "auto",
            EvolutionBackend::Spectral => "spectral",
            EvolutionBackend::Krylov => "krylov",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(EvolutionBackend::Auto),
            "spectral" => Ok(EvolutionBackend::Spectral),
            "krylov" => Ok(EvolutionBackend::Krylov),
            other => Err(Error::domain(format!(
                "unknown backend `{other}` (expected auto, spectral, or krylov)"
            ))),
        }
    }

    fn resolve(self, dim: usize) -> EvolutionBackend {
        match self {
            EvolutionBackend::Auto => {
                if dim <= SPECTRAL_DIM_LIMIT {
                    EvolutionBackend::Spectral
                } else {
                    EvolutionBackend::Krylov
                }
            }
            other => other,
        }
    }
}

fn validate_grid<F: RealScalar>(times: &[F]) -> Result<()> {
    if times.is_empty() {
        return Err(Error::domain("time grid must not be empty".to_string()));
    }
    if times[0] != F::zero() {
        return Err(Error::domain(format!(
            "time grid must start at 0, got {}",
            times[0]
        )));
    }
    for w in times.windows(2) {
        if w[1] <= w[0] {
            return Err(Error::domain(format!(
                "time grid must be strictly increasing, got {} after {}",
                w[1], w[0]
            )));
        }
    }
    Ok(())
}

/// One evolved state per sample time.
pub fn sample_trajectory<F: EighScalar>(
    h: &OperatorMatrix<F>,
    psi0: &StateVector<F>,
    times: &[F],
    backend: EvolutionBackend,
    krylov_cfg: &KrylovConfig<F>,
) -> Result<Vec<StateVector<F>>> {
    validate_grid(times)?;
    if h.dim() != psi0.dim() {
        return Err(Error::domain(format!(
            "dimension mismatch: operator is {}, state is {}",
            h.dim(),
            psi0.dim()
        )));
    }
    match backend.resolve(h.dim()) {
        EvolutionBackend::Spectral => {
            let prop = SpectralPropagator::new(h)?;
            times.iter().map(|&t| prop.evolve(psi0, t)).collect()
        }
        EvolutionBackend::Krylov => krylov::krylov_trajectory(h, psi0, times, krylov_cfg),
        EvolutionBackend::Auto => unreachable!("resolved above"),
    }
}
