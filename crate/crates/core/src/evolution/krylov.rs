//! Lanczos (Krylov-subspace) propagation of `exp(-iHt)|psi>`.
//!
//! The scalable alternative to the spectral path for large dimensions:
//! a short Lanczos recurrence with full reorthogonalization builds an
//! orthonormal basis `Q` and a real symmetric tridiagonal `T` with
//! `H Q ~ Q T`; the step is then `Q exp(-i dt T) e1`. The small
//! exponential is evaluated through an in-crate Jacobi eigensolver, so
//! this route shares no factorization code with the spectral backend.
//!
//! Propagation is fixed-step: `t` is split into `ceil(|t|/step_size)`
//! equal steps, and every step must pass the residual check
//! `beta_m * |y_m| <= tolerance` within `subspace_dim` basis vectors or
//! the evolution aborts with a convergence error. Truncation is never
//! silent.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::operators::OperatorMatrix;
use crate::scalar::{czero, RealScalar};

use super::StateVector;

/// Tuning knobs for the Lanczos propagator.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct KrylovConfig<F: RealScalar> {
    /// Maximum Krylov subspace dimension per step.
    pub subspace_dim: usize,
    /// Time increment of one fixed step.
    pub step_size: F,
    /// Residual bound each step must reach.
    pub tolerance: F,
}

impl<F: RealScalar> Default for KrylovConfig<F> {
    fn default() -> Self {
        KrylovConfig {
            subspace_dim: 30,
            step_size: F::of(0.05),
            tolerance: F::of(1e-10),
        }
    }
}

impl<F: RealScalar> KrylovConfig<F> {
    pub fn validate(&self) -> Result<()> {
        if self.subspace_dim < 2 {
            return Err(Error::domain(format!(
                "krylov subspace dimension must be at least 2, got {}",
                self.subspace_dim
            )));
        }
        if self.step_size <= F::zero() {
            return Err(Error::domain(format!(
                "krylov step size must be positive, got {}",
                self.step_size
            )));
        }
        if self.tolerance <= F::zero() {
            return Err(Error::domain(format!(
                "krylov tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

/// Lanczos factorization anchored at one state: orthonormal basis
/// vectors plus the tridiagonal coefficients. `beta[k]` is the residual
/// norm after orthogonalizing against basis vector `k`; `beta[m-1]`
/// feeds the a-posteriori error estimate.
pub(crate) struct LanczosBasis<F: RealScalar> {
    basis: Vec<Array1<Complex<F>>>,
    alpha: Vec<F>,
    beta: Vec<F>,
    exhausted: bool,
}

impl<F: RealScalar> LanczosBasis<F> {
    /// Grow the factorization from `v` (must be normalized) until the
    /// propagation residual at time offset `tau` drops below
    /// `cfg.tolerance`, the recurrence breaks down (invariant subspace),
    /// or `cfg.subspace_dim` vectors are exhausted without convergence.
    pub(crate) fn grow(
        h: &OperatorMatrix<F>,
        v: &Array1<Complex<F>>,
        tau: F,
        cfg: &KrylovConfig<F>,
    ) -> Result<Self> {
        let breakdown = F::of(1e-14);
        let mut lz = LanczosBasis {
            basis: vec![v.clone()],
            alpha: Vec::new(),
            beta: Vec::new(),
            exhausted: false,
        };
        loop {
            let q = lz.basis.last().expect("basis never empty");
            let mut w = h.matvec(q)?;
            if let Some(prev_beta) = lz.beta.last().copied() {
                let prev = &lz.basis[lz.basis.len() - 2];
                for (wi, pi) in w.iter_mut().zip(prev.iter()) {
                    *wi = *wi - *pi * Complex::new(prev_beta, F::zero());
                }
            }
            let a = dot(q, &w).re;
            lz.alpha.push(a);
            for (wi, qi) in w.iter_mut().zip(q.iter()) {
                *wi = *wi - *qi * Complex::new(a, F::zero());
            }
            // Full reorthogonalization, two passes.
            for _ in 0..2 {
                for b in &lz.basis {
                    let c = dot(b, &w);
                    for (wi, bi) in w.iter_mut().zip(b.iter()) {
                        *wi = *wi - *bi * c;
                    }
                }
            }
            let b = norm(&w);
            lz.beta.push(b);

            if b < breakdown {
                // Invariant subspace: the factorization is exact.
                lz.exhausted = true;
                return Ok(lz);
            }
            if lz.alpha.len() >= 2 {
                let (_, err) = lz.eval_small(tau);
                if err <= cfg.tolerance {
                    return Ok(lz);
                }
            }
            if lz.alpha.len() >= cfg.subspace_dim {
                let (_, err) = lz.eval_small(tau);
                return Err(Error::convergence(format!(
                    "lanczos step did not converge: residual {err:e} > tolerance {:e} \
                     with subspace dimension {} at step size {}",
                    cfg.tolerance, cfg.subspace_dim, tau
                )));
            }
            let mut next = w;
            let inv = F::one() / b;
            for x in next.iter_mut() {
                *x = *x * Complex::new(inv, F::zero());
            }
            lz.basis.push(next);
        }
    }

    /// Solve the small problem only: `y = exp(-i tau T) e1` plus the
    /// residual estimate `beta_m * |y_m|`.
    fn eval_small(&self, tau: F) -> (Vec<Complex<F>>, F) {
        let m = self.alpha.len();
        let mut tmat = Array2::from_elem((m, m), F::zero());
        for k in 0..m {
            tmat[[k, k]] = self.alpha[k];
            if k + 1 < m {
                tmat[[k, k + 1]] = self.beta[k];
                tmat[[k + 1, k]] = self.beta[k];
            }
        }
        let (evals, evecs) = jacobi_eigh(&tmat);
        // y = S exp(-i tau L) S^T e1
        let mut y = vec![czero::<F>(); m];
        for k in 0..m {
            let phase = Complex::from_polar(F::one(), -evals[k] * tau);
            let weight = phase * Complex::new(evecs[[0, k]], F::zero());
            for (i, yi) in y.iter_mut().enumerate() {
                *yi += Complex::new(evecs[[i, k]], F::zero()) * weight;
            }
        }
        let err = if self.exhausted {
            F::zero()
        } else {
            self.beta[m - 1] * y[m - 1].norm()
        };
        (y, err)
    }

    /// Evaluate `Q exp(-i tau T) e1` and the residual estimate
    /// `beta_m * |y_m|` for this factorization.
    pub(crate) fn evaluate(&self, tau: F) -> (Array1<Complex<F>>, F) {
        let dim = self.basis[0].len();
        let (y, err) = self.eval_small(tau);
        let mut out = Array1::from_elem(dim, czero::<F>());
        for (i, coeff) in y.iter().enumerate() {
            for (o, b) in out.iter_mut().zip(self.basis[i].iter()) {
                *o += *b * *coeff;
            }
        }
        (out, err)
    }
}

fn dot<F: RealScalar>(a: &Array1<Complex<F>>, b: &Array1<Complex<F>>) -> Complex<F> {
    let mut acc = czero();
    for (x, y) in a.iter().zip(b.iter()) {
        acc += x.conj() * *y;
    }
    acc
}

fn norm<F: RealScalar>(a: &Array1<Complex<F>>) -> F {
    a.iter().map(|z| z.norm_sqr()).sum::<F>().sqrt()
}

/// Propagate `exp(-iHt)|psi0>` with fixed-step Lanczos.
pub fn krylov_evolve<F: RealScalar>(
    h: &OperatorMatrix<F>,
    psi0: &StateVector<F>,
    t: F,
    cfg: &KrylovConfig<F>,
) -> Result<StateVector<F>> {
    cfg.validate()?;
    if h.dim() != psi0.dim() {
        return Err(Error::domain(format!(
            "dimension mismatch: operator is {}, state is {}",
            h.dim(),
            psi0.dim()
        )));
    }
    if h.hermiticity_error() > F::of(1e-12) {
        return Err(Error::domain(
            "krylov propagation requires a Hermitian operator".to_string(),
        ));
    }
    if t == F::zero() {
        return Ok(psi0.clone());
    }
    let steps = (t.abs() / cfg.step_size).ceil();
    let n_steps = steps
        .to_f64()
        .map(|s| s as usize)
        .filter(|&s| s >= 1)
        .unwrap_or(1);
    let dt = t / F::of(n_steps as f64);
    let mut v = psi0.amplitudes().clone();
    for _ in 0..n_steps {
        let lz = LanczosBasis::grow(h, &v, dt, cfg)?;
        let (next, _) = lz.evaluate(dt);
        v = next;
    }
    StateVector::from_amplitudes(v)
}

/// Sample `exp(-iHt_k)|psi0>` along an increasing grid, carrying the
/// state between anchors spaced `cfg.step_size` apart and evaluating all
/// samples inside a step from the same Lanczos factorization.
pub(crate) fn krylov_trajectory<F: RealScalar>(
    h: &OperatorMatrix<F>,
    psi0: &StateVector<F>,
    times: &[F],
    cfg: &KrylovConfig<F>,
) -> Result<Vec<StateVector<F>>> {
    cfg.validate()?;
    if h.hermiticity_error() > F::of(1e-12) {
        return Err(Error::domain(
            "krylov propagation requires a Hermitian operator".to_string(),
        ));
    }
    let step = cfg.step_size;
    let slack = F::of(1.0 + 1e-12);
    let mut out = Vec::with_capacity(times.len());
    out.push(psi0.clone());
    let mut anchor = psi0.amplitudes().clone();
    let mut anchor_t = times[0];
    let mut factorization: Option<LanczosBasis<F>> = None;
    for &t in &times[1..] {
        while t - anchor_t > step * slack {
            let lz = match factorization.take() {
                Some(lz) => lz,
                None => LanczosBasis::grow(h, &anchor, step, cfg)?,
            };
            let (next, err) = lz.evaluate(step);
            debug_assert!(err <= cfg.tolerance);
            anchor = next;
            anchor_t = anchor_t + step;
        }
        let tau = t - anchor_t;
        if factorization.is_none() {
            factorization = Some(LanczosBasis::grow(h, &anchor, step, cfg)?);
        }
        let lz = factorization.as_ref().expect("factorization just built");
        let (sample, err) = lz.evaluate(tau);
        if err > cfg.tolerance {
            return Err(Error::convergence(format!(
                "lanczos sample at t = {t} exceeded tolerance: residual {err:e}"
            )));
        }
        out.push(StateVector::from_amplitudes(sample)?);
    }
    Ok(out)
}

/// Cyclic Jacobi eigendecomposition of a small real symmetric matrix.
/// Returns eigenvalues in ascending order with matching eigenvector
/// columns. Used for the Lanczos tridiagonal exponential.
pub(crate) fn jacobi_eigh<F: RealScalar>(mat: &Array2<F>) -> (Vec<F>, Array2<F>) {
    let m = mat.nrows();
    debug_assert_eq!(m, mat.ncols());
    let mut a = mat.clone();
    let mut v = Array2::from_elem((m, m), F::zero());
    for k in 0..m {
        v[[k, k]] = F::one();
    }
    if m > 1 {
        let frob = a.iter().map(|x| *x * *x).sum::<F>().sqrt();
        let stop = frob * F::epsilon() * F::of(m as f64);
        for _sweep in 0..60 {
            let mut off = F::zero();
            for p in 0..m {
                for q in (p + 1)..m {
                    off = off + a[[p, q]] * a[[p, q]];
                }
            }
            if off.sqrt() <= stop {
                break;
            }
            for p in 0..m - 1 {
                for q in (p + 1)..m {
                    let apq = a[[p, q]];
                    if apq.abs() <= stop * F::of(1e-3) {
                        continue;
                    }
                    let theta = (a[[q, q]] - a[[p, p]]) / (F::of(2.0) * apq);
                    let t = {
                        let sign = if theta >= F::zero() { F::one() } else { -F::one() };
                        sign / (theta.abs() + (theta * theta + F::one()).sqrt())
                    };
                    let c = F::one() / (t * t + F::one()).sqrt();
                    let s = t * c;
                    for k in 0..m {
                        let akp = a[[k, p]];
                        let akq = a[[k, q]];
                        a[[k, p]] = c * akp - s * akq;
                        a[[k, q]] = s * akp + c * akq;
                    }
                    for k in 0..m {
                        let apk = a[[p, k]];
                        let aqk = a[[q, k]];
                        a[[p, k]] = c * apk - s * aqk;
                        a[[q, k]] = s * apk + c * aqk;
                    }
                    for k in 0..m {
                        let vkp = v[[k, p]];
                        let vkq = v[[k, q]];
                        v[[k, p]] = c * vkp - s * vkq;
                        v[[k, q]] = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&x, &y| {
        a[[x, x]]
            .partial_cmp(&a[[y, y]])
            .expect("finite eigenvalues")
    });
    let evals: Vec<F> = order.iter().map(|&k| a[[k, k]]).collect();
    let mut evecs = Array2::from_elem((m, m), F::zero());
    for (new_col, &old_col) in order.iter().enumerate() {
        for k in 0..m {
            evecs[[k, new_col]] = v[[k, old_col]];
        }
    }
    (evals, evecs)
}
