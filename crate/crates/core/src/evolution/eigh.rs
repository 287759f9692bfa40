//! Backend seam for the dense Hermitian eigendecomposition.
//!
//! The spectral propagator needs `H = V diag(e) V^H` once per
//! (topology, params) pair. That factorization is delegated to LAPACK
//! through `ndarray-linalg`; everything else in the crate stays
//! backend-free, so the Krylov path remains an independent route.

use ndarray::{Array1, Array2};
use ndarray_linalg::{Eigh, UPLO};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::RealScalar;

/// Scalars for which a dense Hermitian eigendecomposition is available.
pub trait EighScalar: RealScalar {
    /// Eigendecomposition of a Hermitian matrix: eigenvalues in
    /// ascending order, eigenvectors as matching columns.
    fn eigh_hermitian(
        matrix: &Array2<Complex<Self>>,
    ) -> Result<(Array1<Self>, Array2<Complex<Self>>)>;
}

impl EighScalar for f64 {
    fn eigh_hermitian(
        matrix: &Array2<Complex<f64>>,
    ) -> Result<(Array1<f64>, Array2<Complex<f64>>)> {
        let (vals, mut vecs) = matrix
            .eigh(UPLO::Lower)
            .map_err(|e| Error::convergence(format!("hermitian eigendecomposition failed: {e}")))?;
        // On row-major input the LAPACK call effectively factorizes the
        // transpose (= conjugate, for Hermitian input), so the true
        // eigenvectors are the conjugated columns of what comes back.
        vecs.mapv_inplace(|z| z.conj());
        Ok((vals, vecs))
    }
}

impl EighScalar for f32 {
    fn eigh_hermitian(
        matrix: &Array2<Complex<f32>>,
    ) -> Result<(Array1<f32>, Array2<Complex<f32>>)> {
        let (vals, mut vecs) = matrix
            .eigh(UPLO::Lower)
            .map_err(|e| Error::convergence(format!("hermitian eigendecomposition failed: {e}")))?;
        vecs.mapv_inplace(|z| z.conj());
        Ok((vals, vecs))
    }
}
