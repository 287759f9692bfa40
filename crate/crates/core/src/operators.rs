//! Single-site Pauli operators and their embedding into the n-qubit
//! Hilbert space.
//!
//! Basis convention: basis index `b` runs over `0..2^n`; bit `k` of `b`
//! (bit 1 = most significant) is the local state of qubit `k`, with bit
//! value 0 the *uncharged* local state. In that ordering the local
//! operators are
//!
//! ```text
//! Z = [[-1, 0], [0, +1]]    X = [[0, 1], [1, 0]]    Y = [[0, i], [-i, 0]]
//! ```
//!
//! so the all-uncharged state `|0...0>` is the ground state of the
//! battery Hamiltonian with energy `-n*hbar*omega0`. This is the textbook
//! Pauli triple conjugated by the qubit flip, so the full algebra
//! (`X*Y = i*Z`, involutions, anticommutation) is preserved.

use ndarray::{Array1, Array2};
use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{cplx, czero, RealScalar};

/// The three Pauli axes.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PauliAxis {
    X,
    Y,
    Z,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 3] = [PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    /// Action on a single basis bit: returns `(new_bit, phase)` such that
    /// `sigma |bit> = phase * |new_bit>`.
    fn act<F: RealScalar>(self, bit: usize) -> (usize, Complex<F>) {
        let one = F::one();
        match self {
            PauliAxis::X => (1 - bit, cplx(one, F::zero())),
            PauliAxis::Y => {
                if bit == 0 {
                    (1, cplx(F::zero(), -one))
                } else {
                    (0, cplx(F::zero(), one))
                }
            }
            PauliAxis::Z => {
                let sign = if bit == 0 { -one } else { one };
                (bit, cplx(sign, F::zero()))
            }
        }
    }
}

/// Dense complex matrix over the n-qubit Hilbert space (dimension `2^n`).
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorMatrix<F: RealScalar> {
    entries: Array2<Complex<F>>,
}

impl<F: RealScalar> OperatorMatrix<F> {
    /// Wrap a dense matrix; the dimension must be a square power of two.
    pub fn from_entries(entries: Array2<Complex<F>>) -> Result<Self> {
        let (r, c) = entries.dim();
        if r != c {
            return Err(Error::domain(format!("operator matrix must be square, got {r}x{c}")));
        }
        if r == 0 || !r.is_power_of_two() {
            return Err(Error::domain(format!(
                "operator dimension must be a power of two, got {r}"
            )));
        }
        Ok(OperatorMatrix { entries })
    }

    /// Zero operator of the given dimension (must be a power of two).
    pub fn zeros(dim: usize) -> Self {
        assert!(dim > 0 && dim.is_power_of_two(), "dimension must be a power of two");
        OperatorMatrix {
            entries: Array2::from_elem((dim, dim), czero()),
        }
    }

    /// Identity operator.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for k in 0..dim {
            m.entries[[k, k]] = cplx(F::one(), F::zero());
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Number of qubits (`log2` of the dimension).
    pub fn qubits(&self) -> usize {
        self.dim().trailing_zeros() as usize
    }

    pub fn entries(&self) -> &Array2<Complex<F>> {
        &self.entries
    }

    /// Largest absolute deviation from Hermiticity, `max |a_ij - conj(a_ji)|`.
    pub fn hermiticity_error(&self) -> F {
        let dim = self.dim();
        let mut worst = F::zero();
        for i in 0..dim {
            for j in i..dim {
                let d = self.entries[[i, j]] - self.entries[[j, i]].conj();
                worst = worst.max(d.norm());
            }
        }
        worst
    }

    /// Largest entry magnitude (elementwise infinity norm).
    pub fn max_abs(&self) -> F {
        self.entries
            .iter()
            .fold(F::zero(), |acc, z| acc.max(z.norm()))
    }

    /// Matrix-vector product `M x`.
    pub fn matvec(&self, x: &Array1<Complex<F>>) -> Result<Array1<Complex<F>>> {
        if x.len() != self.dim() {
            return Err(Error::domain(format!(
                "dimension mismatch: operator is {}, vector is {}",
                self.dim(),
                x.len()
            )));
        }
        let mut out = Array1::from_elem(self.dim(), czero());
        for (row, y) in self.entries.outer_iter().zip(out.iter_mut()) {
            let mut acc = czero();
            for (m, v) in row.iter().zip(x.iter()) {
                acc += *m * *v;
            }
            *y = acc;
        }
        Ok(out)
    }

    /// Real part of `<x| M |x>`.
    pub fn expectation(&self, x: &Array1<Complex<F>>) -> Result<F> {
        let mx = self.matvec(x)?;
        let mut acc = czero();
        for (a, b) in x.iter().zip(mx.iter()) {
            acc += a.conj() * *b;
        }
        Ok(acc.re)
    }

    /// In-place `self += factor * other`.
    pub fn add_scaled(&mut self, other: &Self, factor: Complex<F>) {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        for (a, b) in self.entries.iter_mut().zip(other.entries.iter()) {
            *a += factor * *b;
        }
    }

    /// Accumulate `coeff * prod_k sigma(axis_k) at site_k` into this matrix.
    ///
    /// Every factor acts on a distinct site (1-based, site 1 = leftmost
    /// tensor factor). A Pauli product has exactly one nonzero per column,
    /// so this is O(dim) per term and needs no dense products.
    pub(crate) fn accumulate_pauli_product(
        &mut self,
        coeff: Complex<F>,
        factors: &[(usize, PauliAxis)],
    ) {
        let n = self.qubits();
        debug_assert!(factors.iter().all(|&(s, _)| s >= 1 && s <= n));
        let dim = self.dim();
        for col in 0..dim {
            let mut row = col;
            let mut phase = coeff;
            for &(site, axis) in factors {
                let shift = n - site;
                let bit = (row >> shift) & 1;
                let (new_bit, p) = axis.act::<F>(bit);
                row = (row & !(1 << shift)) | (new_bit << shift);
                phase = phase * p;
            }
            self.entries[[row, col]] += phase;
        }
    }
}

/// The 2x2 Pauli matrix for `axis` in the (uncharged, charged) local basis.
pub fn local_pauli<F: RealScalar>(axis: PauliAxis) -> OperatorMatrix<F> {
    let mut m = OperatorMatrix::zeros(2);
    m.accumulate_pauli_product(cplx(F::one(), F::zero()), &[(1, axis)]);
    m
}

/// Pauli operator on one site of an n-qubit register:
/// `I (x) ... (x) sigma(axis) (x) ... (x) I` with the factor at `site`.
pub fn embed<F: RealScalar>(axis: PauliAxis, site: usize, n: usize) -> Result<OperatorMatrix<F>> {
    if n < 1 {
        return Err(Error::domain("qubit count must be at least 1"));
    }
    if site < 1 || site > n {
        return Err(Error::domain(format!(
            "site {site} out of range for {n} qubits (sites are 1..={n})"
        )));
    }
    let mut m = OperatorMatrix::zeros(1 << n);
    m.accumulate_pauli_product(cplx(F::one(), F::zero()), &[(site, axis)]);
    Ok(m)
}

/// Two-site Pauli product `sigma(axis_a)_i * sigma(axis_b)_j`, `i != j`.
pub fn two_site_term<F: RealScalar>(
    axis_a: PauliAxis,
    axis_b: PauliAxis,
    i: usize,
    j: usize,
    n: usize,
) -> Result<OperatorMatrix<F>> {
    if n < 1 {
        return Err(Error::domain("qubit count must be at least 1"));
    }
    for site in [i, j] {
        if site < 1 || site > n {
            return Err(Error::domain(format!(
                "site {site} out of range for {n} qubits (sites are 1..={n})"
            )));
        }
    }
    if i == j {
        return Err(Error::domain(format!(
            "two-site term requires distinct sites, got i = j = {i}"
        )));
    }
    let mut m = OperatorMatrix::zeros(1 << n);
    m.accumulate_pauli_product(cplx(F::one(), F::zero()), &[(i, axis_a), (j, axis_b)]);
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::linalg::kron;
    use num_complex::Complex64 as C64;

    type Op = OperatorMatrix<f64>;

    fn matmul(a: &Op, b: &Op) -> Op {
        OperatorMatrix::from_entries(a.entries().dot(b.entries())).unwrap()
    }

    fn max_abs_diff(a: &Op, b: &Op) -> f64 {
        a.entries()
            .iter()
            .zip(b.entries().iter())
            .fold(0.0, |acc, (x, y)| acc.max((x - y).norm()))
    }

    #[test]
    fn local_z_uncharged_eigenvalue_is_minus_one() {
        let z: Op = local_pauli(PauliAxis::Z);
        let e0 = ndarray::array![C64::new(1.0, 0.0), C64::new(0.0, 0.0)];
        let ze0 = z.matvec(&e0).unwrap();
        assert_eq!(ze0[0], C64::new(-1.0, 0.0));
        assert_eq!(ze0[1], C64::new(0.0, 0.0));
    }

    #[test]
    fn pauli_algebra_xy_equals_i_z() {
        let x: Op = local_pauli(PauliAxis::X);
        let y: Op = local_pauli(PauliAxis::Y);
        let z: Op = local_pauli(PauliAxis::Z);
        let xy = matmul(&x, &y);
        let mut iz = Op::zeros(2);
        iz.add_scaled(&z, C64::new(0.0, 1.0));
        assert!(max_abs_diff(&xy, &iz) < 1e-15);
    }

    #[test]
    fn pauli_squares_to_identity() {
        for axis in PauliAxis::ALL {
            let p: Op = local_pauli(axis);
            let sq = matmul(&p, &p);
            assert!(max_abs_diff(&sq, &Op::identity(2)) < 1e-15, "{axis:?}^2 != I");
        }
    }

    #[test]
    fn embed_single_qubit_is_local_pauli() {
        for axis in PauliAxis::ALL {
            let e: Op = embed(axis, 1, 1).unwrap();
            assert!(max_abs_diff(&e, &local_pauli(axis)) < 1e-15);
        }
    }

    #[test]
    fn embed_z_on_second_of_two_is_i_kron_z() {
        let e: Op = embed(PauliAxis::Z, 2, 2).unwrap();
        for (k, want) in [-1.0, 1.0, -1.0, 1.0].iter().enumerate() {
            assert_eq!(e.entries()[[k, k]], C64::new(*want, 0.0));
        }
        let z: Op = local_pauli(PauliAxis::Z);
        let oracle = kron(&Op::identity(2).entries().view(), &z.entries().view());
        assert!(max_abs_diff(&e, &Op::from_entries(oracle).unwrap()) < 1e-15);
    }

    #[test]
    fn embedded_paulis_are_traceless() {
        for n in 1..=4 {
            for site in 1..=n {
                for axis in PauliAxis::ALL {
                    let e: Op = embed(axis, site, n).unwrap();
                    let tr: C64 = (0..e.dim()).map(|k| e.entries()[[k, k]]).sum();
                    assert!(tr.norm() < 1e-15);
                }
            }
        }
    }

    #[test]
    fn embedded_paulis_are_hermitian_involutions() {
        // Hermitian + O^2 = I + trace 0 pins the spectrum to equally many +1/-1.
        for n in 1..=4 {
            for site in 1..=n {
                for axis in PauliAxis::ALL {
                    let e: Op = embed(axis, site, n).unwrap();
                    assert!(e.hermiticity_error() < 1e-12);
                    let sq = matmul(&e, &e);
                    assert!(max_abs_diff(&sq, &Op::identity(e.dim())) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn disjoint_site_operators_commute() {
        let n = 3;
        for a in PauliAxis::ALL {
            for b in PauliAxis::ALL {
                let ea: Op = embed(a, 1, n).unwrap();
                let eb: Op = embed(b, 3, n).unwrap();
                let ab = matmul(&ea, &eb);
                let ba = matmul(&eb, &ea);
                assert!(max_abs_diff(&ab, &ba) < 1e-12);
            }
        }
    }

    #[test]
    fn embed_rejects_out_of_range_site() {
        assert!(embed::<f64>(PauliAxis::X, 0, 3).is_err());
        assert!(embed::<f64>(PauliAxis::X, 4, 3).is_err());
    }

    #[test]
    fn two_site_xx_is_kron_of_locals() {
        let t: Op = two_site_term(PauliAxis::X, PauliAxis::X, 1, 2, 2).unwrap();
        let x: Op = local_pauli(PauliAxis::X);
        let oracle = kron(&x.entries().view(), &x.entries().view());
        assert!(max_abs_diff(&t, &Op::from_entries(oracle).unwrap()) < 1e-15);
    }

    #[test]
    fn two_site_term_matches_embedded_product() {
        let n = 3;
        for a in PauliAxis::ALL {
            for b in PauliAxis::ALL {
                for (i, j) in [(1, 2), (2, 3), (1, 3), (3, 1)] {
                    let t: Op = two_site_term(a, b, i, j, n).unwrap();
                    let oracle = matmul(&embed(a, i, n).unwrap(), &embed(b, j, n).unwrap());
                    assert!(max_abs_diff(&t, &oracle) < 1e-14, "{a:?}{b:?} at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn two_site_term_argument_order_commutes_on_disjoint_sites() {
        let lhs: Op = two_site_term(PauliAxis::X, PauliAxis::Y, 1, 2, 3).unwrap();
        let rhs: Op = two_site_term(PauliAxis::Y, PauliAxis::X, 2, 1, 3).unwrap();
        assert!(max_abs_diff(&lhs, &rhs) < 1e-15);
    }

    #[test]
    fn dmi_combination_is_hermitian() {
        let mut m: Op = two_site_term(PauliAxis::X, PauliAxis::Y, 1, 2, 3).unwrap();
        let yx: Op = two_site_term(PauliAxis::Y, PauliAxis::X, 1, 2, 3).unwrap();
        m.add_scaled(&yx, C64::new(-1.0, 0.0));
        assert!(m.hermiticity_error() < 1e-15);
    }

    #[test]
    fn two_site_term_rejects_equal_sites() {
        assert!(two_site_term::<f64>(PauliAxis::X, PauliAxis::X, 2, 2, 3).is_err());
    }

    #[test]
    fn matvec_rejects_dimension_mismatch() {
        let x: Op = embed(PauliAxis::X, 1, 2).unwrap();
        let bad = Array1::from_elem(3, C64::new(0.0, 0.0));
        assert!(x.matvec(&bad).is_err());
    }

    #[test]
    fn generic_scalar_f32_builds_the_same_operators() {
        let z32: OperatorMatrix<f32> = local_pauli(PauliAxis::Z);
        assert_eq!(z32.entries()[[0, 0]], Complex::new(-1.0f32, 0.0));
        assert_eq!(z32.entries()[[1, 1]], Complex::new(1.0f32, 0.0));
    }
}
