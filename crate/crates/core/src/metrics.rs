//! Battery performance metrics: ergotropy, charging power, and
//! cycle-quality statistics over a sampled trajectory.
//!
//! For a pure state evolving out of the battery ground state the
//! ergotropy is the energy above the ground level,
//! `zeta = <psi|H_B|psi> - E_ground`. The general (density-matrix) form
//! subtracts the passive-state energy instead: eigenvalues of rho sorted
//! descending paired against battery levels sorted ascending. Charging
//! power is `P(t) = zeta(t) / t` with `P(0) = 0`.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::evolution::{EighScalar, StateVector};
use crate::operators::OperatorMatrix;
use crate::scalar::{czero, RealScalar};

/// Fraction of the series range a local extremum must clear to count as
/// a cycle peak or trough (suppresses float-noise wiggles on flat curves).
const PROMINENCE_FLOOR: f64 = 0.01;

/// Sampled trajectory of `(t, <H_B>, ergotropy, power)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargeTimeSeries<F: RealScalar> {
    times: Vec<F>,
    energy: Vec<F>,
    ergotropy: Vec<F>,
    power: Vec<F>,
}

impl<F: RealScalar> ChargeTimeSeries<F> {
    /// Build a series from sampled energy and ergotropy columns; the
    /// power column is derived, so `P(t) * t = zeta(t)` holds exactly.
    pub fn new(times: Vec<F>, energy: Vec<F>, ergotropy: Vec<F>) -> Result<Self> {
        if times.len() != energy.len() || times.len() != ergotropy.len() {
            return Err(Error::domain(format!(
                "column length mismatch: {} times, {} energy, {} ergotropy",
                times.len(),
                energy.len(),
                ergotropy.len()
            )));
        }
        let power = charging_power(&times, &ergotropy)?;
        Ok(ChargeTimeSeries {
            times,
            energy,
            ergotropy,
            power,
        })
    }

    /// Reassemble a series from stored columns (CSV parse-back); lengths
    /// must agree but the power column is taken as-is.
    pub fn from_columns(
        times: Vec<F>,
        energy: Vec<F>,
        ergotropy: Vec<F>,
        power: Vec<F>,
    ) -> Result<Self> {
        if times.len() != energy.len()
            || times.len() != ergotropy.len()
            || times.len() != power.len()
        {
            return Err(Error::domain("column length mismatch".to_string()));
        }
        Ok(ChargeTimeSeries {
            times,
            energy,
            ergotropy,
            power,
        })
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn times(&self) -> &[F] {
        &self.times
    }

    pub fn energy(&self) -> &[F] {
        &self.energy
    }

    pub fn ergotropy(&self) -> &[F] {
        &self.ergotropy
    }

    pub fn power(&self) -> &[F] {
        &self.power
    }

    /// Maximum ergotropy and the (first) time it is attained.
    pub fn peak_ergotropy(&self) -> (F, F) {
        let mut best = (F::neg_infinity(), F::zero());
        for (&t, &z) in self.times.iter().zip(self.ergotropy.iter()) {
            if z > best.0 {
                best = (z, t);
            }
        }
        (best.0, best.1)
    }

    /// Maximum power and the (first) time it is attained.
    pub fn peak_power(&self) -> (F, F) {
        let mut best = (F::neg_infinity(), F::zero());
        for (&t, &p) in self.times.iter().zip(self.power.iter()) {
            if p > best.0 {
                best = (p, t);
            }
        }
        (best.0, best.1)
    }
}

/// Power column `P(t) = zeta(t)/t`, with the `t = 0` limit pinned to 0
/// (the ergotropy vanishes at least linearly there).
pub fn charging_power<F: RealScalar>(times: &[F], ergotropy: &[F]) -> Result<Vec<F>> {
    if times.len() != ergotropy.len() {
        return Err(Error::domain("column length mismatch".to_string()));
    }
    if times.is_empty() {
        return Ok(Vec::new());
    }
    if times[0] != F::zero() {
        return Err(Error::domain(format!(
            "power column needs a grid starting at t = 0, got {}",
            times[0]
        )));
    }
    let mut power = Vec::with_capacity(times.len());
    power.push(F::zero());
    for k in 1..times.len() {
        power.push(ergotropy[k] / times[k]);
    }
    Ok(power)
}

/// The diagonal of a battery Hamiltonian (which is diagonal in the
/// charge basis by construction); rejects non-diagonal input.
pub fn battery_levels<F: RealScalar>(h_b: &OperatorMatrix<F>) -> Result<Vec<F>> {
    let dim = h_b.dim();
    let mut levels = Vec::with_capacity(dim);
    let mut off_diag = F::zero();
    for r in 0..dim {
        for c in 0..dim {
            let z = h_b.entries()[[r, c]];
            if r == c {
                levels.push(z.re);
            } else {
                off_diag = off_diag.max(z.norm());
            }
        }
    }
    if off_diag > F::of(1e-12) {
        return Err(Error::domain(
            "battery Hamiltonian must be diagonal in the charge basis".to_string(),
        ));
    }
    Ok(levels)
}

/// Ground energy of a (diagonal) battery Hamiltonian: its lowest level.
pub fn battery_ground_energy<F: RealScalar>(h_b: &OperatorMatrix<F>) -> Result<F> {
    let levels = battery_levels(h_b)?;
    Ok(levels.into_iter().fold(F::infinity(), |a, b| a.min(b)))
}

/// Pure-state ergotropy `<psi|H_B|psi> - E_ground`.
pub fn ergotropy_pure<F: RealScalar>(
    psi: &StateVector<F>,
    h_b: &OperatorMatrix<F>,
) -> Result<F> {
    if psi.dim() != h_b.dim() {
        return Err(Error::domain(format!(
            "dimension mismatch: state is {}, battery Hamiltonian is {}",
            psi.dim(),
            h_b.dim()
        )));
    }
    let ground = battery_ground_energy(h_b)?;
    Ok(psi.expectation(h_b)? - ground)
}

/// General ergotropy `Tr(rho H_B) - E_passive`, with the passive energy
/// from the standard construction: rho-eigenvalues descending paired
/// with battery levels ascending.
pub fn ergotropy_general<F: EighScalar>(
    rho: &OperatorMatrix<F>,
    h_b: &OperatorMatrix<F>,
) -> Result<F> {
    let dim = rho.dim();
    if dim != h_b.dim() {
        return Err(Error::domain(format!(
            "dimension mismatch: density matrix is {dim}, battery Hamiltonian is {}",
            h_b.dim()
        )));
    }
    let tol = F::of(1e-8);
    if rho.hermiticity_error() > tol {
        return Err(Error::domain("density matrix must be Hermitian".to_string()));
    }
    let mut trace = czero::<F>();
    for k in 0..dim {
        trace += rho.entries()[[k, k]];
    }
    if (trace - Complex::new(F::one(), F::zero())).norm() > tol {
        return Err(Error::domain(format!(
            "density matrix must have unit trace, got {trace}"
        )));
    }
    let (occupations, _) = F::eigh_hermitian(rho.entries())?;
    if occupations.iter().any(|&r| r < -tol) {
        return Err(Error::domain(
            "density matrix must be positive semidefinite".to_string(),
        ));
    }
    let (levels, _) = F::eigh_hermitian(h_b.entries())?;
    // occupations ascending; pair the largest occupation with the lowest level.
    let mut passive = F::zero();
    for (k, &eps) in levels.iter().enumerate() {
        passive = passive + occupations[dim - 1 - k] * eps;
    }
    let mut stored = czero::<F>();
    for r in 0..dim {
        for c in 0..dim {
            stored += rho.entries()[[r, c]] * h_b.entries()[[c, r]];
        }
    }
    Ok(stored.re - passive)
}

/// A local extremum accepted by the prominence filter.
#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Extremum<F: RealScalar> {
    pub index: usize,
    pub time: F,
    pub value: F,
    pub prominence: F,
}

fn prominence_at<F: RealScalar>(values: &[F], idx: usize) -> F {
    let peak = values[idx];
    let mut left_min = peak;
    let mut j = idx;
    while j > 0 {
        j -= 1;
        if values[j] > peak {
            break;
        }
        left_min = left_min.min(values[j]);
    }
    let mut right_min = peak;
    let mut j = idx;
    while j + 1 < values.len() {
        j += 1;
        if values[j] > peak {
            break;
        }
        right_min = right_min.min(values[j]);
    }
    // A boundary extremum has only one valley; the base is the higher
    // of the two valley minima otherwise.
    let base = if idx == 0 {
        right_min
    } else if idx + 1 == values.len() {
        left_min
    } else {
        left_min.max(right_min)
    };
    peak - base
}

/// Strict local maxima (boundary samples count, compared one-sided)
/// whose prominence clears 1% of the series range.
pub fn find_peaks<F: RealScalar>(times: &[F], values: &[F]) -> Vec<Extremum<F>> {
    let len = values.len();
    if len < 2 {
        return Vec::new();
    }
    let lo = values.iter().fold(F::infinity(), |a, &b| a.min(b));
    let hi = values.iter().fold(F::neg_infinity(), |a, &b| a.max(b));
    let range = hi - lo;
    if range <= F::zero() {
        return Vec::new();
    }
    let floor = range * F::of(PROMINENCE_FLOOR);
    let mut out = Vec::new();
    for idx in 0..len {
        let left_ok = idx == 0 || values[idx] > values[idx - 1];
        let right_ok = idx + 1 == len || values[idx] > values[idx + 1];
        if !(left_ok && right_ok) {
            continue;
        }
        let prom = prominence_at(values, idx);
        if prom >= floor {
            out.push(Extremum {
                index: idx,
                time: times[idx],
                value: values[idx],
                prominence: prom,
            });
        }
    }
    out
}

/// Strict local minima under the same prominence rule.
pub fn find_troughs<F: RealScalar>(times: &[F], values: &[F]) -> Vec<Extremum<F>> {
    let negated: Vec<F> = values.iter().map(|&v| -v).collect();
    find_peaks(times, &negated)
        .into_iter()
        .map(|e| Extremum {
            index: e.index,
            time: e.time,
            value: values[e.index],
            prominence: e.prominence,
        })
        .collect()
}

/// Cycle-quality summary of one ergotropy trajectory.
#[derive(Clone, Debug, PartialEq)]
pub struct CycleReport<F: RealScalar> {
    /// Global maximum of the ergotropy.
    pub peak_value: F,
    /// Time of the (first) global maximum.
    pub peak_time: F,
    /// Ergotropy at the first accepted local minimum after the first
    /// accepted peak; absent when no such minimum exists.
    pub residual: Option<F>,
    /// Time between the first two accepted peaks.
    pub period_estimate: Option<F>,
    /// Second post-peak minimum minus the first (positive = upward drift).
    pub drift: Option<F>,
}

/// Scan an ergotropy trajectory for peaks, residuals, and drift.
pub fn cycle_report<F: RealScalar>(series: &ChargeTimeSeries<F>) -> Result<CycleReport<F>> {
    if series.len() < 3 {
        return Err(Error::domain(format!(
            "cycle report needs at least 3 samples, got {}",
            series.len()
        )));
    }
    let (peak_value, peak_time) = series.peak_ergotropy();
    let peaks = find_peaks(series.times(), series.ergotropy());
    let troughs = find_troughs(series.times(), series.ergotropy());
    let mut report = CycleReport {
        peak_value,
        peak_time,
        residual: None,
        period_estimate: None,
        drift: None,
    };
    if let Some(first_peak) = peaks.first() {
        let post: Vec<&Extremum<F>> = troughs
            .iter()
            .filter(|t| t.index > first_peak.index)
            .collect();
        report.residual = post.first().map(|t| t.value);
        if post.len() >= 2 {
            report.drift = Some(post[1].value - post[0].value);
        }
        if peaks.len() >= 2 {
            report.period_estimate = Some(peaks[1].time - peaks[0].time);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::evolution::{sample_trajectory, uncharged_state, EvolutionBackend, KrylovConfig};
    use crate::hamiltonian::{battery_hamiltonian, driver_hamiltonian, ModelParams};
    use crate::topology::closed_chain;
    use ndarray::{Array1, Array2};
    use num_complex::Complex64 as C64;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    type Params = ModelParams<f64>;

    fn battery(n: usize) -> OperatorMatrix<f64> {
        battery_hamiltonian(n, &Params::ising(1.0, 0.0, 0.0))
    }

    fn random_state(n: usize, rng: &mut ChaCha8Rng) -> StateVector<f64> {
        let dim = 1usize << n;
        let mut v = Array1::from_elem(dim, C64::new(0.0, 0.0));
        for x in v.iter_mut() {
            *x = C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0));
        }
        let norm: f64 = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= norm;
        }
        StateVector::from_amplitudes(v).unwrap()
    }

    fn pure_density(psi: &StateVector<f64>) -> OperatorMatrix<f64> {
        let dim = psi.dim();
        let mut rho = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
        for r in 0..dim {
            for c in 0..dim {
                rho[[r, c]] = psi.basis_amplitude(r) * psi.basis_amplitude(c).conj();
            }
        }
        OperatorMatrix::from_entries(rho).unwrap()
    }

    #[test]
    fn uncharged_state_has_zero_ergotropy() {
        let psi = uncharged_state::<f64>(8);
        assert_eq!(ergotropy_pure(&psi, &battery(8)).unwrap(), 0.0);
    }

    #[test]
    fn fully_charged_state_stores_twice_n() {
        let mut v = Array1::from_elem(256, C64::new(0.0, 0.0));
        v[255] = C64::new(1.0, 0.0);
        let psi = StateVector::from_amplitudes(v).unwrap();
        assert_eq!(ergotropy_pure(&psi, &battery(8)).unwrap(), 16.0);
    }

    #[test]
    fn uniform_superposition_stores_n() {
        let dim = 256;
        let amp = C64::new((1.0 / (dim as f64)).sqrt(), 0.0);
        let v = Array1::from_elem(dim, amp);
        let psi = StateVector::from_amplitudes(v).unwrap();
        let z = ergotropy_pure(&psi, &battery(8)).unwrap();
        assert!((z - 8.0).abs() < 1e-12);
    }

    #[test]
    fn ergotropy_pure_rejects_mismatched_dims() {
        let psi = uncharged_state::<f64>(3);
        assert!(ergotropy_pure(&psi, &battery(4)).is_err());
    }

    #[test]
    fn maximally_mixed_state_is_passive() {
        let dim = 16;
        let mut rho = Array2::from_elem((dim, dim), C64::new(0.0, 0.0));
        for k in 0..dim {
            rho[[k, k]] = C64::new(1.0 / dim as f64, 0.0);
        }
        let rho = OperatorMatrix::from_entries(rho).unwrap();
        let z = ergotropy_general(&rho, &battery(4)).unwrap();
        assert!(z.abs() < 1e-10);
    }

    #[test]
    fn fully_charged_projector_matches_pure_value() {
        let mut v = Array1::from_elem(256, C64::new(0.0, 0.0));
        v[255] = C64::new(1.0, 0.0);
        let psi = StateVector::from_amplitudes(v).unwrap();
        let rho = pure_density(&psi);
        let z = ergotropy_general(&rho, &battery(8)).unwrap();
        assert!((z - 16.0).abs() < 1e-8);
    }

    #[test]
    fn general_matches_pure_on_random_states() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let hb = battery(4);
        for _ in 0..25 {
            let psi = random_state(4, &mut rng);
            let zp = ergotropy_pure(&psi, &hb).unwrap();
            let zg = ergotropy_general(&pure_density(&psi), &hb).unwrap();
            assert!((zp - zg).abs() <= 1e-8, "pure {zp} vs general {zg}");
        }
    }

    #[test]
    fn ergotropy_general_rejects_invalid_density_matrices() {
        let hb = battery(2);
        // Wrong trace.
        let mut rho = Array2::from_elem((4, 4), C64::new(0.0, 0.0));
        rho[[0, 0]] = C64::new(0.7, 0.0);
        let rho = OperatorMatrix::from_entries(rho).unwrap();
        assert!(ergotropy_general(&rho, &hb).is_err());
        // Not Hermitian.
        let mut rho = Array2::from_elem((4, 4), C64::new(0.0, 0.0));
        for k in 0..4 {
            rho[[k, k]] = C64::new(0.25, 0.0);
        }
        rho[[0, 1]] = C64::new(0.5, 0.0);
        let rho = OperatorMatrix::from_entries(rho).unwrap();
        assert!(ergotropy_general(&rho, &hb).is_err());
        // Negative eigenvalue (trace still 1, Hermitian).
        let mut rho = Array2::from_elem((4, 4), C64::new(0.0, 0.0));
        rho[[0, 0]] = C64::new(1.5, 0.0);
        rho[[1, 1]] = C64::new(-0.5, 0.0);
        let rho = OperatorMatrix::from_entries(rho).unwrap();
        assert!(ergotropy_general(&rho, &hb).is_err());
    }

    #[test]
    fn power_of_zero_series_is_zero() {
        let times: Vec<f64> = (0..10).map(|k| k as f64 * 0.1).collect();
        let zeros = vec![0.0; 10];
        let p = charging_power(&times, &zeros).unwrap();
        assert!(p.iter().all(|&x| x == 0.0));
    }

    #[test]
    fn power_matches_full_charge_landmark() {
        let times = vec![0.0, PI / 4.0, PI / 2.0];
        let erg = vec![0.0, 8.0, 16.0];
        let p = charging_power(&times, &erg).unwrap();
        assert_eq!(p[0], 0.0);
        assert!((p[2] - 32.0 / PI).abs() < 1e-12);
        assert!((p[2] - 10.185916357881302).abs() < 1e-12);
    }

    #[test]
    fn power_is_pointwise_linear_in_ergotropy() {
        let times: Vec<f64> = (0..20).map(|k| k as f64 * 0.3).collect();
        let erg: Vec<f64> = times.iter().map(|t| (t * 0.9).sin().abs() * 3.0).collect();
        let doubled: Vec<f64> = erg.iter().map(|z| 2.0 * z).collect();
        let p1 = charging_power(&times, &erg).unwrap();
        let p2 = charging_power(&times, &doubled).unwrap();
        for (a, b) in p1.iter().zip(p2.iter()) {
            assert_eq!(*b, 2.0 * *a);
        }
    }

    #[test]
    fn power_requires_grid_starting_at_zero() {
        assert!(charging_power(&[0.5, 1.0], &[0.0, 1.0]).is_err());
    }

    #[test]
    fn series_construction_bakes_power_identity() {
        let times: Vec<f64> = (0..50).map(|k| k as f64 * 0.2).collect();
        let erg: Vec<f64> = times.iter().map(|t| 8.0 * (1.0 - t.cos())).collect();
        let energy: Vec<f64> = erg.iter().map(|z| z - 8.0).collect();
        let s = ChargeTimeSeries::new(times, energy, erg).unwrap();
        for k in 1..s.len() {
            let recon = s.power()[k] * s.times()[k];
            let err = (recon - s.ergotropy()[k]).abs();
            assert!(err <= 1e-15 * s.ergotropy()[k].abs().max(1.0), "sample {k}");
        }
        assert_eq!(s.power()[0], 0.0);
    }

    #[test]
    fn cycle_report_on_analytic_sinusoid() {
        // zeta(t) = 8(1 - cos t) on [0, 3pi]: peak 16 at pi, residual 0
        // at 2pi, period 2pi.
        let samples = 301;
        let times: Vec<f64> = (0..samples)
            .map(|k| 3.0 * PI * (k as f64) / (samples as f64 - 1.0))
            .collect();
        let erg: Vec<f64> = times.iter().map(|t| 8.0 * (1.0 - t.cos())).collect();
        let energy: Vec<f64> = erg.iter().map(|z| z - 8.0).collect();
        let s = ChargeTimeSeries::new(times, energy, erg).unwrap();
        let r = cycle_report(&s).unwrap();
        assert!((r.peak_value - 16.0).abs() < 1e-9);
        assert!((r.peak_time - PI).abs() < 0.05);
        let residual = r.residual.expect("sinusoid has a discharge minimum");
        assert!(residual.abs() < 1e-9);
        let period = r.period_estimate.expect("two charge peaks in the window");
        assert!((period - 2.0 * PI).abs() < 0.05);
    }

    #[test]
    fn cycle_report_on_monotone_series() {
        let times: Vec<f64> = (0..100).map(|k| k as f64 * 0.1).collect();
        let erg: Vec<f64> = times.iter().map(|t| t * 0.5).collect();
        let energy = vec![0.0; 100];
        let s = ChargeTimeSeries::new(times, energy, erg).unwrap();
        let r = cycle_report(&s).unwrap();
        assert!(r.residual.is_none());
        assert!(r.period_estimate.is_none());
        assert!(r.drift.is_none());
        assert!((r.peak_value - 9.9 * 0.5).abs() < 1e-12);
    }

    #[test]
    fn cycle_report_detects_upward_drift() {
        // Oscillation whose minima climb: zeta = 4(1 - cos t) + 0.3 t.
        let times: Vec<f64> = (0..400).map(|k| k as f64 * 0.05).collect();
        let erg: Vec<f64> = times.iter().map(|t| 4.0 * (1.0 - t.cos()) + 0.3 * t).collect();
        let energy = vec![0.0; times.len()];
        let s = ChargeTimeSeries::new(times, energy, erg).unwrap();
        let r = cycle_report(&s).unwrap();
        let drift = r.drift.expect("two minima in the window");
        assert!(drift > 0.0, "drift = {drift}");
    }

    #[test]
    fn cycle_report_requires_three_samples() {
        let s = ChargeTimeSeries::new(vec![0.0, 1.0], vec![0.0, 0.0], vec![0.0, 0.0]).unwrap();
        assert!(cycle_report(&s).is_err());
    }

    #[test]
    fn flat_series_yields_no_peaks() {
        let times: Vec<f64> = (0..10).map(|k| k as f64).collect();
        let flat = vec![1.0; 10];
        assert!(find_peaks(&times, &flat).is_empty());
        assert!(find_troughs(&times, &flat).is_empty());
    }

    #[test]
    fn prominence_floor_suppresses_noise_wiggles() {
        // A big peak plus a 0.1%-of-range wiggle: only the big one counts.
        let times: Vec<f64> = (0..9).map(|k| k as f64).collect();
        let values = vec![0.0, 5.0, 10.0, 5.0, 1.0, 1.005, 1.0, 0.5, 0.0];
        let peaks = find_peaks(&times, &values);
        assert_eq!(peaks.len(), 1);
        assert_eq!(peaks[0].index, 2);
    }

    #[test]
    fn d_sign_flip_leaves_ergotropy_invariant() {
        let topo = closed_chain(4).unwrap();
        let hb = battery(4);
        let psi0 = uncharged_state::<f64>(4);
        let times: Vec<f64> = (0..60).map(|k| k as f64 * 0.1).collect();
        let cfg = KrylovConfig::default();
        let mut curves = Vec::new();
        for d in [1.7, -1.7] {
            let p = Params::xxz(1.0, 2.0, d, 0.5);
            let h = driver_hamiltonian(&topo, &p);
            let traj =
                sample_trajectory(&h, &psi0, &times, EvolutionBackend::Spectral, &cfg).unwrap();
            let curve: Vec<f64> = traj
                .iter()
                .map(|psi| ergotropy_pure(psi, &hb).unwrap())
                .collect();
            curves.push(curve);
        }
        for (a, b) in curves[0].iter().zip(curves[1].iter()) {
            assert!((a - b).abs() <= 1e-8, "{a} vs {b}");
        }
    }

    #[test]
    fn ergotropy_bounds_hold_along_a_trajectory() {
        let topo = closed_chain(5).unwrap();
        let hb = battery(5);
        let psi0 = uncharged_state::<f64>(5);
        let times: Vec<f64> = (0..100).map(|k| k as f64 * 0.08).collect();
        let p = Params::xxz(1.0, 2.0, 1.7, 0.0);
        let h = driver_hamiltonian(&topo, &p);
        let cfg = KrylovConfig::default();
        let traj = sample_trajectory(&h, &psi0, &times, EvolutionBackend::Auto, &cfg).unwrap();
        for psi in &traj {
            let z = ergotropy_pure(psi, &hb).unwrap();
            assert!(z >= -1e-10);
            assert!(z <= 2.0 * 5.0 + 1e-9);
        }
    }
}
