use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

use super::loops::SpectralLoop;
use super::winding::winding;
use super::SpectrumError;

/// Default Fourier cutoff `M`.
pub const DEFAULT_CUTOFF: usize = 32;

/// Eigenvalues within `CLUSTER_TOL·(1 + |λ|)` of each other form one cluster.
pub const CLUSTER_TOL: f64 = 1e-8;

/// Galerkin truncation of `A = -J₀ d/dt - S(t)` to the Fourier modes
/// `|n| ≤ M` of `ℝ²`-valued loops.
///
/// A loop is written `f = Σ a_n e^{2πint}` with `a_n ∈ ℂ ≅ ℝ²`; the matrix
/// acts on the real vector `(Re a_{-M}, Im a_{-M}, …, Re a_M, Im a_M)`. In
/// these coordinates the `L²` inner product is the Euclidean one, so the
/// matrix is symmetric.
#[derive(Debug, Clone)]
pub struct OperatorDiscretization {
    mode_cutoff: usize,
    matrix: DMatrix<f64>,
}

impl OperatorDiscretization {
    pub fn mode_cutoff(&self) -> usize {
        self.mode_cutoff
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    /// Half-width of the band of eigenvalues the truncation resolves.
    pub fn resolved_radius(&self) -> f64 {
        PI * self.mode_cutoff as f64
    }

    /// Number of real unknowns per mode times modes, `2(2M+1)`.
    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn max_asymmetry(&self) -> f64 {
        (&self.matrix - self.matrix.transpose()).abs().max()
    }
}

/// Assembles the truncated operator for `cutoff` modes in each direction.
pub fn assemble(lp: &SpectralLoop, cutoff: usize) -> Result<OperatorDiscretization, SpectrumError> {
    let band = lp.bandwidth() as usize;
    if cutoff < band + 4 {
        return Err(SpectrumError::CutoffBelowBandwidth { cutoff, bandwidth: band });
    }
    let m = cutoff as i64;
    let size = 2 * (2 * cutoff + 1);
    let coeffs = lp.complex_coefficients();
    let alpha = |j: i64| coeffs.get(&j).map_or(Complex64::default(), |c| c.0);
    let beta = |j: i64| coeffs.get(&j).map_or(Complex64::default(), |c| c.1);
    let idx = |n: i64| (n + m) as usize;

    let mut matrix = DMatrix::zeros(size, size);
    for col_mode in -m..=m {
        for (part, unit) in [(0, Complex64::new(1.0, 0.0)), (1, Complex64::i())] {
            let col = 2 * idx(col_mode) + part;
            // (A a)_n = 2πn a_n - Σ α̂_{n-m} a_m - Σ β̂_{n+m} conj(a_m)
            for n in -m..=m {
                let mut out = -alpha(n - col_mode) * unit - beta(n + col_mode) * unit.conj();
                if n == col_mode {
                    out += 2.0 * PI * n as f64 * unit;
                }
                matrix[(2 * idx(n), col)] = out.re;
                matrix[(2 * idx(n) + 1, col)] = out.im;
            }
        }
    }
    let op = OperatorDiscretization {
        mode_cutoff: cutoff,
        matrix,
    };
    let norm = op.matrix.abs().max().max(1.0);
    let asym = op.max_asymmetry();
    if asym > 1e-10 * norm {
        return Err(SpectrumError::NotSymmetric(asym));
    }
    Ok(op)
}

/// An eigenvalue with one eigenfunction from its eigenspace.
#[derive(Debug, Clone)]
pub struct EigenPair {
    pub eigenvalue: f64,
    /// Size of the cluster of numerically equal eigenvalues this one belongs to.
    pub multiplicity: usize,
    /// Fourier coefficients `a_n`, `n = -M..=M`.
    pub coefficients: Vec<Complex64>,
    /// Samples `f(j/N)`, `N = 8(2M+1)`.
    pub samples: Vec<Complex64>,
    pub winding: i64,
    /// `‖A f - λ f‖ / ‖f‖` for the truncated operator.
    pub residual: f64,
}

impl EigenPair {
    pub fn mode_cutoff(&self) -> usize {
        (self.coefficients.len() - 1) / 2
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        let m = self.mode_cutoff() as i64;
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, &a)| a * Complex64::from_polar(1.0, 2.0 * PI * (i as i64 - m) as f64 * t))
            .sum()
    }

    /// Largest divisor `d` of `k` such that `f(t + 1/d) = f(t)` to within
    /// `1e-6·max|f|`.
    pub fn covering_multiplicity(&self, k: u32) -> u32 {
        let max = self.samples.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let n = self.samples.len();
        let periodic = |d: u32| {
            self.samples.iter().enumerate().all(|(j, &f)| {
                let t = j as f64 / n as f64 + 1.0 / f64::from(d);
                (self.eval(t) - f).norm() < 1e-6 * max
            })
        };
        (1..=k)
            .rev()
            .filter(|d| k % d == 0)
            .find(|&d| d == 1 || periodic(d))
            .unwrap_or(1)
    }
}

fn sample(coefficients: &[Complex64], n_samples: usize) -> Vec<Complex64> {
    let m = (coefficients.len() - 1) / 2;
    (0..n_samples)
        .map(|j| {
            let t = j as f64 / n_samples as f64;
            coefficients
                .iter()
                .enumerate()
                .map(|(i, &a)| a * Complex64::from_polar(1.0, 2.0 * PI * (i as f64 - m as f64) * t))
                .sum()
        })
        .collect()
}

/// All eigenpairs with eigenvalue in `[lo, hi]`, ascending.
pub fn eigen_window(op: &OperatorDiscretization, lo: f64, hi: f64) -> Result<Vec<EigenPair>, SpectrumError> {
    if !(lo < hi) {
        return Err(SpectrumError::EmptyWindow { lo, hi });
    }
    let radius = op.resolved_radius();
    if lo.abs() > radius || hi.abs() > radius {
        return Err(SpectrumError::WindowExceedsResolution { lo, hi, radius });
    }
    let eig = SymmetricEigen::new(op.matrix.clone());
    let mut order: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&i| (lo..=hi).contains(&eig.eigenvalues[i]))
        .collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));

    let m = op.mode_cutoff;
    let n_samples = 8 * (2 * m + 1);
    let mut pairs = Vec::with_capacity(order.len());
    for i in order {
        let lambda = eig.eigenvalues[i];
        let v = eig.eigenvectors.column(i);
        let coefficients: Vec<Complex64> = (0..2 * m + 1)
            .map(|j| Complex64::new(v[2 * j], v[2 * j + 1]))
            .collect();
        let residual = (&op.matrix * v - v * lambda).norm() / v.norm();
        let samples = sample(&coefficients, n_samples);
        let w = winding(&samples)?;
        pairs.push(EigenPair {
            eigenvalue: lambda,
            multiplicity: 1,
            coefficients,
            samples,
            winding: w,
            residual,
        });
    }
    // cluster numerically equal eigenvalues
    let mut start = 0;
    while start < pairs.len() {
        let mut end = start + 1;
        while end < pairs.len()
            && pairs[end].eigenvalue - pairs[end - 1].eigenvalue
                <= CLUSTER_TOL * (1.0 + pairs[end].eigenvalue.abs())
        {
            end += 1;
        }
        for p in &mut pairs[start..end] {
            p.multiplicity = end - start;
        }
        start = end;
    }
    Ok(pairs)
}

/// Checks that windings never decrease with the eigenvalue and that every
/// winding strictly inside the observed range occurs exactly twice.
pub fn check_winding_structure(pairs: &[EigenPair]) -> Result<(), SpectrumError> {
    if let Some(w) = pairs.windows(2).find(|w| w[1].winding < w[0].winding) {
        return Err(SpectrumError::WindingStructure(format!(
            "winding drops from {} to {} between eigenvalues {} and {}",
            w[0].winding, w[1].winding, w[0].eigenvalue, w[1].eigenvalue
        )));
    }
    let (Some(first), Some(last)) = (pairs.first(), pairs.last()) else {
        return Ok(());
    };
    for target in first.winding..=last.winding {
        let count = pairs.iter().filter(|p| p.winding == target).count();
        let edge = target == first.winding || target == last.winding;
        if (edge && count > 2) || (!edge && count != 2) {
            return Err(SpectrumError::WindingStructure(format!(
                "winding {target} occurs {count} times"
            )));
        }
    }
    Ok(())
}

/// Extremal windings and Conley-Zehnder index read off a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaReport {
    pub alpha_minus: i64,
    pub alpha_plus: i64,
    pub parity: i64,
    pub cz: i64,
    pub eigenvalues: Vec<f64>,
    pub windings: Vec<i64>,
}

/// Default threshold below which an eigenvalue counts as zero.
pub const NONDEGENERACY_TOL: f64 = 1e-6;

pub fn alphas_from_spectrum(op: &OperatorDiscretization) -> Result<AlphaReport, SpectrumError> {
    alphas_from_spectrum_with(op, NONDEGENERACY_TOL)
}

/// `α₋` is the largest winding below zero, `α₊` the smallest above; uses the
/// whole resolved band.
pub fn alphas_from_spectrum_with(op: &OperatorDiscretization, zero_tol: f64) -> Result<AlphaReport, SpectrumError> {
    let r = op.resolved_radius();
    let pairs = eigen_window(op, -r, r)?;
    if let Some(p) = pairs.iter().find(|p| p.eigenvalue.abs() <= zero_tol) {
        return Err(SpectrumError::DegenerateOrbit(p.eigenvalue));
    }
    check_winding_structure(&pairs)?;
    let alpha_minus = pairs
        .iter()
        .filter(|p| p.eigenvalue < 0.0)
        .map(|p| p.winding)
        .max()
        .ok_or(SpectrumError::MissingSign("negative"))?;
    let alpha_plus = pairs
        .iter()
        .filter(|p| p.eigenvalue > 0.0)
        .map(|p| p.winding)
        .min()
        .ok_or(SpectrumError::MissingSign("positive"))?;
    let parity = alpha_plus - alpha_minus;
    if !(0..=1).contains(&parity) {
        return Err(SpectrumError::WindingStructure(format!(
            "extremal windings {alpha_minus}, {alpha_plus} are not adjacent"
        )));
    }
    let cz = 2 * alpha_minus + parity;
    debug_assert_eq!(cz, 2 * alpha_plus - parity);
    Ok(AlphaReport {
        alpha_minus,
        alpha_plus,
        parity,
        cz,
        eigenvalues: pairs.iter().map(|p| p.eigenvalue).collect(),
        windings: pairs.iter().map(|p| p.winding).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1.0)
    }

    #[test]
    fn zero_loop_small_cutoff() {
        let op = assemble(&SpectralLoop::constant(0.0), 4).unwrap();
        let pairs = eigen_window(&op, -7.0, 7.0).unwrap();
        let vals: Vec<f64> = pairs.iter().map(|p| p.eigenvalue).collect();
        let expect = [-2.0 * PI, -2.0 * PI, 0.0, 0.0, 2.0 * PI, 2.0 * PI];
        assert_eq!(vals.len(), 6);
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }
        assert!(pairs.iter().all(|p| p.multiplicity == 2));
    }

    #[test]
    fn constant_identity() {
        let op = assemble(&SpectralLoop::constant(1.0), 16).unwrap();
        assert!(op.max_asymmetry() < 1e-14);
        let low = eigen_window(&op, -2.0, 2.0).unwrap();
        assert_eq!(low.len(), 2);
        assert!(low.iter().all(|p| close(p.eigenvalue, -1.0, 1e-12) && p.winding == 0 && p.multiplicity == 2));
        let high = eigen_window(&op, 2.0, 8.0).unwrap();
        assert_eq!(high.len(), 2);
        assert!(high.iter().all(|p| close(p.eigenvalue, 2.0 * PI - 1.0, 1e-12) && p.winding == 1));
        assert!(eigen_window(&op, 0.0, 0.5).unwrap().is_empty());
        assert!(low.iter().all(|p| p.residual < 1e-10));
    }

    #[test]
    fn alphas_closed_form() {
        let r = alphas_from_spectrum(&assemble(&SpectralLoop::constant(1.0), 32).unwrap()).unwrap();
        assert_eq!((r.alpha_minus, r.alpha_plus, r.parity, r.cz), (0, 1, 1, 1));
        let r = alphas_from_spectrum(&assemble(&SpectralLoop::constant(-1.0), 32).unwrap()).unwrap();
        assert_eq!((r.alpha_minus, r.alpha_plus, r.parity, r.cz), (-1, 0, 1, -1));
        let err = alphas_from_spectrum(&assemble(&SpectralLoop::constant(2.0 * PI), 32).unwrap());
        assert!(matches!(err, Err(SpectrumError::DegenerateOrbit(_))));
    }

    #[test]
    fn hyperbolic_is_even() {
        let r = alphas_from_spectrum(&assemble(&SpectralLoop::constant_matrix([[1.0, 0.0], [0.0, -1.0]]), 32).unwrap())
            .unwrap();
        assert_eq!((r.alpha_minus, r.alpha_plus, r.parity, r.cz), (0, 0, 0, 0));
    }

    #[test]
    fn cutoff_and_window_errors() {
        let l = cover_loop();
        assert!(matches!(
            assemble(&l, 6),
            Err(SpectrumError::CutoffBelowBandwidth { .. })
        ));
        let op = assemble(&SpectralLoop::constant(1.0), 8).unwrap();
        assert!(matches!(
            eigen_window(&op, -30.0, 0.0),
            Err(SpectrumError::WindowExceedsResolution { .. })
        ));
        assert!(eigen_window(&op, 1.0, 1.0).is_err());
    }

    fn cover_loop() -> SpectralLoop {
        super::super::loops::cover_operator(
            &SpectralLoop::new([super::super::loops::LoopMode {
                n: 1,
                cos: [[0.5, 0.0], [0.0, 0.5]],
                sin: [[0.0; 2]; 2],
            }])
            .unwrap(),
            3,
        )
    }

    #[test]
    fn covering_multiplicity_of_constant_modes() {
        let op = assemble(&SpectralLoop::constant(0.5), 16).unwrap();
        // winding-2 eigenfunctions e^{4πit} are 2-fold covers
        let pairs = eigen_window(&op, 10.0, 13.0).unwrap();
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().all(|p| p.winding == 2));
        assert_eq!(pairs[0].covering_multiplicity(4), 2);
        assert_eq!(pairs[0].covering_multiplicity(3), 1);
        assert_eq!(pairs[0].covering_multiplicity(2), 2);
    }
}
