use nalgebra::{DMatrix, DVector};

use super::SpectrumError;

/// Samples `(s_j, v(s_j))` on an increasing grid.
pub type Trajectory = Vec<(f64, DVector<f64>)>;

/// Exponential model `v(s) ≈ e^{λs} v₊` fitted to the tail of a trajectory.
#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub lambda_fit: f64,
    pub direction_fit: DVector<f64>,
    /// Largest deviation of `log‖v‖` from the fitted line on the tail.
    pub residual: f64,
}

impl DecayFit {
    /// Distance from `direction_fit` to the line spanned by `e`.
    pub fn direction_error(&self, e: &DVector<f64>) -> f64 {
        let e = e.normalize();
        (&self.direction_fit - &e).norm().min((&self.direction_fit + &e).norm())
    }
}

const MIN_SAMPLES: usize = 20;

/// Least-squares slope of `log‖v‖` over the last half of the samples.
pub fn fit_decay(traj: &[(f64, DVector<f64>)]) -> Result<DecayFit, SpectrumError> {
    if traj.len() < MIN_SAMPLES {
        return Err(SpectrumError::TrajectoryUnusable(format!(
            "{} samples, need at least {MIN_SAMPLES}",
            traj.len()
        )));
    }
    if traj.windows(2).any(|w| !(w[1].0 > w[0].0)) {
        return Err(SpectrumError::TrajectoryUnusable("grid is not increasing".into()));
    }
    let tail = &traj[traj.len() / 2..];
    let mut pts = Vec::with_capacity(tail.len());
    for (s, v) in tail {
        let norm = v.norm();
        if !(norm > f64::MIN_POSITIVE) || !norm.is_finite() {
            return Err(SpectrumError::TrajectoryUnusable(format!("‖v({s})‖ = {norm:e}")));
        }
        pts.push((*s, norm.ln()));
    }
    let n = pts.len() as f64;
    let mean_s = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mean_s).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mean_s) * (p.1 - mean_y)).sum();
    let lambda_fit = sxy / sxx;
    let intercept = mean_y - lambda_fit * mean_s;
    let residual = pts
        .iter()
        .map(|(s, y)| (y - intercept - lambda_fit * s).abs())
        .fold(0.0, f64::max);
    let last = &traj[traj.len() - 1].1;
    Ok(DecayFit {
        lambda_fit,
        direction_fit: last / last.norm(),
        residual,
    })
}

/// Classical fixed-step RK4 for `v̇ = A(s) v`, returning `steps + 1` samples
/// including both endpoints.
pub fn integrate_linear_ode(
    a: impl Fn(f64) -> DMatrix<f64>,
    v0: &DVector<f64>,
    s0: f64,
    s1: f64,
    steps: usize,
) -> Result<Trajectory, SpectrumError> {
    if steps < 100 {
        return Err(SpectrumError::TrajectoryUnusable(format!("{steps} steps, need at least 100")));
    }
    if !(s1 > s0) {
        return Err(SpectrumError::TrajectoryUnusable(format!("interval [{s0}, {s1}] is empty")));
    }
    let h = (s1 - s0) / steps as f64;
    let mut out = Vec::with_capacity(steps + 1);
    let mut v = v0.clone();
    out.push((s0, v.clone()));
    for i in 0..steps {
        let s = s0 + i as f64 * h;
        let mid = a(s + 0.5 * h);
        let k1 = a(s) * &v;
        let k2 = &mid * (&v + &k1 * (0.5 * h));
        let k3 = &mid * (&v + &k2 * (0.5 * h));
        let k4 = a(s + h) * (&v + &k3 * h);
        v += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
        let s_next = if i + 1 == steps { s1 } else { s0 + (i + 1) as f64 * h };
        out.push((s_next, v.clone()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_exponential() {
        let traj: Trajectory = (0..50)
            .map(|j| {
                let s = j as f64 * 0.1;
                (s, DVector::from_vec(vec![(-2.0 * s).exp(), 0.0]))
            })
            .collect();
        let fit = fit_decay(&traj).unwrap();
        assert!((fit.lambda_fit + 2.0).abs() < 1e-12);
        assert!(fit.residual < 1e-9);
        assert!(fit.direction_error(&DVector::from_vec(vec![1.0, 0.0])) < 1e-12);
    }

    #[test]
    fn too_few_or_vanishing() {
        let short: Trajectory = (0..5).map(|j| (j as f64, DVector::from_element(1, 1.0))).collect();
        assert!(fit_decay(&short).is_err());
        let zero: Trajectory = (0..30).map(|j| (j as f64, DVector::zeros(2))).collect();
        assert!(fit_decay(&zero).is_err());
    }

    #[test]
    fn rk4_scalar_and_constant() {
        let one = DVector::from_element(1, 1.0);
        let t = integrate_linear_ode(|_| DMatrix::from_element(1, 1, 1.0), &one, 0.0, 1.0, 100).unwrap();
        assert!((t.last().unwrap().1[0] - std::f64::consts::E).abs() < 1e-8);
        let t = integrate_linear_ode(|_| DMatrix::zeros(2, 2), &DVector::from_vec(vec![1.0, 2.0]), 0.0, 3.0, 100).unwrap();
        assert!(t.iter().all(|(_, v)| v == &DVector::from_vec(vec![1.0, 2.0])));
        assert!(integrate_linear_ode(|_| DMatrix::zeros(1, 1), &one, 0.0, 1.0, 99).is_err());
    }

    #[test]
    fn rk4_is_fourth_order() {
        let one = DVector::from_element(1, 1.0);
        let err = |steps| {
            let t = integrate_linear_ode(|_| DMatrix::from_element(1, 1, 1.0), &one, 0.0, 2.0, steps).unwrap();
            (t.last().unwrap().1[0] - 2f64.exp()).abs()
        };
        let ratio = err(100) / err(200);
        assert!((13.0..19.0).contains(&ratio), "{ratio}");
    }

    #[test]
    fn perturbed_diagonal_selects_slow_rate() {
        let a = |s: f64| {
            let p = (-s).exp();
            DMatrix::from_row_slice(2, 2, &[-1.0, p, 0.5 * p, -3.0])
        };
        let v0 = DVector::from_vec(vec![0.3, 0.8]);
        let traj = integrate_linear_ode(a, &v0, 0.0, 20.0, 4000).unwrap();
        let fit = fit_decay(&traj).unwrap();
        assert!((fit.lambda_fit + 1.0).abs() < 1e-3, "{}", fit.lambda_fit);
        assert!(fit.direction_error(&DVector::from_vec(vec![1.0, 0.0])) < 1e-2);
    }
}
