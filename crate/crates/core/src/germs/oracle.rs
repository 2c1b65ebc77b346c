//! Floating-point perturbation counts, independent of the vanishing-order
//! computation: perturb the germs, eliminate `w` exactly, and count the
//! parameter values inside a disk with companion-matrix eigenvalues,
//! cross-checked by the argument principle.

use std::f64::consts::PI;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;

use super::gauss::{GaussInt, GaussRat, Ring};
use super::germ::{
    check_delta_input, check_intersection_fiber, difference, divided_difference, resultant_in_z, Germ,
};
use super::poly::Poly;
use super::GermError;

pub const DEFAULT_EPSILON: f64 = 1e-3;
pub const DEFAULT_RADIUS: f64 = 0.3;
/// Roots closer than this to the circle `|z| = radius` abort the count.
pub const BOUNDARY_BAND: f64 = 1e-6;
pub const MAX_REDRAWS: u32 = 10;
/// Times the perturbation may be shrunk by a factor 16 before giving up.
pub const MAX_SHRINKS: u32 = 12;

/// Roots of `Σ c_n z^n` as eigenvalues of the companion matrix.
pub fn poly_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let Some(d) = coeffs.iter().rposition(|c| *c != Complex64::default()) else {
        return Vec::new();
    };
    if d == 0 {
        return Vec::new();
    }
    let lead = coeffs[d];
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for j in 0..d {
        m[(0, j)] = -coeffs[d - 1 - j] / lead;
    }
    for i in 1..d {
        m[(i, i - 1)] = Complex64::new(1.0, 0.0);
    }
    Schur::try_new(m, f64::EPSILON, 100 * d)
        .and_then(|s| s.eigenvalues())
        .map(|v| v.iter().copied().collect())
        .unwrap_or_default()
}

/// Coefficients of `R(radius·y)` in floating point, normalized so the
/// largest has modulus one. Works in a logarithmic scale so that huge exact
/// integers neither overflow nor lose their relative sizes.
fn scaled_coefficients(r: &Poly<GaussInt>, radius: f64) -> Vec<Complex64> {
    let log_r = radius.log2();
    let parts: Vec<(Complex64, f64)> = r
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let shift = c.bits().saturating_sub(60);
            let mantissa = c.to_complex_scaled(shift);
            (mantissa, shift as f64 + n as f64 * log_r)
        })
        .collect();
    let top = parts
        .iter()
        .filter(|(m, _)| m.norm() > 0.0)
        .map(|(m, e)| m.norm().log2() + e)
        .fold(f64::NEG_INFINITY, f64::max);
    parts.iter().map(|(m, e)| m * (e - top).exp2()).collect()
}

fn horner(coeffs: &[Complex64], y: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::default(), |acc, c| acc * y + c)
}

/// Zeros inside the unit circle by the argument principle.
fn argument_count(coeffs: &[Complex64]) -> Option<usize> {
    let deg = coeffs.len().saturating_sub(1);
    let n = (64 * deg).max(1024);
    let values: Vec<Complex64> = (0..n)
        .map(|j| horner(coeffs, Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64)))
        .collect();
    if values.iter().any(|v| v.norm() == 0.0 || !v.norm().is_finite()) {
        return None;
    }
    let turns: f64 = (0..n).map(|j| (values[(j + 1) % n] / values[j]).arg()).sum::<f64>() / (2.0 * PI);
    let rounded = turns.round();
    ((turns - rounded).abs() < 0.05 && rounded >= 0.0).then_some(rounded as usize)
}

enum Count {
    Inside(usize),
    Degenerate,
}

fn count_inside(r: &Poly<GaussInt>, radius: f64) -> Result<Count, GermError> {
    let coeffs = scaled_coefficients(r, radius);
    let roots = poly_roots(&coeffs);
    if roots.len() + 1 != coeffs.len() {
        return Ok(Count::Degenerate);
    }
    if let Some(root) = roots.iter().find(|y| ((y.norm() - 1.0) * radius).abs() < BOUNDARY_BAND) {
        return Err(GermError::RadiusOnRoot {
            radius,
            modulus: root.norm() * radius,
        });
    }
    let inside: Vec<Complex64> = roots.into_iter().filter(|y| y.norm() < 1.0).collect();
    let separated = inside
        .iter()
        .enumerate()
        .all(|(i, a)| inside[i + 1..].iter().all(|b| (a - b).norm() > 1e-9));
    if !separated {
        return Ok(Count::Degenerate);
    }
    match argument_count(&coeffs) {
        Some(n) if n == inside.len() => Ok(Count::Inside(n)),
        _ => Ok(Count::Degenerate),
    }
}

/// Rouché test on the sampled circle: the normalized perturbed resultant
/// stays within half the modulus of the unperturbed one, so both have the
/// same number of zeros in the disk and no perturbed zero has escaped it.
fn rouche_close(r0: &Poly<GaussInt>, r: &Poly<GaussInt>, radius: f64) -> bool {
    let mut a = scaled_coefficients(r0, radius);
    let mut b = scaled_coefficients(r, radius);
    let len = a.len().max(b.len());
    a.resize(len, Complex64::default());
    b.resize(len, Complex64::default());
    let n = (64 * len).max(1024);
    (0..n).all(|j| {
        let y = Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64);
        let base = horner(&a, y);
        (horner(&b, y) - base).norm() < 0.5 * base.norm()
    })
}

/// Smallest modulus of a nonzero root of the unperturbed resultant, or
/// `None` if all its roots are at the origin.
fn nearest_far_root(r0: &Poly<GaussInt>) -> Result<Option<f64>, GermError> {
    let ord = r0.order().ok_or(GermError::IdenticalImages)?;
    let stripped = r0.shift_down(ord);
    if stripped.degree() == Some(0) {
        return Ok(None);
    }
    let coeffs = scaled_coefficients(&stripped, 1.0);
    Ok(poly_roots(&coeffs).iter().map(|z| z.norm()).reduce(f64::min))
}

fn check_radius(r0: &Poly<GaussInt>, radius: f64) -> Result<(), GermError> {
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(GermError::OracleFailed(format!("radius {radius} is not positive")));
    }
    match nearest_far_root(r0)? {
        Some(m) if m <= radius * 1.05 => Err(GermError::RadiusTooLarge { radius, root: m }),
        _ => Ok(()),
    }
}

/// `ε·e^{2πiaφ}` for the golden-ratio rotation `φ`, rounded to a dyadic
/// rational with 16 significant bits to keep the exact elimination cheap.
fn redraw(epsilon: Complex64, attempt: u32) -> Result<GaussRat, GermError> {
    if !(epsilon.norm() > 0.0 && epsilon.norm().is_finite()) {
        return Err(GermError::OracleFailed(format!("epsilon {epsilon} is not a nonzero number")));
    }
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let turn = (f64::from(attempt) * phi).fract();
    let e = epsilon * Complex64::from_polar(1.0, 2.0 * PI * turn);
    let scale = (16.0 - epsilon.norm().log2().floor()).exp2();
    let rounded = Complex64::new((e.re * scale).round() / scale, (e.im * scale).round() / scale);
    GaussRat::from_complex(rounded).ok_or_else(|| GermError::OracleFailed(format!("epsilon {epsilon} is not finite")))
}

fn zero() -> GaussRat {
    <GaussRat as Ring>::zero()
}

/// Radius half-way to the nearest spurious root of the unperturbed
/// intersection resultant, capped at [`DEFAULT_RADIUS`].
pub fn intersection_radius(u: &Germ, v: &Germ) -> Result<f64, GermError> {
    check_intersection_fiber(v)?;
    let r0 = resultant_in_z(&difference(u.p(), v.p(), &zero()), &difference(u.q(), v.q(), &zero()));
    Ok(nearest_far_root(&r0)?.map_or(DEFAULT_RADIUS, |m| (0.5 * m).min(DEFAULT_RADIUS)))
}

/// As [`intersection_radius`] for the double point resultant.
pub fn double_point_radius(u: &Germ) -> Result<f64, GermError> {
    if check_delta_input(u)?.is_some() {
        return Ok(DEFAULT_RADIUS);
    }
    let r0 = resultant_in_z(&divided_difference(u.p(), &zero()), &divided_difference(u.q(), &zero()));
    match nearest_far_root(&r0) {
        Ok(m) => Ok(m.map_or(DEFAULT_RADIUS, |m| (0.5 * m).min(DEFAULT_RADIUS))),
        Err(GermError::IdenticalImages) => Err(GermError::NonIsolatedDoublePoints),
        Err(e) => Err(e),
    }
}

/// Counts solutions `(z, w)` of `u_ε(z) = v(w)` with `|z| < radius` for
/// `u_ε = u + (ε, 0)`.
pub fn numeric_intersection_oracle(u: &Germ, v: &Germ, epsilon: Complex64, radius: f64) -> Result<u32, GermError> {
    check_intersection_fiber(v)?;
    let r0 = resultant_in_z(&difference(u.p(), v.p(), &zero()), &difference(u.q(), v.q(), &zero()));
    check_radius(&r0, radius)?;
    let b = difference(u.q(), v.q(), &zero());
    perturbed_count(&r0, radius, epsilon, |eps| resultant_in_z(&difference(u.p(), v.p(), eps), &b))
        .map(|n| n as u32)
}

/// Shrinks `ε` until the perturbed resultant passes the Rouché test, then
/// counts its zeros in the disk, redrawing the phase of `ε` on degenerate
/// draws.
fn perturbed_count(
    r0: &Poly<GaussInt>,
    radius: f64,
    epsilon: Complex64,
    resultant: impl Fn(&GaussRat) -> Poly<GaussInt>,
) -> Result<usize, GermError> {
    for shrink in 0..MAX_SHRINKS {
        let scaled = epsilon / 16f64.powi(shrink as i32);
        for attempt in 0..MAX_REDRAWS {
            let eps = redraw(scaled, attempt)?;
            let r = resultant(&eps);
            if r.is_zero() {
                continue;
            }
            if !rouche_close(r0, &r, radius) {
                break;
            }
            if let Count::Inside(n) = count_inside(&r, radius)? {
                return Ok(n);
            }
        }
    }
    Err(GermError::OracleFailed(format!(
        "no usable epsilon after {MAX_SHRINKS} reductions of {MAX_REDRAWS} draws"
    )))
}

/// Counts double points of the immersed perturbation `(p(z), q(z) + εz)`
/// inside the disk: the ordered pairs `z ≠ w` with equal images, halved.
pub fn numeric_double_point_oracle(u: &Germ, epsilon: Complex64, radius: f64) -> Result<u32, GermError> {
    if let Some(d) = check_delta_input(u)? {
        return Ok(d);
    }
    let p = divided_difference(u.p(), &zero());
    let r0 = resultant_in_z(&p, &divided_difference(u.q(), &zero()));
    if r0.is_zero() {
        return Err(GermError::NonIsolatedDoublePoints);
    }
    check_radius(&r0, radius)?;
    let n = perturbed_count(&r0, radius, epsilon, |eps| resultant_in_z(&p, &divided_difference(u.q(), eps)))?;
    if n % 2 != 0 {
        return Err(GermError::OracleFailed(format!("odd number {n} of ordered double points")));
    }
    Ok((n / 2) as u32)
}
