use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;

use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::SpectrumError;

const SYMMETRY_TOL: f64 = 1e-12;

/// One Fourier mode `cos·cos(2πnt) + sin·sin(2πnt)` of a loop of symmetric
/// matrices. The `sin` part of the `n = 0` mode is ignored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LoopMode {
    pub n: u32,
    pub cos: [[f64; 2]; 2],
    #[serde(default)]
    pub sin: [[f64; 2]; 2],
}

/// A smooth loop `t ↦ S(t)` of real symmetric 2×2 matrices on `ℝ/ℤ`,
/// stored as a finite Fourier series.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, try_from = "LoopFile", into = "LoopFile")]
pub struct SpectralLoop {
    modes: BTreeMap<u32, ([[f64; 2]; 2], [[f64; 2]; 2])>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LoopFile {
    modes: Vec<LoopMode>,
}

impl TryFrom<LoopFile> for SpectralLoop {
    type Error = SpectrumError;

    fn try_from(file: LoopFile) -> Result<Self, Self::Error> {
        SpectralLoop::new(file.modes)
    }
}

impl From<SpectralLoop> for LoopFile {
    fn from(l: SpectralLoop) -> Self {
        LoopFile { modes: l.modes() }
    }
}

fn check_symmetric(m: &[[f64; 2]; 2], n: u32, part: &str) -> Result<(), SpectrumError> {
    let scale = 1.0 + m[0][1].abs().max(m[1][0].abs());
    if (m[0][1] - m[1][0]).abs() > SYMMETRY_TOL * scale || m.iter().flatten().any(|x| !x.is_finite()) {
        return Err(SpectrumError::AsymmetricMode {
            n,
            part: part.to_string(),
        });
    }
    Ok(())
}

fn add(a: &mut [[f64; 2]; 2], b: &[[f64; 2]; 2], scale: f64) {
    for i in 0..2 {
        for j in 0..2 {
            a[i][j] += scale * b[i][j];
        }
    }
}

impl SpectralLoop {
    pub fn new(modes: impl IntoIterator<Item = LoopMode>) -> Result<Self, SpectrumError> {
        let mut table: BTreeMap<u32, ([[f64; 2]; 2], [[f64; 2]; 2])> = BTreeMap::new();
        for mode in modes {
            check_symmetric(&mode.cos, mode.n, "cos")?;
            check_symmetric(&mode.sin, mode.n, "sin")?;
            let entry = table.entry(mode.n).or_default();
            add(&mut entry.0, &mode.cos, 1.0);
            if mode.n > 0 {
                add(&mut entry.1, &mode.sin, 1.0);
            }
        }
        Ok(SpectralLoop { modes: table })
    }

    /// `S ≡ c·Id`
    pub fn constant(c: f64) -> Self {
        Self::constant_matrix([[c, 0.0], [0.0, c]])
    }

    pub fn constant_matrix(m: [[f64; 2]; 2]) -> Self {
        SpectralLoop::new([LoopMode {
            n: 0,
            cos: m,
            sin: [[0.0; 2]; 2],
        }])
        .expect("constant loop must be symmetric")
    }

    pub fn from_json(text: &str) -> Result<Self, SpectrumError> {
        serde_json::from_str(text).map_err(|e| SpectrumError::Parse(e.to_string()))
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, SpectrumError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| SpectrumError::Parse(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn modes(&self) -> Vec<LoopMode> {
        self.modes
            .iter()
            .map(|(&n, &(cos, sin))| LoopMode { n, cos, sin })
            .collect()
    }

    /// Largest frequency carrying a nonzero coefficient.
    pub fn bandwidth(&self) -> u32 {
        self.modes
            .iter()
            .filter(|(_, (c, s))| c.iter().chain(s).flatten().any(|&x| x != 0.0))
            .map(|(&n, _)| n)
            .max()
            .unwrap_or(0)
    }

    pub fn eval(&self, t: f64) -> Matrix2<f64> {
        let mut out = [[0.0; 2]; 2];
        for (&n, (c, s)) in &self.modes {
            let theta = 2.0 * PI * f64::from(n) * t;
            add(&mut out, c, theta.cos());
            add(&mut out, s, theta.sin());
        }
        Matrix2::new(out[0][0], out[0][1], out[1][0], out[1][1])
    }

    /// Largest `|S(t) - S(t)ᵀ|` over `samples` equally spaced points.
    pub fn max_asymmetry(&self, samples: usize) -> f64 {
        (0..samples)
            .map(|j| {
                let m = self.eval(j as f64 / samples as f64);
                (m[(0, 1)] - m[(1, 0)]).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Complex Fourier coefficients `(α̂_n, β̂_n)` for `n ∈ [-B, B]` of the
    /// decomposition `S f = α f + β f̄` on `ℝ² ≅ ℂ`, where
    /// `α = (s₁₁ + s₂₂)/2` and `β = (s₁₁ - s₂₂)/2 + i s₁₂`.
    pub(crate) fn complex_coefficients(&self) -> BTreeMap<i64, (Complex64, Complex64)> {
        let mut out: BTreeMap<i64, (Complex64, Complex64)> = BTreeMap::new();
        let split = |m: &[[f64; 2]; 2]| {
            let a = 0.5 * (m[0][0] + m[1][1]);
            let b = Complex64::new(0.5 * (m[0][0] - m[1][1]), m[0][1]);
            (a, b)
        };
        for (&n, (c, s)) in &self.modes {
            let (ac, bc) = split(c);
            let (as_, bs) = split(s);
            if n == 0 {
                let e = out.entry(0).or_default();
                e.0 += Complex64::new(ac, 0.0);
                e.1 += bc;
                continue;
            }
            let n = i64::from(n);
            let i = Complex64::i();
            // cos = (e_n + e_{-n})/2, sin = (e_n - e_{-n})/(2i)
            let pos = out.entry(n).or_default();
            pos.0 += 0.5 * (Complex64::new(ac, 0.0) - i * as_);
            pos.1 += 0.5 * (bc - i * bs);
            let neg = out.entry(-n).or_default();
            neg.0 += 0.5 * (Complex64::new(ac, 0.0) + i * as_);
            neg.1 += 0.5 * (bc + i * bs);
        }
        out
    }
}

/// The loop `t ↦ k·S(kt)` governing the `k`-fold cover of the orbit, in the
/// pulled-back trivialization.
pub fn cover_operator(base: &SpectralLoop, k: u32) -> SpectralLoop {
    assert!(k >= 1, "cover multiplicity must be positive");
    let kf = f64::from(k);
    let scale = |m: &[[f64; 2]; 2]| [[kf * m[0][0], kf * m[0][1]], [kf * m[1][0], kf * m[1][1]]];
    SpectralLoop {
        modes: base
            .modes
            .iter()
            .map(|(&n, (c, s))| (n * k, (scale(c), scale(s))))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_loop() -> SpectralLoop {
        SpectralLoop::new([
            LoopMode {
                n: 0,
                cos: [[1.0, 0.3], [0.3, -0.5]],
                sin: [[0.0; 2]; 2],
            },
            LoopMode {
                n: 2,
                cos: [[0.2, -0.1], [-0.1, 0.4]],
                sin: [[-0.3, 0.25], [0.25, 0.1]],
            },
        ])
        .unwrap()
    }

    #[test]
    fn symmetric_everywhere() {
        let l = sample_loop();
        assert!(l.max_asymmetry(257) < 1e-12);
        assert_eq!(l.bandwidth(), 2);
    }

    #[test]
    fn asymmetric_mode_rejected() {
        let err = SpectralLoop::new([LoopMode {
            n: 1,
            cos: [[0.0, 1.0], [0.5, 0.0]],
            sin: [[0.0; 2]; 2],
        }])
        .unwrap_err();
        assert!(matches!(err, SpectrumError::AsymmetricMode { n: 1, .. }));
    }

    #[test]
    fn complex_coefficients_reconstruct_loop() {
        let l = sample_loop();
        let coeffs = l.complex_coefficients();
        for j in 0..17 {
            let t = j as f64 / 17.0;
            let (mut a, mut b) = (Complex64::default(), Complex64::default());
            for (&n, &(an, bn)) in &coeffs {
                let e = Complex64::from_polar(1.0, 2.0 * PI * n as f64 * t);
                a += an * e;
                b += bn * e;
            }
            let s = l.eval(t);
            assert!(a.im.abs() < 1e-14);
            assert!((a.re + b.re - s[(0, 0)]).abs() < 1e-14);
            assert!((a.re - b.re - s[(1, 1)]).abs() < 1e-14);
            assert!((b.im - s[(0, 1)]).abs() < 1e-14);
        }
    }

    #[test]
    fn cover_loop() {
        let l = sample_loop();
        assert_eq!(cover_operator(&l, 1), l);
        let c = cover_operator(&l, 3);
        for j in 0..11 {
            let t = j as f64 / 11.0;
            let diff = c.eval(t) - 3.0 * l.eval(3.0 * t);
            assert!(diff.abs().max() < 1e-12);
        }
        assert_eq!(cover_operator(&SpectralLoop::constant(0.5), 4), SpectralLoop::constant(2.0));
    }

    #[test]
    fn json_roundtrip() {
        let l = sample_loop();
        let text = serde_json::to_string(&l).unwrap();
        assert_eq!(SpectralLoop::from_json(&text).unwrap(), l);
        assert!(SpectralLoop::from_json(r#"{"modes": [], "extra": 1}"#).is_err());
        let asym = r#"{"modes": [{"n": 0, "cos": [[1, 2], [3, 1]]}]}"#;
        assert!(SpectralLoop::from_json(asym).is_err());
    }
}
