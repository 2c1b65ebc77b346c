//! Shared fixtures: random germs, loops and symmetric matrices, plus paths
//! to the shipped data files.

#![allow(dead_code)]

use std::path::PathBuf;

use nalgebra::DMatrix;
use rand::Rng;
use siefring_kit::germs::Germ;
use siefring_kit::model::Scene;
use siefring_kit::spectrum::{LoopMode, SpectralLoop};

pub fn data_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(rel)
}

pub fn scene(name: &str) -> Scene {
    Scene::from_path(data_path(&format!("scenes/{name}.json"))).expect("golden scene loads")
}

pub const GOLDEN_SCENES: [&str; 4] = ["closed-ruled", "orbit-cylinder", "planar-page", "nodal-split"];

/// Tangent directions used for random germs; any two are distinct.
pub const TANGENTS: [((i64, i64), (i64, i64)); 6] = [
    ((1, 0), (0, 0)),
    ((0, 0), (1, 0)),
    ((1, 0), (1, 0)),
    ((1, 0), (0, 1)),
    ((1, 0), (-1, 0)),
    ((2, 0), (1, 1)),
];

fn small_gauss(rng: &mut impl Rng) -> (i64, i64) {
    (rng.gen_range(-3..=3), rng.gen_range(-3..=3))
}

/// `(a·z^k + ..., b·z^k + ...)` with `[a:b]` the chosen tangent and `extra`
/// terms above degree `k` in each coordinate. The degree `k+1` term is a
/// fixed direction transverse to the tangent, so the germ is simple; the
/// terms above it are random Gaussian integers.
pub fn random_germ(rng: &mut impl Rng, k: usize, tangent: usize, extra: usize) -> Germ {
    let (a, b) = TANGENTS[tangent];
    let mut p = vec![(0, 0); k + extra + 1];
    let mut q = vec![(0, 0); k + extra + 1];
    p[k] = a;
    q[k] = b;
    if extra >= 1 {
        let c = rng.gen_range(1..=3);
        if a != (0, 0) {
            q[k + 1] = (c, 0);
        } else {
            p[k + 1] = (c, 0);
        }
    }
    for j in k + 2..=k + extra {
        p[j] = small_gauss(rng);
        q[j] = small_gauss(rng);
    }
    Germ::from_gauss_ints(&p, &q).expect("random germ is valid")
}

fn random_symmetric(rng: &mut impl Rng, scale: f64) -> [[f64; 2]; 2] {
    let a = rng.gen_range(-scale..scale);
    let b = rng.gen_range(-scale..scale);
    let c = rng.gen_range(-scale..scale);
    [[a, b], [b, c]]
}

/// A smooth loop with Fourier modes up to `bandwidth`, coefficients of size
/// at most `scale`.
pub fn random_loop(rng: &mut impl Rng, bandwidth: u32, scale: f64) -> SpectralLoop {
    let modes = (0..=bandwidth).map(|n| LoopMode {
        n,
        cos: random_symmetric(rng, scale),
        sin: if n == 0 { [[0.0; 2]; 2] } else { random_symmetric(rng, scale) },
    });
    SpectralLoop::new(modes).expect("random loop is symmetric")
}

/// Random orthogonal matrix from the QR factorization of a Gaussian-like one.
pub fn random_orthogonal(rng: &mut impl Rng, dim: usize) -> DMatrix<f64> {
    let m = DMatrix::from_fn(dim, dim, |_, _| rng.gen_range(-1.0..1.0));
    m.qr().q()
}

/// A random germ with critical order in `orders` and a random tangent.
pub fn draw_germ(rng: &mut impl Rng, orders: std::ops::RangeInclusive<usize>, extra: usize) -> Germ {
    let k = rng.gen_range(orders);
    let t = rng.gen_range(0..TANGENTS.len());
    random_germ(rng, k, t, extra)
}

/// A random scene: up to three orbits with covers 1..=3, up to four curves
/// with up to four punctures each, and a relative pairing on every pair.
pub fn random_scene(rng: &mut impl Rng) -> Scene {
    use siefring_kit::model::{CoverWindings, CurveClass, OrbitData, PunctureSpec, RelativePairing, Sign};
    let n_orbits = rng.gen_range(1..=3);
    let orbits: Vec<OrbitData> = (0..n_orbits)
        .map(|j| {
            let covers: Vec<_> = (1..=3).map(|k| (k, CoverWindings::from_cz(rng.gen_range(-6..=6)))).collect();
            OrbitData::new(format!("g{j}"), covers).expect("valid orbit")
        })
        .collect();
    let n_curves = rng.gen_range(1..=4);
    let curves: Vec<CurveClass> = (0..n_curves)
        .map(|i| {
            let punctures = (0..rng.gen_range(0..=4))
                .map(|_| {
                    let sign = if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
                    PunctureSpec::new(sign, format!("g{}", rng.gen_range(0..n_orbits)), rng.gen_range(1..=3))
                })
                .collect();
            let mut c = CurveClass::new(format!("c{i}"), rng.gen_range(0..=2), rng.gen_range(-4..=4), punctures);
            if rng.gen_bool(0.2) {
                c = c.not_simple();
            }
            c
        })
        .collect();
    let mut pairing = RelativePairing::new();
    for i in 0..n_curves {
        for j in i..n_curves {
            pairing.insert(&format!("c{i}"), &format!("c{j}"), rng.gen_range(-6..=6)).expect("fresh pair");
        }
    }
    Scene::new(orbits, curves, pairing).expect("valid scene")
}

/// A random shift of every orbit in `scene` by an integer in `[-5, 5]`.
pub fn random_shift(rng: &mut impl Rng, scene: &Scene) -> siefring_kit::model::TrivializationShift {
    let mut s = siefring_kit::model::TrivializationShift::new();
    for o in scene.orbits() {
        s = s.with(o.id(), rng.gen_range(-5..=5));
    }
    s
}
