use crate::model::{gcd_cover, CurveClass, Scene, Sign};

use super::IntersectionError;

/// A cover `γ^k` of a simple orbit, by orbit id.
pub type OrbitCover<'a> = (&'a str, u32);

/// Bound on the relative asymptotic winding of an end at `γ^k` around an end
/// at `γ^m`. Vanishes when the underlying simple orbits differ.
///
/// For `sign = Plus` this is `min{-k α₋(γ^m), -m α₋(γ^k)}`, for `Minus`
/// `min{k α₊(γ^m), m α₊(γ^k)}`.
pub fn omega_pair(
    scene: &Scene,
    a: OrbitCover<'_>,
    b: OrbitCover<'_>,
    sign: Sign,
) -> Result<i64, IntersectionError> {
    let wa = scene.windings(a.0, a.1)?;
    let wb = scene.windings(b.0, b.1)?;
    if a.0 != b.0 {
        return Ok(0);
    }
    let (k, m) = (i64::from(a.1), i64::from(b.1));
    let s = sign.as_i64();
    // ∓ uses the opposite extremal winding
    let ext = sign.opposite();
    Ok((-s * k * wb.alpha(ext)).min(-s * m * wa.alpha(ext)))
}

/// Bound on the asymptotic self-winding of the branches of one end at `γ^k`:
/// `∓(k-1) α∓(γ^k) + [σ̄∓(γ^k) - 1]`.
pub fn omega_self(scene: &Scene, a: OrbitCover<'_>, sign: Sign) -> Result<i64, IntersectionError> {
    let w = scene.windings(a.0, a.1)?;
    let ext = sign.opposite();
    let k = i64::from(a.1);
    let alpha = w.alpha(ext);
    let sigma = i64::from(gcd_cover(a.1, alpha));
    Ok(-sign.as_i64() * (k - 1) * alpha + (sigma - 1))
}

/// `Σ_{(z,ζ) ∈ Γ_u^± × Γ_v^±} Ω_±(γ_z^{k_z}, γ_ζ^{k_ζ})`, as two separate sums.
pub fn omega_sum(scene: &Scene, u: &CurveClass, v: &CurveClass) -> Result<i64, IntersectionError> {
    let mut total = 0;
    for sign in [Sign::Plus, Sign::Minus] {
        for z in u.punctures_with(sign) {
            for w in v.punctures_with(sign) {
                total += omega_pair(
                    scene,
                    (&z.orbit, z.multiplicity),
                    (&w.orbit, w.multiplicity),
                    sign,
                )?;
            }
        }
    }
    Ok(total)
}

/// The homotopy-invariant intersection pairing `u ⋆ v = u •τ v - Σ Ω`.
pub fn star(scene: &Scene, u: &str, v: &str) -> Result<i64, IntersectionError> {
    let bullet = scene.bullet(u, v)?;
    let cu = scene.curve(u)?;
    let cv = scene.curve(v)?;
    Ok(bullet - omega_sum(scene, cu, cv)?)
}

/// Intersections hidden at infinity, `u ⋆ v - u · v`, given the algebraic
/// count of actual intersections.
pub fn iota_infinity(
    scene: &Scene,
    u: &str,
    v: &str,
    geometric_count: i64,
) -> Result<i64, IntersectionError> {
    if geometric_count < 0 {
        return Err(IntersectionError::InvalidInput(format!(
            "geometric intersection count must be nonnegative, got {geometric_count}"
        )));
    }
    let s = star(scene, u, v)?;
    let hidden = s - geometric_count;
    if hidden < 0 {
        return Err(IntersectionError::NegativeHiddenCount {
            u: u.to_string(),
            v: v.to_string(),
            star: s,
            geometric: geometric_count,
        });
    }
    Ok(hidden)
}
