use std::collections::BTreeMap;

use serde::Serialize;

use crate::model::{euler_char, PunctureSpec, Scene};

use super::chern::{normal_chern, spectral_covering_total};
use super::omega::star;
use super::IntersectionError;

/// `δ(u) + δ∞(u)` from `u ⋆ u = 2[δ + δ∞] + c_N + [σ̄ - #Γ]`.
///
/// Fails with a typed inconsistency when the numerator is odd or negative:
/// such data cannot describe a simple holomorphic curve.
pub fn adjunction_defect(scene: &Scene, u: &str) -> Result<i64, IntersectionError> {
    let c = scene.curve(u)?;
    if !c.simple {
        return Err(IntersectionError::NotSimple(u.to_string()));
    }
    let self_star = star(scene, u, u)?;
    let cn = normal_chern(scene, u)?;
    let sigma_excess = spectral_covering_total(scene, u)? - c.punctures.len() as i64;
    let numerator = self_star - cn - sigma_excess;
    if numerator % 2 != 0 {
        return Err(IntersectionError::AdjunctionParity {
            curve: u.to_string(),
            numerator,
        });
    }
    if numerator < 0 {
        return Err(IntersectionError::AdjunctionPositivity {
            curve: u.to_string(),
            numerator,
        });
    }
    Ok(numerator / 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RelativeAdjunction {
    /// `u •τ u`
    pub lhs: i64,
    /// `2δ + c₁^τ - χ + ι^τ_∞`
    pub rhs: i64,
    pub holds: bool,
}

/// Checks `u •τ u = 2δ(u) + c₁^τ - χ + ι^τ_∞(u)` for user-supplied `δ` and
/// `ι^τ_∞`.
pub fn relative_adjunction_check(
    scene: &Scene,
    u: &str,
    delta: i64,
    iota_tau_infty: i64,
) -> Result<RelativeAdjunction, IntersectionError> {
    let c = scene.curve(u)?;
    let lhs = scene.bullet(u, u)?;
    let rhs = 2 * delta + c.rel_c1 - euler_char(c) + iota_tau_infty;
    Ok(RelativeAdjunction {
        lhs,
        rhs,
        holds: lhs == rhs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NodalExpansion {
    pub total: i64,
    pub plus_plus: i64,
    pub minus_minus: i64,
    pub plus_minus: i64,
    pub holds: bool,
}

fn puncture_multiset<'a>(ps: impl Iterator<Item = &'a PunctureSpec>) -> BTreeMap<&'a PunctureSpec, usize> {
    let mut m = BTreeMap::new();
    for p in ps {
        *m.entry(p).or_insert(0) += 1;
    }
    m
}

/// Checks `u ⋆ u = v₊ ⋆ v₊ + v₋ ⋆ v₋ + 2(v₊ ⋆ v₋)` for a curve `u`
/// degenerating into the two components `v₊`, `v₋`.
pub fn nodal_star_expansion(
    scene: &Scene,
    components: [&str; 2],
    total: &str,
) -> Result<NodalExpansion, IntersectionError> {
    let [vp, vm] = components;
    let cu = scene.curve(total)?;
    let cp = scene.curve(vp)?;
    let cm = scene.curve(vm)?;
    let joined = puncture_multiset(cp.punctures.iter().chain(&cm.punctures));
    if joined != puncture_multiset(cu.punctures.iter()) {
        return Err(IntersectionError::NotADecomposition {
            total: total.to_string(),
            components: [vp.to_string(), vm.to_string()],
        });
    }
    let total_star = star(scene, total, total)?;
    let plus_plus = star(scene, vp, vp)?;
    let minus_minus = star(scene, vm, vm)?;
    let plus_minus = star(scene, vp, vm)?;
    Ok(NodalExpansion {
        total: total_star,
        plus_plus,
        minus_minus,
        plus_minus,
        holds: total_star == plus_plus + minus_minus + 2 * plus_minus,
    })
}
