use std::collections::BTreeSet;

use serde::Serialize;

use crate::model::Scene;

use super::chern::{fredholm_index, normal_chern};
use super::IntersectionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TransversalityReport {
    pub index: i64,
    pub c_n: i64,
    pub regular: bool,
}

/// Immersed curves in dimension four with `ind > c_N` are Fredholm regular.
/// The caller vouches for immersion.
pub fn automatic_transversality(scene: &Scene, u: &str) -> Result<TransversalityReport, IntersectionError> {
    let c = scene.curve(u)?;
    if c.ambient_dim_half != 2 {
        return Err(IntersectionError::NotDimensionFour {
            curve: u.to_string(),
            n: c.ambient_dim_half,
        });
    }
    let index = fredholm_index(scene, u)?;
    let c_n = normal_chern(scene, u)?;
    Ok(TransversalityReport {
        index,
        c_n,
        regular: index > c_n,
    })
}

/// Per-clause outcome of the local foliation criterion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FoliationReport {
    pub index_two: bool,
    pub genus_zero: bool,
    pub odd_orbits: bool,
    pub distinct_simple_orbits: bool,
    pub all_pass: bool,
}

/// Evaluates: index 2, genus 0, every asymptotic orbit odd, and punctures at
/// pairwise distinct simply covered orbits.
pub fn foliation_criteria(scene: &Scene, u: &str) -> Result<FoliationReport, IntersectionError> {
    let c = scene.curve(u)?;
    let index_two = fredholm_index(scene, u)? == 2;
    let genus_zero = c.genus == 0;
    let mut odd_orbits = true;
    for p in &c.punctures {
        odd_orbits &= scene.windings(&p.orbit, p.multiplicity)?.parity() == 1;
    }
    let mut seen = BTreeSet::new();
    let distinct_simple_orbits = c
        .punctures
        .iter()
        .all(|p| p.multiplicity == 1 && seen.insert(p.orbit.as_str()));
    Ok(FoliationReport {
        index_two,
        genus_zero,
        odd_orbits,
        distinct_simple_orbits,
        all_pass: index_two && genus_zero && odd_orbits && distinct_simple_orbits,
    })
}
