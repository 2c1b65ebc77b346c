use std::collections::BTreeMap;

use super::curve::CurveClass;
use super::orbit::Sign;
use super::scene::Scene;
use super::ModelError;

/// Extra twists added to the baseline trivialization of each simple orbit.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrivializationShift {
    pub shifts: BTreeMap<String, i64>,
}

impl TrivializationShift {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, orbit: impl Into<String>, m: i64) -> Self {
        *self.shifts.entry(orbit.into()).or_insert(0) += m;
        self
    }

    pub fn get(&self, orbit: &str) -> i64 {
        self.shifts.get(orbit).copied().unwrap_or(0)
    }

    pub fn negated(&self) -> Self {
        TrivializationShift {
            shifts: self.shifts.iter().map(|(k, &m)| (k.clone(), -m)).collect(),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, &m) in &other.shifts {
            *out.shifts.entry(k.clone()).or_insert(0) += m;
        }
        out
    }
}

/// `Σ_{z ∈ Γ^sign} k_z · m(γ_z)`
fn weighted_ends(curve: &CurveClass, sign: Sign, shift: &TrivializationShift) -> i64 {
    curve
        .punctures_with(sign)
        .map(|p| i64::from(p.multiplicity) * shift.get(&p.orbit))
        .sum()
}

/// `Σ_{(z,ζ) ∈ Γ_u^sign × Γ_v^sign, γ_z = γ_ζ} k_z k_ζ · m(γ_z)`
fn weighted_end_pairs(u: &CurveClass, v: &CurveClass, sign: Sign, shift: &TrivializationShift) -> i64 {
    let mut total = 0;
    for z in u.punctures_with(sign) {
        let m = shift.get(&z.orbit);
        if m == 0 {
            continue;
        }
        for w in v.punctures_with(sign).filter(|w| w.orbit == z.orbit) {
            total += m * i64::from(z.multiplicity) * i64::from(w.multiplicity);
        }
    }
    total
}

/// Re-expresses every trivialization-dependent number of `scene` in the
/// trivializations twisted by `shift`.
pub fn shift_scene(scene: &Scene, shift: &TrivializationShift) -> Result<Scene, ModelError> {
    for id in shift.shifts.keys() {
        scene.orbit(id)?;
    }
    let orbits: BTreeMap<_, _> = scene
        .orbit_map()
        .iter()
        .map(|(id, o)| (id.clone(), o.twisted(shift.get(id))))
        .collect();
    let curves: Vec<CurveClass> = scene
        .curves()
        .iter()
        .map(|c| {
            let mut c = c.clone();
            c.rel_c1 += weighted_ends(&c, Sign::Plus, shift) - weighted_ends(&c, Sign::Minus, shift);
            c
        })
        .collect();
    let pairing = scene.pairing().map_entries(|u, v, bullet| {
        let cu = scene.curve(u).expect("validated pairing");
        let cv = scene.curve(v).expect("validated pairing");
        bullet + weighted_end_pairs(cu, cv, Sign::Plus, shift)
            - weighted_end_pairs(cu, cv, Sign::Minus, shift)
    });
    Ok(Scene::from_parts_unchecked(orbits, curves, pairing))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CoverWindings, OrbitData, PunctureSpec, RelativePairing};

    fn cylinder_scene() -> Scene {
        let g = OrbitData::new(
            "g",
            [
                (1, CoverWindings::new(0, 1).unwrap()),
                (2, CoverWindings::new(1, 1).unwrap()),
            ],
        )
        .unwrap();
        let u = CurveClass::new(
            "u",
            0,
            0,
            vec![PunctureSpec::positive("g", 2), PunctureSpec::negative("g", 1)],
        );
        let pairing = RelativePairing::new().with("u", "u", 5).unwrap();
        Scene::new(vec![g], vec![u], pairing).unwrap()
    }

    #[test]
    fn zero_shift_is_identity() {
        let s = cylinder_scene();
        let t = shift_scene(&s, &TrivializationShift::new().with("g", 0)).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn shift_moves_stored_numbers() {
        let s = cylinder_scene();
        let t = shift_scene(&s, &TrivializationShift::new().with("g", 3)).unwrap();
        assert_eq!(t.windings("g", 1).unwrap(), CoverWindings::new(-3, -2).unwrap());
        assert_eq!(t.windings("g", 2).unwrap(), CoverWindings::new(-5, -5).unwrap());
        // + end of multiplicity 2, - end of multiplicity 1
        assert_eq!(t.curve("u").unwrap().rel_c1, 3 * 2 - 3);
        assert_eq!(t.bullet("u", "u").unwrap(), 5 + 3 * 4 - 3);
    }

    #[test]
    fn unknown_orbit_rejected() {
        let s = cylinder_scene();
        assert!(shift_scene(&s, &TrivializationShift::new().with("h", 1)).is_err());
    }

    #[test]
    fn shifts_compose() {
        let s = cylinder_scene();
        let a = TrivializationShift::new().with("g", 2);
        let b = TrivializationShift::new().with("g", -7);
        let ab = shift_scene(&shift_scene(&s, &a).unwrap(), &b).unwrap();
        assert_eq!(ab, shift_scene(&s, &a.compose(&b)).unwrap());
        let back = shift_scene(&shift_scene(&s, &a).unwrap(), &a.negated()).unwrap();
        assert_eq!(back, s);
    }
}
