use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::curve::CurveClass;
use super::orbit::{CoverWindings, OrbitData};
use super::ModelError;

/// Relative intersection numbers `u •τ v`, stored once per unordered pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelativePairing {
    entries: BTreeMap<(String, String), i64>,
}

fn ordered(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

impl RelativePairing {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `u •τ v`. Re-inserting a pair with a different value fails.
    pub fn insert(&mut self, u: &str, v: &str, bullet: i64) -> Result<(), ModelError> {
        let key = ordered(u, v);
        match self.entries.get(&key) {
            Some(&old) if old != bullet => Err(ModelError::AsymmetricPairing {
                u: key.0,
                v: key.1,
                first: old,
                second: bullet,
            }),
            _ => {
                self.entries.insert(key, bullet);
                Ok(())
            }
        }
    }

    pub fn with(mut self, u: &str, v: &str, bullet: i64) -> Result<Self, ModelError> {
        self.insert(u, v, bullet)?;
        Ok(self)
    }

    pub fn get(&self, u: &str, v: &str) -> Option<i64> {
        self.entries.get(&ordered(u, v)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str, i64)> {
        self.entries
            .iter()
            .map(|((u, v), &b)| (u.as_str(), v.as_str(), b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub(crate) fn map_entries(&self, mut f: impl FnMut(&str, &str, i64) -> i64) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|((u, v), &b)| ((u.clone(), v.clone()), f(u, v, b)))
            .collect();
        RelativePairing { entries }
    }
}

/// A validated collection of orbits, curves and relative pairings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scene {
    orbits: BTreeMap<String, OrbitData>,
    curves: Vec<CurveClass>,
    pairing: RelativePairing,
}

impl Scene {
    pub fn new(
        orbits: Vec<OrbitData>,
        curves: Vec<CurveClass>,
        pairing: RelativePairing,
    ) -> Result<Self, ModelError> {
        let mut orbit_map = BTreeMap::new();
        for o in orbits {
            let id = o.id().to_string();
            if orbit_map.insert(id.clone(), o).is_some() {
                return Err(ModelError::DuplicateId(id));
            }
        }
        let mut seen = BTreeSet::new();
        for c in &curves {
            c.validate()?;
            if !seen.insert(c.id.as_str()) {
                return Err(ModelError::DuplicateId(c.id.clone()));
            }
            for p in &c.punctures {
                let orbit = orbit_map
                    .get(&p.orbit)
                    .ok_or_else(|| ModelError::UnknownOrbit(p.orbit.clone()))?;
                orbit.windings(p.multiplicity)?;
            }
        }
        for (u, v, _) in pairing.iter() {
            for id in [u, v] {
                if !seen.contains(id) {
                    return Err(ModelError::UnknownCurve(id.to_string()));
                }
            }
        }
        Ok(Scene {
            orbits: orbit_map,
            curves,
            pairing,
        })
    }

    pub fn orbits(&self) -> impl Iterator<Item = &OrbitData> {
        self.orbits.values()
    }

    pub fn orbit(&self, id: &str) -> Result<&OrbitData, ModelError> {
        self.orbits
            .get(id)
            .ok_or_else(|| ModelError::UnknownOrbit(id.to_string()))
    }

    pub fn windings(&self, orbit: &str, k: u32) -> Result<CoverWindings, ModelError> {
        self.orbit(orbit)?.windings(k)
    }

    pub fn curves(&self) -> &[CurveClass] {
        &self.curves
    }

    pub fn curve(&self, id: &str) -> Result<&CurveClass, ModelError> {
        self.curves
            .iter()
            .find(|c| c.id == id)
            .ok_or_else(|| ModelError::UnknownCurve(id.to_string()))
    }

    pub fn pairing(&self) -> &RelativePairing {
        &self.pairing
    }

    pub fn bullet(&self, u: &str, v: &str) -> Result<i64, ModelError> {
        self.curve(u)?;
        self.curve(v)?;
        self.pairing
            .get(u, v)
            .ok_or_else(|| ModelError::MissingPairing(u.to_string(), v.to_string()))
    }

    pub(crate) fn from_parts_unchecked(
        orbits: BTreeMap<String, OrbitData>,
        curves: Vec<CurveClass>,
        pairing: RelativePairing,
    ) -> Self {
        Scene {
            orbits,
            curves,
            pairing,
        }
    }

    pub(crate) fn orbit_map(&self) -> &BTreeMap<String, OrbitData> {
        &self.orbits
    }

    pub fn from_json(text: &str) -> Result<Self, ModelError> {
        let file: SceneFile =
            serde_json::from_str(text).map_err(|e| ModelError::Parse(e.to_string()))?;
        file.try_into()
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, ModelError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| ModelError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SceneFile::from(self)).expect("scene serializes")
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OrbitFile {
    id: String,
    covers: BTreeMap<String, CoverWindings>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PairingFile {
    u: String,
    v: String,
    bullet: i64,
}

/// On-disk layout of a scene file.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SceneFile {
    #[serde(default)]
    orbits: Vec<OrbitFile>,
    #[serde(default)]
    curves: Vec<CurveClass>,
    #[serde(default)]
    pairing: Vec<PairingFile>,
}

impl TryFrom<SceneFile> for Scene {
    type Error = ModelError;

    fn try_from(file: SceneFile) -> Result<Self, Self::Error> {
        let mut orbits = Vec::with_capacity(file.orbits.len());
        for o in file.orbits {
            let mut covers = Vec::with_capacity(o.covers.len());
            for (key, w) in o.covers {
                let k: u32 = key.parse().map_err(|_| {
                    ModelError::Parse(format!("orbit {}: cover key {key:?} is not a positive integer", o.id))
                })?;
                covers.push((k, w));
            }
            orbits.push(OrbitData::new(o.id, covers)?);
        }
        let mut pairing = RelativePairing::new();
        for p in file.pairing {
            pairing.insert(&p.u, &p.v, p.bullet)?;
        }
        Scene::new(orbits, file.curves, pairing)
    }
}

impl From<&Scene> for SceneFile {
    fn from(scene: &Scene) -> Self {
        SceneFile {
            orbits: scene
                .orbits()
                .map(|o| OrbitFile {
                    id: o.id().to_string(),
                    covers: o.covers().iter().map(|(k, w)| (k.to_string(), *w)).collect(),
                })
                .collect(),
            curves: scene.curves.clone(),
            pairing: scene
                .pairing
                .iter()
                .map(|(u, v, bullet)| PairingFile {
                    u: u.to_string(),
                    v: v.to_string(),
                    bullet,
                })
                .collect(),
        }
    }
}
