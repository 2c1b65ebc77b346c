use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::ModelError;

/// Which end of a curve a puncture sits on, or equivalently which extremal
/// winding number is being asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn opposite(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` for `Plus`, `-1` for `Minus`.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Extremal winding numbers of one cover of an orbit, measured in the
/// trivialization pulled back from the simple orbit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoverWindings {
    pub alpha_minus: i64,
    pub alpha_plus: i64,
}

impl CoverWindings {
    pub fn new(alpha_minus: i64, alpha_plus: i64) -> Result<Self, ModelError> {
        let w = CoverWindings {
            alpha_minus,
            alpha_plus,
        };
        w.validate("<anonymous>", 1)?;
        Ok(w)
    }

    /// Windings of an orbit whose Conley-Zehnder index is `cz`.
    pub fn from_cz(cz: i64) -> Self {
        let alpha_minus = cz.div_euclid(2);
        CoverWindings {
            alpha_minus,
            alpha_plus: alpha_minus + cz.rem_euclid(2),
        }
    }

    pub fn alpha(&self, sign: Sign) -> i64 {
        match sign {
            Sign::Plus => self.alpha_plus,
            Sign::Minus => self.alpha_minus,
        }
    }

    pub fn parity(&self) -> i64 {
        self.alpha_plus - self.alpha_minus
    }

    pub fn cz(&self) -> i64 {
        let p = self.parity();
        let cz = 2 * self.alpha_minus + p;
        debug_assert_eq!(cz, 2 * self.alpha_plus - p);
        cz
    }

    pub(crate) fn validate(&self, orbit: &str, k: u32) -> Result<(), ModelError> {
        if self.alpha_minus <= self.alpha_plus && self.alpha_plus <= self.alpha_minus + 1 {
            Ok(())
        } else {
            Err(ModelError::DegenerateWindings {
                orbit: orbit.to_string(),
                k,
                alpha_minus: self.alpha_minus,
                alpha_plus: self.alpha_plus,
            })
        }
    }
}

/// A simply covered nondegenerate orbit together with the extremal windings
/// of every cover the scene refers to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitData {
    id: String,
    covers: BTreeMap<u32, CoverWindings>,
}

impl OrbitData {
    pub fn new(
        id: impl Into<String>,
        covers: impl IntoIterator<Item = (u32, CoverWindings)>,
    ) -> Result<Self, ModelError> {
        let id = id.into();
        let mut table = BTreeMap::new();
        for (k, w) in covers {
            if k == 0 {
                return Err(ModelError::ZeroMultiplicity(id));
            }
            w.validate(&id, k)?;
            if table.insert(k, w).is_some() {
                return Err(ModelError::DuplicateCover { orbit: id, k });
            }
        }
        Ok(OrbitData { id, covers: table })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn covers(&self) -> &BTreeMap<u32, CoverWindings> {
        &self.covers
    }

    pub fn windings(&self, k: u32) -> Result<CoverWindings, ModelError> {
        self.covers
            .get(&k)
            .copied()
            .ok_or_else(|| ModelError::UnknownCover {
                orbit: self.id.clone(),
                k,
            })
    }

    /// Adds `m` twists to the trivialization of the simple orbit. Windings of
    /// the `k`-fold cover drop by `k * m`.
    pub(crate) fn twisted(&self, m: i64) -> OrbitData {
        let covers = self
            .covers
            .iter()
            .map(|(&k, w)| {
                let d = i64::from(k) * m;
                (
                    k,
                    CoverWindings {
                        alpha_minus: w.alpha_minus - d,
                        alpha_plus: w.alpha_plus - d,
                    },
                )
            })
            .collect();
        OrbitData {
            id: self.id.clone(),
            covers,
        }
    }
}

/// Parity `p = alpha_plus - alpha_minus` of the `k`-fold cover.
pub fn parity(orbit: &OrbitData, k: u32) -> Result<i64, ModelError> {
    Ok(orbit.windings(k)?.parity())
}

/// Conley-Zehnder index of the `k`-fold cover, `2 alpha_minus + p`.
pub fn cz_index(orbit: &OrbitData, k: u32) -> Result<i64, ModelError> {
    Ok(orbit.windings(k)?.cz())
}

/// `gcd(k, 0)` is `k`.
pub fn gcd_cover(k: u32, winding: i64) -> u32 {
    let g = i64::from(k).gcd(&winding);
    if g == 0 {
        k
    } else {
        g as u32
    }
}

/// Spectral covering number: covering multiplicity `gcd(k, alpha)` of the
/// extremal eigenfunction selected by `sign`.
pub fn sigma_bar(orbit: &OrbitData, k: u32, sign: Sign) -> Result<u32, ModelError> {
    let w = orbit.windings(k)?;
    Ok(gcd_cover(k, w.alpha(sign)))
}
