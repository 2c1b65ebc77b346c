use serde::{Deserialize, Serialize};

use super::orbit::Sign;
use super::ModelError;

/// One puncture: its sign and the cover of a simple orbit it is asymptotic to.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PunctureSpec {
    pub sign: Sign,
    pub orbit: String,
    pub multiplicity: u32,
}

impl PunctureSpec {
    pub fn new(sign: Sign, orbit: impl Into<String>, multiplicity: u32) -> Self {
        PunctureSpec {
            sign,
            orbit: orbit.into(),
            multiplicity,
        }
    }

    pub fn positive(orbit: impl Into<String>, multiplicity: u32) -> Self {
        Self::new(Sign::Plus, orbit, multiplicity)
    }

    pub fn negative(orbit: impl Into<String>, multiplicity: u32) -> Self {
        Self::new(Sign::Minus, orbit, multiplicity)
    }
}

fn default_dim_half() -> u32 {
    2
}

fn default_simple() -> bool {
    true
}

/// Topological data of an asymptotically cylindrical curve.
///
/// `rel_c1` is the relative first Chern number of the pulled-back tangent
/// bundle in the baseline trivializations. `simple` is the user's
/// declaration that the curve is not multiply covered; it gates the
/// adjunction bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveClass {
    pub id: String,
    pub genus: u32,
    #[serde(default)]
    pub punctures: Vec<PunctureSpec>,
    pub rel_c1: i64,
    #[serde(default = "default_dim_half")]
    pub ambient_dim_half: u32,
    #[serde(default = "default_simple")]
    pub simple: bool,
}

impl CurveClass {
    pub fn new(id: impl Into<String>, genus: u32, rel_c1: i64, punctures: Vec<PunctureSpec>) -> Self {
        CurveClass {
            id: id.into(),
            genus,
            punctures,
            rel_c1,
            ambient_dim_half: 2,
            simple: true,
        }
    }

    pub fn with_dim_half(mut self, n: u32) -> Self {
        self.ambient_dim_half = n;
        self
    }

    pub fn not_simple(mut self) -> Self {
        self.simple = false;
        self
    }

    pub fn punctures_with(&self, sign: Sign) -> impl Iterator<Item = &PunctureSpec> {
        self.punctures.iter().filter(move |p| p.sign == sign)
    }

    pub fn is_closed(&self) -> bool {
        self.punctures.is_empty()
    }

    pub(crate) fn validate(&self) -> Result<(), ModelError> {
        if self.ambient_dim_half < 2 {
            return Err(ModelError::DimensionTooSmall {
                curve: self.id.clone(),
                n: self.ambient_dim_half,
            });
        }
        if self.punctures.iter().any(|p| p.multiplicity == 0) {
            return Err(ModelError::ZeroMultiplicity(self.id.clone()));
        }
        Ok(())
    }
}

/// Euler characteristic `2 - 2g - #punctures` of the punctured domain.
pub fn euler_char(curve: &CurveClass) -> i64 {
    2 - 2 * i64::from(curve.genus) - curve.punctures.len() as i64
}
