//! Combinatorial data of punctured curves: orbits and their covers,
//! curves with signed punctures, relative pairings, and the action of
//! trivialization changes on all of them.

mod curve;
mod orbit;
mod scene;
mod shift;

pub use curve::{euler_char, CurveClass, PunctureSpec};
pub use orbit::{cz_index, gcd_cover, parity, sigma_bar, CoverWindings, OrbitData, Sign};
pub use scene::{RelativePairing, Scene};
pub use shift::{shift_scene, TrivializationShift};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("unknown cover: orbit {orbit} has no entry for multiplicity {k}")]
    UnknownCover { orbit: String, k: u32 },
    #[error("unknown orbit {0:?}")]
    UnknownOrbit(String),
    #[error("unknown curve {0:?}")]
    UnknownCurve(String),
    #[error("duplicate id {0:?}")]
    DuplicateId(String),
    #[error("orbit {orbit}: cover {k} listed twice")]
    DuplicateCover { orbit: String, k: u32 },
    #[error("{0}: multiplicities must be positive")]
    ZeroMultiplicity(String),
    #[error(
        "orbit {orbit}, cover {k}: windings ({alpha_minus}, {alpha_plus}) violate \
         alpha_minus <= alpha_plus <= alpha_minus + 1"
    )]
    DegenerateWindings {
        orbit: String,
        k: u32,
        alpha_minus: i64,
        alpha_plus: i64,
    },
    #[error("curve {curve}: ambient_dim_half must be at least 2, got {n}")]
    DimensionTooSmall { curve: String, n: u32 },
    #[error("pairing {{{u}, {v}}} given as both {first} and {second}")]
    AsymmetricPairing {
        u: String,
        v: String,
        first: i64,
        second: i64,
    },
    #[error("no relative intersection number for {{{0}, {1}}}")]
    MissingPairing(String, String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
}
