//! Intersection theory of punctured curves: the winding bounds `Ω`, the
//! `⋆`-pairing, normal Chern numbers, indices, the adjunction defect and the
//! regularity and foliation predicates built from them.
//!
//! Every quantity computed here that the theory declares independent of the
//! trivializations is exactly invariant under
//! [`shift_scene`](crate::model::shift_scene).

mod adjunction;
mod chern;
mod criteria;
mod omega;

pub use adjunction::{
    adjunction_defect, nodal_star_expansion, relative_adjunction_check, NodalExpansion,
    RelativeAdjunction,
};
pub use chern::{
    asymptotic_defect, check_cn_index_relation, check_zero_count, fredholm_index, normal_chern,
    spectral_covering_total, CnIndexRelation, EndWinding, ZeroCount,
};
pub use criteria::{automatic_transversality, foliation_criteria, FoliationReport, TransversalityReport};
pub use omega::{iota_infinity, omega_pair, omega_self, omega_sum, star, OrbitCover};

use thiserror::Error;

use crate::model::{ModelError, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntersectionError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(
        "inconsistent: negative hidden count ({u} ⋆ {v} = {star} is below the geometric count {geometric})"
    )]
    NegativeHiddenCount {
        u: String,
        v: String,
        star: i64,
        geometric: i64,
    },
    #[error("inconsistent scene (parity): adjunction numerator {numerator} for {curve} is odd")]
    AdjunctionParity { curve: String, numerator: i64 },
    #[error(
        "inconsistent scene (positivity): adjunction numerator {numerator} for {curve} is negative, \
         data cannot represent a simple curve"
    )]
    AdjunctionPositivity { curve: String, numerator: i64 },
    #[error("curve {0} is not declared simple")]
    NotSimple(String),
    #[error("relation specific to dimension four (curve {curve} has n = {n})")]
    NotDimensionFour { curve: String, n: u32 },
    #[error("winding exceeds a priori bound at end {end} ({sign}): alpha {alpha}, wind {wind}")]
    WindingBound {
        end: usize,
        sign: Sign,
        alpha: i64,
        wind: i64,
    },
    #[error("components do not decompose {total}: {components:?}")]
    NotADecomposition {
        total: String,
        components: [String; 2],
    },
    #[error("{0}")]
    InvalidInput(String),
}

impl IntersectionError {
    /// True when the input is well-formed but cannot come from holomorphic
    /// curves.
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            IntersectionError::NegativeHiddenCount { .. }
                | IntersectionError::AdjunctionParity { .. }
                | IntersectionError::AdjunctionPositivity { .. }
                | IntersectionError::WindingBound { .. }
        )
    }
}
