//! Local intersection theory of polynomial germs `(ℂ, 0) → (ℂ², 0)` with
//! Gaussian-rational coefficients: exact intersection and singularity
//! indices from resultants, normal-form data, and floating-point
//! perturbation oracles that count the same numbers a different way.

mod gauss;
mod germ;
mod oracle;
mod poly;
mod resultant;

pub use gauss::{ExactDiv, GaussInt, GaussRat, Ring};
pub use germ::{
    branched_cover, critical_order, delta_from_normal_form, delta_local, local_intersection, normal_form, Germ,
    GermNormalForm, Tangent,
};
pub use oracle::{
    double_point_radius, intersection_radius, numeric_double_point_oracle, numeric_intersection_oracle, poly_roots,
    BOUNDARY_BAND, DEFAULT_EPSILON, DEFAULT_RADIUS, MAX_REDRAWS, MAX_SHRINKS,
};
pub use poly::Poly;
pub use resultant::{bareiss_det, resultant, sylvester};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GermError {
    #[error("constant germ")]
    ConstantGerm,
    #[error("germ does not vanish at 0")]
    NotAtOrigin,
    #[error("identical images / common branch")]
    IdenticalImages,
    #[error("germ domain too large, rescale input")]
    DomainTooLarge,
    #[error("not simple: the germ is multiply covered")]
    NotSimple,
    #[error("non-isolated double points")]
    NonIsolatedDoublePoints,
    #[error("double point resultant has odd order {0}")]
    OddDoublePointCount(u32),
    #[error("normal form needs a coordinate that is a single monomial of the critical order")]
    NoMonomialCoordinate,
    #[error("radius on a root, retry (root at |z| = {modulus}, radius {radius})")]
    RadiusOnRoot { radius: f64, modulus: f64 },
    #[error("radius too large: unperturbed resultant has a root at |z| = {root}, radius {radius}")]
    RadiusTooLarge { radius: f64, root: f64 },
    #[error("oracle failed: {0}")]
    OracleFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
