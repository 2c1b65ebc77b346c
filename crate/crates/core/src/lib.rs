//! Intersection theory of punctured holomorphic curves, computed: indices,
//! winding bounds, the homotopy-invariant pairing, adjunction defects and
//! spectral covering numbers, with exact germ calculations and numerical
//! spectra of asymptotic operators as cross-checks.

pub mod cli;
pub mod closed;
pub mod germs;
pub mod intersection;
pub mod json;
pub mod model;
pub mod spectrum;

/// The guide's chapters, compiled so that their examples run as doctests.
#[cfg(doctest)]
pub mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub mod introduction {}
    #[doc = include_str!("../../../book/src/model.md")]
    pub mod model {}
    #[doc = include_str!("../../../book/src/intersection.md")]
    pub mod intersection {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    pub mod spectrum {}
    #[doc = include_str!("../../../book/src/germs.md")]
    pub mod germs {}
    #[doc = include_str!("../../../book/src/closed.md")]
    pub mod closed {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}
