//! Numerical spectra of model asymptotic operators `A = -J₀ d/dt - S(t)` on
//! the circle, winding numbers of their eigenfunctions, and exponential decay
//! fits for trajectories of linear ODEs.

mod decay;
mod loops;
mod operator;
mod winding;

pub use decay::{fit_decay, integrate_linear_ode, DecayFit, Trajectory};
pub use loops::{cover_operator, LoopMode, SpectralLoop};
pub use operator::{
    alphas_from_spectrum, alphas_from_spectrum_with, assemble, check_winding_structure, eigen_window,
    AlphaReport, EigenPair, OperatorDiscretization, CLUSTER_TOL, DEFAULT_CUTOFF, NONDEGENERACY_TOL,
};
pub use winding::{winding, winding_estimate};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectrumError {
    #[error("asymmetric mode: {part} coefficient of frequency {n} is not symmetric")]
    AsymmetricMode { n: u32, part: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cutoff below loop bandwidth: M = {cutoff} needs at least bandwidth {bandwidth} + 4")]
    CutoffBelowBandwidth { cutoff: usize, bandwidth: usize },
    #[error("discretized operator is not symmetric (deviation {0:e})")]
    NotSymmetric(f64),
    #[error("empty window [{lo}, {hi}]")]
    EmptyWindow { lo: f64, hi: f64 },
    #[error("window exceeds resolution: [{lo}, {hi}] is not inside ±{radius}")]
    WindowExceedsResolution { lo: f64, hi: f64, radius: f64 },
    #[error("eigenfunction not resolved: samples come within {ratio:e} of zero relative to their maximum")]
    EigenfunctionNotResolved { ratio: f64 },
    #[error("grid too coarse: accumulated winding {0} is not near an integer")]
    GridTooCoarse(f64),
    #[error("degenerate orbit: eigenvalue {0:e} is numerically zero")]
    DegenerateOrbit(f64),
    #[error("no {0} eigenvalue in the resolved band")]
    MissingSign(&'static str),
    #[error("winding structure violated: {0}")]
    WindingStructure(String),
    #[error("trajectory unusable: {0}")]
    TrajectoryUnusable(String),
}
