//! Quadrature and spectral verification of the bubble-ansatz energy
//! expansion on the round sphere.
//!
//! The pieces: a zonal spectral toolbox (`ZonalField`, `Projector`),
//! closed-form polar profiles of the ansatz fields (`BubbleProfile`,
//! `KernelRadial`), the perturbed Yamabe energy `functional_j`, and the
//! derived checks: `expansion_check` (measured energy coefficient against
//! the reduced functional), `residual_norm` (Sobolev norm of the ansatz
//! defect through the exact spectral inverse), `interaction_energy`
//! (two-bubble pairing against the Green-function prediction),
//! `gram_matrix` (kernel elements in the conformal inner product), and
//! `dwdt_check` (scale derivative against the radial kernel element).
//!
//! Everything runs on S^n, where the Green's function, the spectrum of
//! the conformal Laplacian, and the bubble transplant are exact, so every
//! measured rate is attributable to the ansatz rather than to background
//! numerics.

use thiserror::Error;

use yamabe_constants::{ConstantsError, ReducedCase};
use yamabe_manifold::ManifoldError;
use yamabe_numerics::fit::FitError;
use yamabe_numerics::quad::QuadError;
use yamabe_reduced::ReducedError;

mod check;
mod functional;
mod gram;
mod interaction;
mod profile;
mod residual;
mod sweep;
mod zonal;

pub use check::{dwdt_check, expansion_check, DwdtReport, ExpansionCheck};
pub use functional::{functional_j, functional_j_pair, functional_j_zonal, JEstimate};
pub use gram::gram_matrix;
pub use interaction::{interaction_energy, interaction_prediction};
pub use profile::{dwdt_prefactor, log_delta_rate, BubbleProfile, Cutoff, KernelRadial};
pub use residual::{residual_norm, ResidualReport};
pub use sweep::{geometric_grid, slope_fit, sweep_map, SweepResult};
pub use zonal::{basis_norm_sq, laplace_eigenvalue, Projector, ZonalField};

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("dimension {0} is below the supported range (n >= 4)")]
    DimensionTooSmall(u32),
    #[error("{name} must be positive and finite, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("need at least {need} sweep points, got {got}")]
    TooFewPoints { need: usize, got: usize },
    #[error("sweep abscissae must be strictly decreasing")]
    NotDecreasing,
    #[error("node count {got} too small, need at least {need}")]
    TooFewNodes { need: usize, got: usize },
    #[error("field has no spectral coefficients; call analyze first")]
    MissingCoefficients,
    #[error("{what} moved by {achieved:.3e} under refinement, budget {requested:.3e}")]
    Accuracy {
        what: &'static str,
        achieved: f64,
        requested: f64,
    },
    #[error("spectral truncation at l = {l_max} not converged, tail ratio {tail:.3e}")]
    Truncation { l_max: usize, tail: f64 },
    #[error("{op} is not defined on the {case} branch")]
    Unsupported {
        op: &'static str,
        case: ReducedCase,
    },
    #[error("{op} needs a round-sphere model")]
    NotASphere { op: &'static str },
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Fit(#[from] FitError),
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error(transparent)]
    Constants(#[from] ConstantsError),
    #[error(transparent)]
    Reduced(#[from] ReducedError),
}
