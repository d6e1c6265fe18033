//! Evaluable model manifolds: the round sphere, fully instantiated, and
//! sphere-backed synthetic models whose geometric fields (Green's
//! function, mass, Weyl norm, perturbation) can be overridden for
//! experiments.
//!
//! Points are unit vectors in R^{n+1} throughout. Two metrics appear: the
//! background g and, for each pole xi, the conformal rescaling
//! g_xi = Lambda_xi^{2*-2} g. On the sphere g_xi is flat in the
//! stereographic chart centered at xi, which is what every chart-based
//! routine here exploits.

mod mass;
mod model;
mod scale;
mod sphere;
mod synthetic;

pub use mass::{extract_mass, mass_radii, MassEstimate};
pub use model::{ManifoldModel, OnePointField, TwoPointField};
pub use scale::{ell, ell_inverse, scale_delta, ScaleLaw, ELL_DELTA_SUP, ELL_EPS_SUP};
pub use sphere::{
    conformal_eigenvalue, green_harmonic_pairing, harmonic_pairing_prediction,
    polar_volume_quadrature, round_sphere, zonal_values,
};
pub use synthetic::{synthetic_from_config, Field, GreenField, SyntheticModel};

use thiserror::Error;

/// Volume of S^m for m >= 1; every caller in this crate has already
/// bounded the dimension below.
pub(crate) fn omega(m: u32) -> f64 {
    yamabe_constants::sphere_volume(m as i64).expect("dimension bounded by caller")
}

#[derive(Debug, Error)]
pub enum ManifoldError {
    #[error("dimension n = {0} too small (need n >= 4)")]
    DimensionTooSmall(u32),
    #[error("working radius r0 = {0} outside (0, pi)")]
    BadRadius(f64),
    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },
    #[error("epsilon = {epsilon} outside the branch domain (sup {sup})")]
    EpsilonOutOfRange { epsilon: f64, sup: f64 },
    #[error("scale delta = {delta} outside the ell branch domain (0, {sup})")]
    ScaleOutOfRange { delta: f64, sup: f64 },
    #[error("ell inversion did not converge after {0} iterations")]
    ConvergenceFailure(u32),
    #[error("green asymmetric: g(x,y) = {forward}, g(y,x) = {backward}")]
    AsymmetricGreen { forward: f64, backward: f64 },
    #[error("green must be positive away from the diagonal, got {0}")]
    NonPositiveGreen(f64),
    #[error("lcf model must have identically zero weyl_norm")]
    LcfWeylConflict,
    #[error("mass extraction needs n = 4, 5 or an lcf model, got n = {0} non-lcf")]
    UnsupportedMassBranch(u32),
    #[error("mass extraction needs at least two radii, got {0}")]
    TooFewRadii(usize),
    #[error("radii must be strictly decreasing within (0, r0 = {r0}); offending value {value}")]
    BadRadii { value: f64, r0: f64 },
    #[error("point is outside the chart of this pole (antipode)")]
    ChartDomain,
    #[error("point has ambient dimension {got}, model needs {want}")]
    PointDimension { got: usize, want: usize },
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
    #[error(transparent)]
    Quadrature(#[from] yamabe_numerics::quad::QuadError),
}
