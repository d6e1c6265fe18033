//! The Euclidean bubble family and the kernel of its linearization.
//!
//! The bubble U_delta is the radial extremal of the Sobolev quotient; the
//! kernel elements V_0, ..., V_n span the tangent directions of the family
//! (scaling and translations). They are closed-form profiles, so every
//! derivative identity here is checked against finite differences rather
//! than solved for.
//!
//! Sign convention: the Laplacian is the geometer's positive one,
//! Delta = -div grad, throughout the workspace.

mod kernel;
mod profile;

pub use kernel::{
    kernel_grad_cross, kernel_grad_norm_sq, kernel_grad_norm_sq_quad, kernel_value,
    linearized_residual, KernelElement,
};
pub use profile::{bubble_pde_residual, bubble_value, radial_integral, Bubble};

use thiserror::Error;
use yamabe_numerics::quad::QuadError;

/// Step for first-derivative five-point stencils; balances truncation
/// against the eps/h roundoff floor for these profiles.
pub const H_FD: f64 = 1e-4;

/// Step for second derivatives. The roundoff floor of a second-difference
/// scales as eps/h^2, so the first-derivative step would leave ~5e-7 of
/// noise; 1e-3 balances that floor against the h^4 truncation term.
pub const H_FD2: f64 = 1e-3;

#[derive(Debug, Error)]
pub enum BubbleError {
    #[error("dimension n = {0} too small (need n >= 3)")]
    DimensionTooSmall(u32),
    #[error("bubble scale must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("kernel index {i} out of range for dimension {n}")]
    IndexOutOfRange { i: usize, n: u32 },
    #[error("sample r = {0} too close to the origin for the FD stencil")]
    SampleTooSmall(f64),
    #[error("point dimension {got} does not match kernel dimension {want}")]
    PointDimension { got: usize, want: usize },
    #[error("closed form {closed} and quadrature {quad} disagree beyond 1e-8")]
    RouteMismatch { closed: f64, quad: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadError),
    #[error(transparent)]
    Constants(#[from] yamabe_constants::ConstantsError),
}
