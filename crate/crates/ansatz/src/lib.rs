//! Approximate solutions on a model manifold: the single-bubble field w,
//! its multi-bubble sum, and the kernel fields z_0..z_n.
//!
//! Every field here factors through a Green's function times a radial
//! profile of the conformal distance to the concentration point, so the
//! evaluations are pointwise and allocation-free apart from chart lookups.

mod bubble_field;
mod cutoff;
mod kernel_field;
mod params;

pub use bubble_field::{w, w_hat, w_multi};
pub use cutoff::{cutoff_chi, cutoff_chi_cubic, cutoff_chi_cubic_deriv, cutoff_chi_deriv};
pub use kernel_field::{z, z_with_cutoff};
pub use params::{AnsatzParams, Configuration};

use thiserror::Error;
use yamabe_bubble::BubbleError;
use yamabe_manifold::ManifoldError;

#[derive(Debug, Error)]
pub enum AnsatzError {
    #[error("configuration needs at least one bubble")]
    EmptyConfiguration,
    #[error("configuration has {t_len} scales but {xi_len} points")]
    LengthMismatch { t_len: usize, xi_len: usize },
    #[error("bubble scale must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("support radius r0 = {r0} exceeds a quarter of the minimal separation {min_sep}; bubble supports overlap")]
    SeparationTooSmall { r0: f64, min_sep: f64 },
    #[error("kernel index {i} out of range for dimension {n}")]
    KernelIndex { i: usize, n: u32 },
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error(transparent)]
    Bubble(#[from] BubbleError),
}

/// beta_n = (n-2) omega_{n-1}, the normalizer that makes
/// beta_n^{-1} d^{2-n} the flat Green's function.
pub(crate) fn beta_n(n: u32) -> f64 {
    (n as f64 - 2.0)
        * yamabe_constants::sphere_volume(n as i64 - 1).expect("n >= 4 enforced at construction")
}
