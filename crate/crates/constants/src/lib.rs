//! Dimensional constants of the perturbed Yamabe energy expansions.
//!
//! Everything n-dependent that the expansion machinery quotes lives here:
//! sphere volumes, the sharp Sobolev constant, the bubble energy c1, the
//! one-dimensional integrals I_p^q, and the reduced-energy coefficients
//! (c2, c3) for each dimensional case. Each value has a closed form and an
//! independent quadrature route; the test suites hold the two together.

mod beta_int;
mod case;
mod dims;
mod error;
mod reduced;
mod spheres;

pub use beta_int::{beta_integral, beta_integral_quad, identity_rows, IdentityRow};
pub use case::ReducedCase;
pub use dims::{sharp_sobolev, DimensionalConstants};
pub use error::ConstantsError;
pub use reduced::{reduced_constants, ReducedConstants};
pub use spheres::{sphere_volume, sphere_volume_quad};
