//! Scalar numerical kernels shared by the whole workspace.
//!
//! Everything downstream leans on the error behaviour of these routines, so
//! they are written here once, with explicit tolerances and no external
//! numerical dependencies:
//!
//! * [`gamma`]: Lanczos gamma/log-gamma and the beta function.
//! * [`quad`]: globally adaptive Gauss-Kronrod (G7K15) integration with
//!   caller-supplied breakpoints, plus a half-line transform.
//! * [`legendre`]: Gauss-Legendre nodes and weights by Newton iteration.
//! * [`sum`]: Neumaier compensated summation.
//! * [`fd`]: central finite-difference stencils for derivative checks.
//! * [`rng`]: a counter-style splitmix64 generator, the single source of
//!   reproducible randomness (one u64 seed, stable stream forever).
//! * [`fit`]: least-squares line fits in linear and log-log coordinates.

pub mod fd;
pub mod fit;
pub mod gamma;
pub mod gegenbauer;
pub mod legendre;
pub mod quad;
pub mod rng;
pub mod sum;
