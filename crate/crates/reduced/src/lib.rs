//! Reduced-energy functionals of the perturbed Yamabe problem and the
//! machinery for locating and classifying their critical points.
//!
//! The profile energy `tilde_e` measures a single bubble of scale `t`
//! centred at `xi`; its branch structure (exponential in n = 4, power
//! laws otherwise, mass versus Weyl competitor) follows the case tags of
//! `yamabe_constants::ReducedCase`. Maximising in `t` first gives the
//! scale map `t_star` and the angular functional `e_reduced`, whose
//! maxima over the manifold are the concentration points. Multi-bubble
//! analogues (`tilde_e_k`, `e_k`, `interaction_matrix`, `optimal_t`)
//! couple bubbles through the Green's function; `maximize` and
//! `diagnose` search for critical tuples and classify them by the
//! spectrum of a finite-difference Hessian.

mod context;
mod multi;
mod optimize;
mod single;

pub use context::ReducedEnergyContext;
pub use multi::{
    e_k, interaction_matrix, optimal_t, tilde_e_k, tilde_e_k_quadratic, InteractionMatrix,
    OptimalScales,
};
pub use optimize::{
    diagnose, maximize, CriticalPointReport, DegreeSign, SearchBox, SearchOutcome,
};
pub use single::{e_reduced, t_star, tilde_e, tilde_e_n4_pair};

use yamabe_constants::{ConstantsError, ReducedCase};
use yamabe_manifold::ManifoldError;

#[derive(Debug, thiserror::Error)]
pub enum ReducedError {
    #[error("case {0} needs a positive epsilon in the context")]
    MissingEpsilon(ReducedCase),
    #[error("epsilon must be positive and finite, got {0}")]
    BadEpsilon(f64),
    #[error("scale t must be positive, got {0}")]
    NonPositiveScale(f64),
    #[error("h({0:?}) = {1} is not positive; the optimal scale is undefined there")]
    NonPositiveH(Vec<f64>, f64),
    #[error("empty configuration")]
    EmptyTuple,
    #[error("{t_len} scales against {xi_len} points")]
    LengthMismatch { t_len: usize, xi_len: usize },
    #[error("points {i} and {j} are {dist:.3e} apart; the interaction matrix needs distinct points")]
    FatDiagonal { i: usize, j: usize, dist: f64 },
    #[error("interaction matrix condition number {cond:.3e} exceeds 1e12")]
    IllConditioned { cond: f64 },
    #[error("{op} is not defined for case {case}")]
    UnsupportedCase { op: &'static str, case: ReducedCase },
    #[error("search box needs 0 < t_lo < t_hi, got [{t_lo}, {t_hi}]")]
    BadSearchBox { t_lo: f64, t_hi: f64 },
    #[error("restart count must be positive")]
    NoRestarts,
    #[error(transparent)]
    Manifold(#[from] ManifoldError),
    #[error(transparent)]
    Constants(#[from] ConstantsError),
}
