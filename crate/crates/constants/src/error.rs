use thiserror::Error;
use yamabe_numerics::quad::QuadError;

#[derive(Debug, Error)]
pub enum ConstantsError {
    #[error("dimension m = {m} out of range (need m >= {min})")]
    DimensionOutOfRange { m: i64, min: i64 },
    #[error("beta integral diverges for p = {p}, q = {q} (need p - q > 1 and q > -1)")]
    BetaDomain { p: f64, q: f64 },
    #[error("case {tag} is inconsistent with dimension n = {n}")]
    CaseMismatch { tag: &'static str, n: u32 },
    #[error("unknown case tag {0:?}")]
    UnknownTag(String),
    #[error("quadrature oracle failed: {0}")]
    Quadrature(#[from] QuadError),
}
