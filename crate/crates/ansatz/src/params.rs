//! Parameter bundles for one bubble and for multi-bubble configurations.

use yamabe_constants::ReducedCase;
use yamabe_manifold::{scale_delta, ManifoldModel, ScaleLaw};

use crate::AnsatzError;

/// (epsilon, t, xi) for a single bubble. The concentration scale delta is
/// fixed at construction, so holding a value of this type certifies that
/// the scale law accepts (case, epsilon, t).
#[derive(Clone, Debug)]
pub struct AnsatzParams {
    pub case: ReducedCase,
    pub epsilon: f64,
    pub t: f64,
    pub xi: Vec<f64>,
    delta: f64,
}

impl AnsatzParams {
    pub fn new(case: ReducedCase, epsilon: f64, t: f64, xi: Vec<f64>) -> Result<Self, AnsatzError> {
        let delta = scale_delta(ScaleLaw { case, epsilon, t })?;
        Ok(Self {
            case,
            epsilon,
            t,
            xi,
            delta,
        })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }
}

/// k bubbles with separation bookkeeping. Kept off the fat diagonal: the
/// minimal pairwise distance must leave room for disjoint supports,
/// r0 <= min_sep/4.
#[derive(Clone, Debug)]
pub struct Configuration {
    t: Vec<f64>,
    xi: Vec<Vec<f64>>,
    min_sep: f64,
}

impl Configuration {
    pub fn new(m: &ManifoldModel, t: &[f64], xi: &[Vec<f64>]) -> Result<Self, AnsatzError> {
        if t.is_empty() {
            return Err(AnsatzError::EmptyConfiguration);
        }
        if t.len() != xi.len() {
            return Err(AnsatzError::LengthMismatch {
                t_len: t.len(),
                xi_len: xi.len(),
            });
        }
        for &ti in t {
            if !(ti > 0.0) {
                return Err(AnsatzError::NonPositiveScale(ti));
            }
        }
        for p in xi {
            m.check_point(p)?;
        }
        let mut min_sep = f64::INFINITY;
        for i in 0..xi.len() {
            for j in i + 1..xi.len() {
                min_sep = min_sep.min(m.dist(&xi[i], &xi[j]));
            }
        }
        if m.r0 > min_sep / 4.0 {
            return Err(AnsatzError::SeparationTooSmall {
                r0: m.r0,
                min_sep,
            });
        }
        Ok(Self {
            t: t.to_vec(),
            xi: xi.to_vec(),
            min_sep,
        })
    }

    pub fn k(&self) -> usize {
        self.t.len()
    }

    pub fn t(&self) -> &[f64] {
        &self.t
    }

    pub fn xi(&self) -> &[Vec<f64>] {
        &self.xi
    }

    /// Minimal pairwise distance; infinite for a single bubble.
    pub fn min_sep(&self) -> f64 {
        self.min_sep
    }
}
