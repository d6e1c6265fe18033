//! The concentration-scale laws delta_eps(t), one per dimensional case,
//! and the function ell(delta) = -delta^2 ln(delta) whose inverse drives
//! the n = 6 non-lcf branch.

use yamabe_constants::ReducedCase;

use crate::ManifoldError;

/// Right end of ell's domain: e^{-1/2}, where ell has its maximum.
pub const ELL_DELTA_SUP: f64 = 0.6065306597126334;

/// Supremum of ell's range on that domain: e^{-1}/2.
pub const ELL_EPS_SUP: f64 = 0.18393972058572117;

/// A concentration scale request: the case fixes which law applies.
#[derive(Clone, Copy, Debug)]
pub struct ScaleLaw {
    pub case: ReducedCase,
    pub epsilon: f64,
    pub t: f64,
}

/// ell(delta) = -delta^2 ln(delta), monotone increasing on
/// (0, e^{-1/2}) with range (0, e^{-1}/2).
pub fn ell(delta: f64) -> Result<f64, ManifoldError> {
    if delta <= 0.0 || delta >= ELL_DELTA_SUP {
        return Err(ManifoldError::ScaleOutOfRange {
            delta,
            sup: ELL_DELTA_SUP,
        });
    }
    Ok(-delta * delta * delta.ln())
}

/// Inverse of `ell` by bracketed Newton.
///
/// Initial guess sqrt(eps / ln(1/eps)) clamped into the open domain; the
/// bracket [1e-12, e^{-1/2} - 1e-12] absorbs any overshooting step, and
/// monotonicity of ell keeps the bracket valid.
pub fn ell_inverse(eps: f64) -> Result<f64, ManifoldError> {
    if eps <= 0.0 || eps >= ELL_EPS_SUP {
        return Err(ManifoldError::EpsilonOutOfRange {
            epsilon: eps,
            sup: ELL_EPS_SUP,
        });
    }
    let mut lo = 1e-12;
    let mut hi = ELL_DELTA_SUP - 1e-12;
    let mut delta = (eps / (1.0 / eps).ln()).sqrt().clamp(lo, hi);
    for _ in 0..100 {
        let f = -delta * delta * delta.ln() - eps;
        if f.abs() <= 1e-13 * eps {
            return Ok(delta);
        }
        if f < 0.0 {
            lo = delta;
        } else {
            hi = delta;
        }
        let fp = -delta * (2.0 * delta.ln() + 1.0);
        let mut next = delta - f / fp;
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        if next == delta {
            break;
        }
        delta = next;
    }
    let f = -delta * delta * delta.ln() - eps;
    if f.abs() <= 1e-12 * eps {
        Ok(delta)
    } else {
        Err(ManifoldError::ConvergenceFailure(100))
    }
}

/// delta_eps(t) for the four case branches:
///
/// ```text
/// n = 4:              e^{-t/eps}
/// n = 5 or lcf:       t eps^{1/(n-4)}
/// n = 6 non-lcf:      t ell^{-1}(eps),  eps < e^{-1}/2
/// n >= 7 non-lcf:     t sqrt(eps)
/// ```
pub fn scale_delta(s: ScaleLaw) -> Result<f64, ManifoldError> {
    if s.epsilon <= 0.0 {
        return Err(ManifoldError::NonPositive {
            name: "epsilon",
            value: s.epsilon,
        });
    }
    if s.t <= 0.0 {
        return Err(ManifoldError::NonPositive {
            name: "t",
            value: s.t,
        });
    }
    match s.case {
        ReducedCase::N4 => Ok((-s.t / s.epsilon).exp()),
        ReducedCase::N5OrLcf { n } => Ok(s.t * s.epsilon.powf(1.0 / (n as f64 - 4.0))),
        ReducedCase::N6NonLcf => {
            let delta = s.t * ell_inverse(s.epsilon)?;
            if delta >= ELL_DELTA_SUP {
                return Err(ManifoldError::ScaleOutOfRange {
                    delta,
                    sup: ELL_DELTA_SUP,
                });
            }
            Ok(delta)
        }
        ReducedCase::N7PlusNonLcf { .. } => Ok(s.t * s.epsilon.sqrt()),
    }
}
