//! Reduced-energy coefficients (c1, c2, c3) per dimensional case.
//!
//! In each case the perturbed Yamabe energy of a single bubble of scale
//! delta at a point xi expands as
//!
//! ```text
//! J = c1 + rate(eps) * [ c2 * (profile) * h(xi) - c3 * (profile) * (mass or Weyl) ] + h.o.t.
//! ```
//!
//! and (c2, c3) below are the frozen results of matching that expansion
//! term by term against the scale law delta_eps(t) of the case. They are
//! stated as closed formulas in n, not computed from quadrature at runtime;
//! the expansion test bench re-measures them from the energy itself.

use crate::case::ReducedCase;
use crate::error::ConstantsError;
use crate::spheres::sphere_volume;

#[derive(Clone, Copy, Debug)]
pub struct ReducedConstants {
    pub case: ReducedCase,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

/// c1 = K_n^{-n}/n, equivalently [n(n-2)]^{n/2} omega_n / (n 2^n): the
/// energy of one unit bubble.
fn c1(n: u32) -> Result<f64, ConstantsError> {
    let nf = n as f64;
    Ok((nf * (nf - 2.0)).powf(nf / 2.0) * sphere_volume(n as i64)? / (nf * 2f64.powi(n as i32)))
}

/// Mass-branch c2 for n >= 5: half the squared-bubble integral
/// int_{R^n} U^2 = [n(n-2)]^{(n-2)/2} (n-1) omega_n / (2^{n-2}(n-4)),
/// which multiplies eps*h*delta^2 in the energy with a factor 1/2.
fn c2_mass(n: u32) -> Result<f64, ConstantsError> {
    let nf = n as f64;
    Ok((nf * (nf - 2.0)).powf((nf - 2.0) / 2.0) * (nf - 1.0) * sphere_volume(n as i64)?
        / (2f64.powi(n as i32 - 1) * (nf - 4.0)))
}

/// Mass-branch c3 for n >= 5: the Green-function coupling
/// [n(n-2)]^{(n-2)/2} beta_n^2 / 2 multiplying the mass times delta^{n-2}.
fn c3_mass(n: u32) -> Result<f64, ConstantsError> {
    let nf = n as f64;
    let beta_n = (nf - 2.0) * sphere_volume(n as i64 - 1)?;
    Ok((nf * (nf - 2.0)).powf((nf - 2.0) / 2.0) * beta_n * beta_n / 2.0)
}

/// The coefficient triple for the case. All three are strictly positive on
/// the admissible (case, n) combinations.
pub fn reduced_constants(case: ReducedCase) -> Result<ReducedConstants, ConstantsError> {
    let n = case.n();
    let (c2, c3) = match case {
        // n = 4: the energy carries eps*h*delta^2*ln(1/delta) with
        // coefficient 4*omega_3 (half of int U^2 over a ball of radius r0,
        // whose log divergence is 8*omega_3*delta^2*ln(1/delta)), and the
        // mass term 4*beta_4^2*A*delta^2. With delta = e^{-t/eps} the log
        // factor becomes t/eps, so the profile is t*e^{-2t/eps} and the
        // coefficients transfer unchanged.
        ReducedCase::N4 => {
            let omega_3 = sphere_volume(3)?;
            let beta_4 = 2.0 * omega_3;
            (4.0 * omega_3, 4.0 * beta_4 * beta_4)
        }
        ReducedCase::N5OrLcf { n } => (c2_mass(n)?, c3_mass(n)?),
        // n = 6, generic Weyl tensor: the quadratic term is 45*omega_6 and
        // the Weyl coupling (3/4)*omega_6 multiplies |W(xi)|^2 delta^4,
        // which the log-corrected scale law turns into the t^4 profile.
        ReducedCase::N6NonLcf => {
            let omega_6 = sphere_volume(6)?;
            (45.0 * omega_6, 0.75 * omega_6)
        }
        // n >= 7, generic Weyl tensor: same c2 as the mass branch; the
        // Weyl coupling carries the extra 1/(48(n-6)) from the curvature
        // expansion of the metric volume element.
        ReducedCase::N7PlusNonLcf { n } => {
            let nf = n as f64;
            let c3 = (nf * (nf - 2.0)).powf((nf - 2.0) / 2.0) * sphere_volume(n as i64)?
                * (nf - 2.0)
                / (2f64.powi(n as i32 - 1) * (nf - 4.0) * 48.0 * (nf - 6.0));
            (c2_mass(n)?, c3)
        }
    };
    Ok(ReducedConstants {
        case,
        c1: c1(n)?,
        c2,
        c3,
    })
}
