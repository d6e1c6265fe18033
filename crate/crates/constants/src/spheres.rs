//! Volumes of unit spheres.

use yamabe_numerics::gamma::gamma;
use yamabe_numerics::quad::integrate;

use crate::error::ConstantsError;

/// Volume (surface measure) of the unit m-sphere in R^{m+1}:
/// omega_m = 2 pi^{(m+1)/2} / Gamma((m+1)/2).
pub fn sphere_volume(m: i64) -> Result<f64, ConstantsError> {
    if m < 1 {
        return Err(ConstantsError::DimensionOutOfRange { m, min: 1 });
    }
    let half = (m as f64 + 1.0) / 2.0;
    Ok(2.0 * std::f64::consts::PI.powf(half) / gamma(half))
}

/// Quadrature route for the same quantity, via the slice recursion
/// omega_m = omega_{m-1} * int_0^pi sin^{m-1} theta dtheta, omega_1 = 2 pi.
///
/// Independent of the Gamma function, which is the point.
pub fn sphere_volume_quad(m: i64) -> Result<f64, ConstantsError> {
    if m < 1 {
        return Err(ConstantsError::DimensionOutOfRange { m, min: 1 });
    }
    let mut vol = 2.0 * std::f64::consts::PI;
    for k in 2..=m {
        let pow = (k - 1) as i32;
        let slice = integrate(
            move |t: f64| t.sin().powi(pow),
            0.0,
            std::f64::consts::PI,
            1e-14,
            1e-14,
        )?;
        vol *= slice.value;
    }
    Ok(vol)
}
