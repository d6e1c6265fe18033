//! The round sphere (S^n, g_0) with every field in closed form.
//!
//! Distances and the conformal factor live on `ManifoldModel`; this file
//! adds the constructor, the Green's function of the conformal Laplacian
//! through the chordal distance, and the two spectral-side helpers used
//! to validate it (polar volume quadrature and the zonal-harmonic
//! pairing).

use std::f64::consts::PI;
use std::sync::Arc;

use crate::omega;
use yamabe_numerics::gegenbauer::{gegenbauer, gegenbauer_all};
use yamabe_numerics::legendre::gauss_legendre;
use yamabe_numerics::quad::integrate;

use crate::model::ManifoldModel;
use crate::ManifoldError;

/// The round sphere with scalar curvature n(n-1), zero mass, zero Weyl
/// tensor, and G_{g_0}(x, xi) = beta_n^{-1} |x - xi|^{2-n} in the chordal
/// (ambient Euclidean) distance.
pub fn round_sphere<H>(n: u32, h: H) -> Result<ManifoldModel, ManifoldError>
where
    H: Fn(&[f64]) -> f64 + Send + Sync + 'static,
{
    if n < 4 {
        return Err(ManifoldError::DimensionTooSmall(n));
    }
    let nf = n as f64;
    let beta_inv = 1.0 / ((nf - 2.0) * omega(n - 1));
    let green = move |x: &[f64], xi: &[f64]| {
        let chord2: f64 = x.iter().zip(xi).map(|(a, b)| (a - b) * (a - b)).sum();
        if chord2 == 0.0 {
            return f64::INFINITY;
        }
        beta_inv * chord2.powf((2.0 - nf) / 2.0)
    };
    Ok(ManifoldModel {
        n,
        lcf: true,
        r0: f64::min(1.0, PI / 4.0),
        is_sphere: true,
        green_fn: Arc::new(green),
        mass_fn: Arc::new(|_: &[f64]| 0.0),
        weyl_fn: Arc::new(|_: &[f64]| 0.0),
        scal_fn: Arc::new(move |_: &[f64]| nf * (nf - 1.0)),
        h_fn: Arc::new(h),
    })
}

/// Volume of S^n by Gauss-Legendre quadrature of the polar profile
/// omega_{n-1} int_0^pi sin^{n-1}.
pub fn polar_volume_quadrature(n: u32, nodes: usize) -> f64 {
    let (xs, ws) = gauss_legendre(nodes);
    let mut acc = 0.0;
    for (x, w) in xs.iter().zip(&ws) {
        let theta = PI * (x + 1.0) / 2.0;
        acc += w * theta.sin().powi(n as i32 - 1);
    }
    omega(n - 1) * acc * PI / 2.0
}

/// Eigenvalue mu_l = l(l+n-1) + n(n-2)/4 of the conformal Laplacian
/// L_{g_0} = Delta_{g_0} + alpha_n n(n-1) on degree-l spherical harmonics.
pub fn conformal_eigenvalue(n: u32, l: u32) -> f64 {
    let (nf, lf) = (n as f64, l as f64);
    lf * (lf + nf - 1.0) + nf * (nf - 2.0) / 4.0
}

/// The pairing int_{S^n} G(x, xi) Y_l(x) dv for the zonal harmonic
/// Y_l(x) = C_l^{(n-1)/2}(x . xi), reduced to the polar integral
///
/// ```text
/// omega_{n-1} int_0^pi beta_n^{-1} (2 sin(theta/2))^{2-n}
///                       C_l(cos theta) sin^{n-1}(theta) dtheta
/// ```
///
/// The expected value is C_l(1) / mu_l; the quadrature side makes no use
/// of that, so the comparison is a genuine spectral test of the Green's
/// function.
pub fn green_harmonic_pairing(n: u32, l: u32) -> Result<f64, ManifoldError> {
    if n < 4 {
        return Err(ManifoldError::DimensionTooSmall(n));
    }
    let nf = n as f64;
    let lam = (nf - 1.0) / 2.0;
    let beta_inv = 1.0 / ((nf - 2.0) * omega(n - 1));
    let f = move |theta: f64| {
        // (2 sin(t/2))^{2-n} sin^{n-1}(t) vanishes linearly at 0, so the
        // integrand is finite; evaluate the two powers together to avoid
        // inf * 0 at the endpoint.
        let half = (theta / 2.0).sin();
        let core = (2.0 * half).powf(2.0 - nf) * theta.sin().powf(nf - 1.0);
        beta_inv * core * gegenbauer(lam, l as usize, theta.cos())
    };
    let q = integrate(f, 0.0, PI, 1e-13, 1e-12)?;
    Ok(omega(n - 1) * q.value)
}

/// Predicted pairing value C_l(1) / mu_l for `green_harmonic_pairing`.
pub fn harmonic_pairing_prediction(n: u32, l: u32) -> f64 {
    let lam = (n as f64 - 1.0) / 2.0;
    gegenbauer(lam, l as usize, 1.0) / conformal_eigenvalue(n, l)
}

/// All zonal Gegenbauer values C_0..C_lmax at cos(theta), re-exported at
/// this level because sphere-side spectral code works in theta.
pub fn zonal_values(n: u32, lmax: usize, cos_theta: f64) -> Vec<f64> {
    gegenbauer_all((n as f64 - 1.0) / 2.0, lmax, cos_theta)
}
