//! Gegenbauer (ultraspherical) polynomials C_l^lam and their weighted L^2
//! norms. With lam = (n-1)/2 these are the zonal spherical harmonics on
//! S^n, which is the only reason they are here.

use crate::gamma::ln_gamma;

/// Values C_0^lam(s), ..., C_lmax^lam(s) by the three-term recurrence
///
/// ```text
/// (l+1) C_{l+1} = 2(l+lam) s C_l - (l+2lam-1) C_{l-1}
/// ```
pub fn gegenbauer_all(lam: f64, lmax: usize, s: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(lmax + 1);
    out.push(1.0);
    if lmax == 0 {
        return out;
    }
    out.push(2.0 * lam * s);
    for l in 1..lmax {
        let lf = l as f64;
        let next = (2.0 * (lf + lam) * s * out[l] - (lf + 2.0 * lam - 1.0) * out[l - 1])
            / (lf + 1.0);
        out.push(next);
    }
    out
}

/// Single value C_l^lam(s).
pub fn gegenbauer(lam: f64, l: usize, s: f64) -> f64 {
    *gegenbauer_all(lam, l, s).last().unwrap()
}

/// Weighted norm int_{-1}^{1} C_l^lam(s)^2 (1-s^2)^{lam-1/2} ds
///   = pi 2^{1-2lam} Gamma(l+2lam) / ( l! (l+lam) Gamma(lam)^2 ).
///
/// Evaluated in log space; the direct product overflows near l ~ 170.
pub fn gegenbauer_norm_sq(lam: f64, l: usize) -> f64 {
    let lf = l as f64;
    (std::f64::consts::PI.ln() + (1.0 - 2.0 * lam) * std::f64::consts::LN_2
        + ln_gamma(lf + 2.0 * lam)
        - ln_gamma(lf + 1.0)
        - (lf + lam).ln()
        - 2.0 * ln_gamma(lam))
    .exp()
}
