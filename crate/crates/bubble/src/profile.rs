//! The radial bubble profile and its PDE residual.

use yamabe_numerics::quad::{integrate_breakpoints, QuadResult};

use crate::{BubbleError, H_FD};

/// One member of the bubble family: dimension and concentration scale.
#[derive(Clone, Copy, Debug)]
pub struct Bubble {
    pub n: u32,
    pub delta: f64,
}

impl Bubble {
    pub fn new(n: u32, delta: f64) -> Result<Self, BubbleError> {
        if n < 3 {
            return Err(BubbleError::DimensionTooSmall(n));
        }
        if !(delta > 0.0) {
            return Err(BubbleError::NonPositiveScale(delta));
        }
        Ok(Self { n, delta })
    }

    /// (n(n-2))^{(n-2)/4}, the height normalizer of the unit profile.
    pub fn height_constant(n: u32) -> f64 {
        let nf = n as f64;
        (nf * (nf - 2.0)).powf((nf - 2.0) / 4.0)
    }

    /// Unit profile U(rho) = (sqrt(n(n-2)) / (1+rho^2))^{(n-2)/2}.
    pub fn unit_profile(n: u32, rho: f64) -> f64 {
        let nf = n as f64;
        Self::height_constant(n) * (1.0 + rho * rho).powf(-(nf - 2.0) / 2.0)
    }

    /// d/drho of the unit profile.
    pub fn unit_profile_deriv(n: u32, rho: f64) -> f64 {
        let nf = n as f64;
        -(nf - 2.0) * Self::height_constant(n) * rho * (1.0 + rho * rho).powf(-nf / 2.0)
    }
}

/// U_delta(r) = delta^{(2-n)/2} U(r/delta).
pub fn bubble_value(b: Bubble, r: f64) -> f64 {
    let nf = b.n as f64;
    b.delta.powf((2.0 - nf) / 2.0) * Bubble::unit_profile(b.n, r / b.delta)
}

/// Max abs residual of Delta U_delta = U_delta^{2*-1} over the samples,
/// with Delta u = -(u'' + (n-1) u'/r) evaluated by five-point differences.
///
/// The stencil is applied to the unit profile at rho = r/delta and the
/// result scaled by delta^{-(n+2)/2}. That factoring is an exact change of
/// variables for both the operator and the stencil, and it makes the
/// delta-covariance of the residual hold to floating roundoff instead of
/// being polluted by rescaled FD noise.
pub fn bubble_pde_residual(b: Bubble, r_samples: &[f64]) -> Result<f64, BubbleError> {
    let nf = b.n as f64;
    let p = (nf + 2.0) / (nf - 2.0);
    let n = b.n;
    let mut worst = 0.0f64;
    for &r in r_samples {
        let rho = r / b.delta;
        if rho < 2.0 * crate::H_FD2 {
            return Err(BubbleError::SampleTooSmall(r));
        }
        let u = |x: f64| Bubble::unit_profile(n, x);
        let d1 = yamabe_numerics::fd::derivative(u, rho, H_FD);
        let d2 = yamabe_numerics::fd::second_derivative(u, rho, crate::H_FD2);
        let res = -(d2 + (nf - 1.0) * d1 / rho) - Bubble::unit_profile(n, rho).powf(p);
        worst = worst.max(res.abs());
    }
    Ok(worst * b.delta.powf(-(nf + 2.0) / 2.0))
}

/// int_0^inf g(rho) rho^{n-1} drho through the substitution
/// s = rho^2/(1+rho^2), which compactifies to (0,1) and turns bubble-type
/// integrands into beta-like ones.
pub fn radial_integral<F: Fn(f64) -> f64>(
    g: F,
    n: u32,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult, BubbleError> {
    let nf = n as f64;
    let r = integrate_breakpoints(
        move |s: f64| {
            let rho = (s / (1.0 - s)).sqrt();
            g(rho) * s.powf((nf - 2.0) / 2.0) * (1.0 - s).powf(-(nf + 2.0) / 2.0) / 2.0
        },
        &[0.0, 0.25, 0.5, 0.75, 1.0],
        abs_tol,
        rel_tol,
    )?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use yamabe_constants::{beta_integral, sphere_volume};
    use yamabe_numerics::rng::SplitMix64;

    fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
        let (a, b) = (lo.ln(), hi.ln());
        (0..count)
            .map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp())
            .collect()
    }

    #[test]
    fn pointwise_values() {
        let b = Bubble::new(4, 1.0).unwrap();
        // U(0) = sqrt(8), U(1) = sqrt(8)/2 = sqrt(2).
        assert!((bubble_value(b, 0.0) - 8f64.sqrt()).abs() < 1e-14);
        assert!((bubble_value(b, 1.0) - 2f64.sqrt()).abs() < 1e-14);
        // Center height delta^{(2-n)/2} (n(n-2))^{(n-2)/4}.
        let b5 = Bubble::new(5, 0.3).unwrap();
        let want = 0.3f64.powf(-1.5) * 15f64.powf(0.75);
        assert!(((bubble_value(b5, 0.0) - want) / want).abs() < 1e-14);
    }

    #[test]
    fn far_field_asymptotics_n5() {
        let b = Bubble::new(5, 1.0).unwrap();
        // r^3 U(r) -> 15^{3/4}.
        let want = 15f64.powf(0.75);
        let got = 1e6f64.powi(3) * bubble_value(b, 1e6);
        assert!(((got - want) / want).abs() < 1e-11, "{got} vs {want}");
    }

    #[test]
    fn pde_residual_on_log_grid_n5() {
        let b = Bubble::new(5, 1.0).unwrap();
        let res = bubble_pde_residual(b, &log_grid(0.1, 10.0, 40)).unwrap();
        assert!(res <= 1e-6, "residual {res:.3e}");
    }

    #[test]
    fn pde_residual_exact_point_n4() {
        let b = Bubble::new(4, 1.0).unwrap();
        let res = bubble_pde_residual(b, &[1.0]).unwrap();
        assert!(res <= 1e-8, "residual {res:.3e}");
    }

    #[test]
    fn residual_is_delta_covariant() {
        let n = 5u32;
        let samples = log_grid(0.2, 5.0, 12);
        let r1 = bubble_pde_residual(Bubble::new(n, 1.0).unwrap(), &samples).unwrap();
        let scaled: Vec<f64> = samples.iter().map(|r| 2.0 * r).collect();
        let r2 = bubble_pde_residual(Bubble::new(n, 2.0).unwrap(), &scaled).unwrap();
        // The factored evaluator sees bitwise identical unit-profile brackets
        // in both runs (2r/2 = r exactly), so the sups differ only by the
        // delta prefactor, up to one powf roundtrip.
        let back = 2f64.powf((n as f64 + 2.0) / 2.0) * r2;
        assert!(
            (back - r1).abs() <= 1e-12 * r1.max(1e-30),
            "{back:.15e} vs {r1:.15e}"
        );
    }

    #[test]
    fn scaling_identity_random() {
        let mut rng = SplitMix64::new(2024);
        for n in [4u32, 5, 6, 7] {
            let nf = n as f64;
            for _ in 0..50 {
                let delta = rng.uniform(0.05, 5.0);
                let r = rng.uniform(0.0, 10.0);
                let lhs = bubble_value(Bubble::new(n, delta).unwrap(), r);
                let rhs =
                    delta.powf((2.0 - nf) / 2.0) * bubble_value(Bubble::new(n, 1.0).unwrap(), r / delta);
                assert!(
                    ((lhs - rhs) / rhs).abs() < 1e-14,
                    "n={n} delta={delta} r={r}"
                );
            }
        }
    }

    #[test]
    fn critical_power_integral_identity() {
        // int_{R^n} U^{2*} = (1/2)[n(n-2)]^{n/2} omega_{n-1} I_n^{(n-2)/2}.
        for n in [4u32, 5, 6, 8] {
            let nf = n as f64;
            let two_star = 2.0 * nf / (nf - 2.0);
            let quad = sphere_volume(n as i64 - 1).unwrap()
                * radial_integral(
                    move |rho| Bubble::unit_profile(n, rho).powf(two_star),
                    n,
                    1e-12,
                    1e-11,
                )
                .unwrap()
                .value;
            let want = 0.5
                * (nf * (nf - 2.0)).powf(nf / 2.0)
                * sphere_volume(n as i64 - 1).unwrap()
                * beta_integral(nf, (nf - 2.0) / 2.0).unwrap();
            assert!(
                ((quad - want) / want).abs() < 1e-8,
                "n={n}: {quad} vs {want}"
            );
        }
    }

    #[test]
    fn small_sample_is_rejected() {
        let b = Bubble::new(5, 1.0).unwrap();
        assert!(matches!(
            bubble_pde_residual(b, &[1e-5]),
            Err(BubbleError::SampleTooSmall(_))
        ));
    }

    #[test]
    fn invalid_construction() {
        assert!(matches!(Bubble::new(2, 1.0), Err(BubbleError::DimensionTooSmall(2))));
        assert!(matches!(Bubble::new(5, 0.0), Err(BubbleError::NonPositiveScale(_))));
        assert!(matches!(Bubble::new(5, -1.0), Err(BubbleError::NonPositiveScale(_))));
    }
}
