//! Mass extraction: the constant term of the conformal Green's function
//! expansion G_{g_xi}(x, xi) = beta_n^{-1} |y|^{2-n} + A_xi + O(|y|),
//! recovered numerically by sampling along a fixed normal-coordinate ray
//! and extrapolating the singular-part remainder to radius zero.

use crate::omega;
use yamabe_numerics::fit::log_log_fit;

use crate::model::ManifoldModel;
use crate::ManifoldError;

#[derive(Clone, Copy, Debug)]
pub struct MassEstimate {
    /// Extrapolated constant term A_xi.
    pub mass: f64,
    /// Fitted log-log slope of |remainder at radius r| after removing the
    /// constant; near 1 when the O(|y|) term dominates. None when the
    /// remainders sit at roundoff (exactly representable models).
    pub residual_slope: Option<f64>,
}

/// The default radius ladder r_max 2^{-j}, j = 0..=6.
pub fn mass_radii(r_max: f64) -> Vec<f64> {
    (0..=6).map(|j| r_max / f64::powi(2.0, j)).collect()
}

/// Extract A_xi from green/lambda samples at the given decreasing radii
/// (chart radii, within (0, r0)).
///
/// The estimate is the linear extrapolation to radius zero through the
/// two smallest radii; accuracy is O(r_min^2) plus a roundoff floor of
/// order eps * beta_n^{-1} r_min^{2-n} from the singular subtraction, so
/// radii should not be driven far below 1e-2 for n >= 8.
pub fn extract_mass(
    m: &ManifoldModel,
    xi: &[f64],
    radii: &[f64],
) -> Result<MassEstimate, ManifoldError> {
    m.check_point(xi)?;
    if !m.lcf && m.n >= 6 {
        // The expansion carries a |W|^2 log term here; no constant to read.
        return Err(ManifoldError::UnsupportedMassBranch(m.n));
    }
    if radii.len() < 2 {
        return Err(ManifoldError::TooFewRadii(radii.len()));
    }
    for pair in radii.windows(2) {
        if pair[1] >= pair[0] {
            return Err(ManifoldError::BadRadii {
                value: pair[1],
                r0: m.r0,
            });
        }
    }
    for &r in radii {
        if !(r > 0.0 && r < m.r0) {
            return Err(ManifoldError::BadRadii { value: r, r0: m.r0 });
        }
    }

    let nf = m.n as f64;
    let beta_inv = 1.0 / ((nf - 2.0) * omega(m.n - 1));
    let mut y = vec![0.0; m.n as usize];
    let samples: Vec<f64> = radii
        .iter()
        .map(|&r| {
            y[0] = r;
            let x = m.chart_point(xi, &y);
            m.green_conf(&x, xi) - beta_inv * r.powf(2.0 - nf)
        })
        .collect();

    let k = radii.len();
    let (ra, rb) = (radii[k - 2], radii[k - 1]);
    let (ma, mb) = (samples[k - 2], samples[k - 1]);
    let mass = (ra * mb - rb * ma) / (ra - rb);

    let scale = mass.abs().max(1.0);
    let kept: (Vec<f64>, Vec<f64>) = radii
        .iter()
        .zip(&samples)
        .filter(|(_, s)| (**s - mass).abs() > 1e-12 * scale)
        .map(|(r, s)| (*r, (s - mass).abs()))
        .unzip();
    let residual_slope = if kept.0.len() >= 3 {
        log_log_fit(&kept.0, &kept.1).ok().map(|fit| fit.slope)
    } else {
        None
    };
    Ok(MassEstimate {
        mass,
        residual_slope,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::round_sphere;
    use crate::synthetic::{synthetic_from_config, SyntheticModel};
    use yamabe_numerics::rng::SplitMix64;

    #[test]
    fn sphere_mass_vanishes_at_random_poles() {
        let m = round_sphere(5, |_: &[f64]| 1.0).unwrap();
        let mut rng = SplitMix64::new(31);
        for _ in 0..3 {
            let xi = rng.unit_vector(6);
            let est = extract_mass(&m, &xi, &mass_radii(m.r0 / 2.0)).unwrap();
            assert!(est.mass.abs() <= 1e-4, "mass {}", est.mass);
        }
    }

    #[test]
    fn constant_mass_shift_is_recovered() {
        let m = synthetic_from_config(
            "n = 5\nlcf = true\nmass = constant 0.7\ngreen = sphere_plus_mass",
        )
        .unwrap();
        let xi = vec![0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        let est = extract_mass(&m, &xi, &mass_radii(m.r0 / 2.0)).unwrap();
        assert!((est.mass - 0.7).abs() <= 1e-4, "mass {}", est.mass);
    }

    #[test]
    fn affine_mass_recovers_value_and_linear_decay() {
        // mass = 0.5 + 0.25 x_1; at xi = e_2 the ray along the first chart
        // axis sees a genuinely linear remainder, so the slope diagnostic
        // must sit near 1.
        let m = synthetic_from_config(
            "n = 5\nlcf = true\nmass = affine 0.5 0.25\ngreen = sphere_plus_mass",
        )
        .unwrap();
        let xi = vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0];
        let est = extract_mass(&m, &xi, &mass_radii(m.r0 / 2.0)).unwrap();
        assert!((est.mass - 0.5).abs() <= 1e-4, "mass {}", est.mass);
        let slope = est.residual_slope.expect("linear remainder present");
        assert!((slope - 1.0).abs() <= 0.2, "slope {slope}");
    }

    #[test]
    fn non_lcf_high_dimension_is_rejected() {
        let mut model = SyntheticModel::new(6, false);
        model.weyl = crate::Field::Constant(1.0);
        let m = model.build().unwrap();
        let xi = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert!(matches!(
            extract_mass(&m, &xi, &mass_radii(0.3)),
            Err(ManifoldError::UnsupportedMassBranch(6))
        ));
    }

    #[test]
    fn radii_validation() {
        let m = round_sphere(4, |_: &[f64]| 1.0).unwrap();
        let xi = vec![1.0, 0.0, 0.0, 0.0, 0.0];
        assert!(matches!(
            extract_mass(&m, &xi, &[0.1]),
            Err(ManifoldError::TooFewRadii(1))
        ));
        assert!(matches!(
            extract_mass(&m, &xi, &[0.1, 0.2]),
            Err(ManifoldError::BadRadii { .. })
        ));
        assert!(matches!(
            extract_mass(&m, &xi, &[2.0, 1.0]),
            Err(ManifoldError::BadRadii { .. })
        ));
    }
}
