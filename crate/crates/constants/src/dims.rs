//! The n-dependent scalar bundle.

use crate::case::ReducedCase;
use crate::error::ConstantsError;
use crate::reduced::reduced_constants;
use crate::spheres::sphere_volume;

/// All scalar constants a fixed dimension (and case) pins down.
#[derive(Clone, Copy, Debug)]
pub struct DimensionalConstants {
    pub n: u32,
    /// Critical exponent 2n/(n-2). The exact rational is (two_star_num,
    /// two_star_den); the float field is their quotient.
    pub two_star: f64,
    pub two_star_num: i64,
    pub two_star_den: i64,
    /// alpha_n = (n-2)/(4(n-1)), the conformal-Laplacian coupling.
    pub alpha_n: f64,
    /// beta_n = (n-2) omega_{n-1}, the Green-function normalizer.
    pub beta_n: f64,
    pub omega_n_minus_1: f64,
    pub omega_n: f64,
    /// Sharp Sobolev constant K_n.
    pub k_n: f64,
    /// Bubble energy c1 = K_n^{-n}/n.
    pub c1: f64,
    /// Reduced-energy coefficients for the chosen case.
    pub c2: f64,
    pub c3: f64,
    pub case: ReducedCase,
}

/// K_n = sqrt(4 / (n(n-2) omega_n^{2/n})).
pub fn sharp_sobolev(n: u32) -> Result<f64, ConstantsError> {
    if n < 3 {
        return Err(ConstantsError::DimensionOutOfRange {
            m: n as i64,
            min: 3,
        });
    }
    let nf = n as f64;
    let omega_n = sphere_volume(n as i64)?;
    Ok((4.0 / (nf * (nf - 2.0) * omega_n.powf(2.0 / nf))).sqrt())
}

impl DimensionalConstants {
    pub fn new(case: ReducedCase) -> Result<Self, ConstantsError> {
        let n = case.n();
        let nf = n as f64;
        let k_n = sharp_sobolev(n)?;
        let rc = reduced_constants(case)?;
        Ok(Self {
            n,
            two_star: (2 * n) as f64 / (n as f64 - 2.0),
            two_star_num: 2 * n as i64,
            two_star_den: n as i64 - 2,
            alpha_n: (nf - 2.0) / (4.0 * (nf - 1.0)),
            beta_n: (nf - 2.0) * sphere_volume(n as i64 - 1)?,
            omega_n_minus_1: sphere_volume(n as i64 - 1)?,
            omega_n: sphere_volume(n as i64)?,
            k_n,
            c1: rc.c1,
            c2: rc.c2,
            c3: rc.c3,
            case,
        })
    }

    /// Volume of the unit m-sphere, for any m >= 1.
    pub fn omega(&self, m: i64) -> Result<f64, ConstantsError> {
        sphere_volume(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn make(n: u32, lcf: bool) -> DimensionalConstants {
        DimensionalConstants::new(ReducedCase::infer(n, lcf).unwrap()).unwrap()
    }

    #[test]
    fn critical_exponent_is_exactly_rational() {
        for n in 4..=12 {
            let d = make(n, true);
            // two_star * (n-2) = 2n holds exactly as the integer pair.
            assert_eq!(d.two_star_num, 2 * n as i64);
            assert_eq!(d.two_star_den, n as i64 - 2);
        }
        assert_eq!(make(4, false).two_star, 4.0);
        assert_eq!(make(6, false).two_star, 3.0);
    }

    #[test]
    fn n4_values() {
        let d = make(4, false);
        let pi = std::f64::consts::PI;
        assert!((d.alpha_n - 1.0 / 6.0).abs() < 1e-15);
        // beta_4 = 2 omega_3 = 4 pi^2.
        assert!((d.beta_n - 4.0 * pi * pi).abs() < 1e-12);
        // K_4 with omega_4 = 8 pi^2 / 3.
        let want = (4.0 / (8.0 * (8.0 * pi * pi / 3.0f64).sqrt())).sqrt();
        assert!(((d.k_n - want) / want).abs() < 1e-13, "{} vs {want}", d.k_n);
    }

    #[test]
    fn c1_identity() {
        for n in 4..=12 {
            let d = make(n, true);
            let lhs = n as f64 * d.c1 * d.k_n.powi(n as i32);
            assert!((lhs - 1.0).abs() < 1e-12, "n={n}: {lhs}");
        }
    }

    #[test]
    fn all_fields_positive() {
        for n in 4..=12 {
            for lcf in [true, false] {
                let d = make(n, lcf);
                for (name, v) in [
                    ("two_star", d.two_star),
                    ("alpha_n", d.alpha_n),
                    ("beta_n", d.beta_n),
                    ("omega_n_minus_1", d.omega_n_minus_1),
                    ("omega_n", d.omega_n),
                    ("k_n", d.k_n),
                    ("c1", d.c1),
                    ("c2", d.c2),
                    ("c3", d.c3),
                ] {
                    assert!(v > 0.0, "n={n} lcf={lcf}: {name} = {v}");
                }
            }
        }
    }

    #[test]
    fn sharp_sobolev_domain() {
        assert!(sharp_sobolev(2).is_err());
        for n in 3..=12 {
            assert!(sharp_sobolev(n).unwrap() > 0.0);
        }
    }

    // 22-digit mpmath references from tools/reference_values.py.
    #[test]
    fn frozen_reference_values() {
        let d5 = make(5, false);
        assert!(((d5.k_n - 0.2598330806849343119379) / d5.k_n).abs() < 1e-14);
        assert!(((d5.c1 - 168.8720529525477119388) / d5.c1).abs() < 1e-13);
        assert!(((d5.beta_n - 78.95683520871486895068) / d5.beta_n).abs() < 1e-13);
        let d4 = make(4, false);
        assert!(((d4.omega_n - 26.31894506957162298356) / d4.omega_n).abs() < 1e-13);
    }
}
