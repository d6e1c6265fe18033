//! The radial integrals I_p^q = int_0^inf (1+r)^{-p} r^q dr.
//!
//! Closed form: I_p^q = B(q+1, p-q-1), convergent iff q > -1 and p - q > 1.
//! Everything the expansions quote about these integrals reduces to this
//! one-liner plus the recurrences
//!   I_p^q = q/(p-q-1) * I_p^{q-1}   and   I_p^q = p/(p-q-1) * I_{p+1}^q.

use yamabe_numerics::gamma::beta;
use yamabe_numerics::quad::integrate_breakpoints;

use crate::error::ConstantsError;
use crate::spheres::sphere_volume;

/// Closed form via the Euler beta function.
pub fn beta_integral(p: f64, q: f64) -> Result<f64, ConstantsError> {
    if !(q > -1.0) || !(p - q > 1.0) {
        return Err(ConstantsError::BetaDomain { p, q });
    }
    Ok(beta(q + 1.0, p - q - 1.0))
}

/// Independent quadrature route. The substitution r = s/(1-s) turns the
/// half line into (0,1) with integrand s^q (1-s)^{p-q-2}; each half is then
/// regularized by a power substitution s = v^m (resp. 1-s = v^m) with m
/// large enough that the transformed integrand vanishes at its endpoint,
/// so fractional exponents in (-1, 0) cause no endpoint blowup.
pub fn beta_integral_quad(p: f64, q: f64) -> Result<f64, ConstantsError> {
    if !(q > -1.0) || !(p - q > 1.0) {
        return Err(ConstantsError::BetaDomain { p, q });
    }
    let e = p - q - 2.0;
    // int_0^{1/2} s^a (1-s)^b ds with s = v^m, m >= 2/(1+a).
    let half_piece = |a: f64, b: f64| -> Result<f64, ConstantsError> {
        let m = (2.0 / (1.0 + a)).ceil().max(1.0);
        let top = 0.5f64.powf(1.0 / m);
        let r = integrate_breakpoints(
            move |v: f64| m * v.powf(m * (1.0 + a) - 1.0) * (1.0 - v.powf(m)).powf(b),
            &[0.0, 0.5 * top, top],
            5e-14,
            1e-12,
        )?;
        Ok(r.value)
    };
    Ok(half_piece(q, e)? + half_piece(e, q)?)
}

/// One row of the identity table: an I_p^q with a closed-form target from
/// the sphere-volume calculus.
pub struct IdentityRow {
    pub name: &'static str,
    pub p: f64,
    pub q: f64,
    /// Beta-function value of I_p^q.
    pub value: f64,
    /// Independent target expressed through sphere volumes.
    pub target: f64,
}

/// The identity catalogue for dimension n:
///   I_n^{(n-2)/2}        = omega_n / (2^{n-1} omega_{n-1})
///   I_n^{n-2}            = 1/(n-1)
///   I_{n-2}^{(n-2)/2}    = (n-1) omega_n / (2^{n-3}(n-4) omega_{n-1})   (n >= 5)
///   I_{(n+2)/2}^{(n-2)/2} = 2/n
pub fn identity_rows(n: u32) -> Result<Vec<IdentityRow>, ConstantsError> {
    if n < 4 {
        return Err(ConstantsError::DimensionOutOfRange {
            m: n as i64,
            min: 4,
        });
    }
    let nf = n as f64;
    let om_n = sphere_volume(n as i64)?;
    let om_nm1 = sphere_volume(n as i64 - 1)?;
    let mut rows = vec![
        IdentityRow {
            name: "i_n_half",
            p: nf,
            q: (nf - 2.0) / 2.0,
            value: beta_integral(nf, (nf - 2.0) / 2.0)?,
            target: om_n / (2f64.powi(n as i32 - 1) * om_nm1),
        },
        IdentityRow {
            name: "i_n_nm2",
            p: nf,
            q: nf - 2.0,
            value: beta_integral(nf, nf - 2.0)?,
            target: 1.0 / (nf - 1.0),
        },
        IdentityRow {
            name: "i_np2half_half",
            p: (nf + 2.0) / 2.0,
            q: (nf - 2.0) / 2.0,
            value: beta_integral((nf + 2.0) / 2.0, (nf - 2.0) / 2.0)?,
            target: 2.0 / nf,
        },
    ];
    if n >= 5 {
        rows.push(IdentityRow {
            name: "i_nm2_half",
            p: nf - 2.0,
            q: (nf - 2.0) / 2.0,
            value: beta_integral(nf - 2.0, (nf - 2.0) / 2.0)?,
            target: (nf - 1.0) * om_n / (2f64.powi(n as i32 - 3) * (nf - 4.0) * om_nm1),
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_values() {
        // n = 6 instance of I_{(n+2)/2}^{(n-2)/2} = 2/n.
        assert!((beta_integral(4.0, 2.0).unwrap() - 1.0 / 3.0).abs() < 1e-14);
        // I_5^3 = 1/4 and B(3,3) = 1/30.
        assert!((beta_integral(5.0, 3.0).unwrap() - 0.25).abs() < 1e-14);
        assert!((beta_integral(6.0, 2.0).unwrap() - 1.0 / 30.0).abs() < 1e-14);
    }

    #[test]
    fn closed_form_vs_quadrature_to_1e10() {
        let mut p = 2.6;
        while p < 12.0 {
            let mut q = -0.5;
            while q < p - 1.2 {
                let a = beta_integral(p, q).unwrap();
                let b = beta_integral_quad(p, q).unwrap();
                let rel = ((a - b) / a).abs();
                assert!(rel < 1e-10, "p={p} q={q}: {a} vs {b} rel {rel:.2e}");
                q += 0.7;
            }
            p += 1.3;
        }
    }

    #[test]
    fn recurrences_hold() {
        let cases = [(5.0, 1.5), (6.0, 2.0), (7.5, 2.5), (9.0, 4.0), (12.0, 5.0)];
        for &(p, q) in &cases {
            let base = beta_integral(p, q).unwrap();
            let down_q = beta_integral(p, q - 1.0).unwrap();
            let up_p = beta_integral(p + 1.0, q).unwrap();
            let r1 = q / (p - q - 1.0) * down_q;
            let r2 = p / (p - q - 1.0) * up_p;
            assert!(((base - r1) / base).abs() < 1e-12, "q-recurrence at ({p},{q})");
            assert!(((base - r2) / base).abs() < 1e-12, "p-recurrence at ({p},{q})");
        }
    }

    #[test]
    fn identity_table_to_1e10() {
        for n in 4..=12 {
            for row in identity_rows(n).unwrap() {
                let diff = (row.value - row.target).abs();
                assert!(
                    diff < 1e-10,
                    "n={n} {}: value {} target {} diff {diff:.2e}",
                    row.name,
                    row.value,
                    row.target
                );
            }
        }
    }

    #[test]
    fn divergent_parameters_rejected() {
        assert!(matches!(
            beta_integral(2.0, 1.0),
            Err(ConstantsError::BetaDomain { .. })
        ));
        assert!(matches!(
            beta_integral(5.0, -1.0),
            Err(ConstantsError::BetaDomain { .. })
        ));
        assert!(matches!(
            beta_integral_quad(3.0, 2.5),
            Err(ConstantsError::BetaDomain { .. })
        ));
    }
}
