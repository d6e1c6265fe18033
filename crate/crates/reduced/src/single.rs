use crate::{ReducedEnergyContext, ReducedError};
use yamabe_constants::ReducedCase;

/// Profile energy of a single bubble of scale `t` at `xi`.
///
/// Branches:
/// - N4:             e^(-2t/eps) (c2 t h - c3 A)
/// - N5_OR_LCF:      c2 t^2 h - c3 t^(n-2) A
/// - Weyl (n >= 6):  c2 t^2 h - c3 t^4 |W|^2
///
/// with h = h(xi), A the mass at xi, |W| the Weyl norm at xi.
pub fn tilde_e(ctx: &ReducedEnergyContext, t: f64, xi: &[f64]) -> Result<f64, ReducedError> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(ReducedError::NonPositiveScale(t));
    }
    ctx.manifold.check_point(xi)?;
    let h = ctx.manifold.h(xi);
    let a = ctx.competitor(xi);
    let c2 = ctx.constants.c2;
    let c3 = ctx.constants.c3;
    Ok(match ctx.case {
        ReducedCase::N4 => {
            let eps = ctx.epsilon_n4();
            (-2.0 * t / eps).exp() * (c2 * t * h - c3 * a)
        }
        ReducedCase::N5OrLcf { n } => c2 * t * t * h - c3 * t.powi(n as i32 - 2) * a,
        ReducedCase::N6NonLcf | ReducedCase::N7PlusNonLcf { .. } => {
            c2 * t * t * h - c3 * t.powi(4) * a
        }
    })
}

/// The n = 4 energy together with its exponentially rescaled companion
/// e^(2t/eps) tilde_e = c2 t h - c3 A.
///
/// The plain value underflows once t/eps is a few hundred; the pair keeps
/// the polynomial part readable at any scale.
pub fn tilde_e_n4_pair(
    ctx: &ReducedEnergyContext,
    t: f64,
    xi: &[f64],
) -> Result<(f64, f64), ReducedError> {
    if ctx.case != ReducedCase::N4 {
        return Err(ReducedError::UnsupportedCase {
            op: "tilde_e_n4_pair",
            case: ctx.case,
        });
    }
    if !(t > 0.0 && t.is_finite()) {
        return Err(ReducedError::NonPositiveScale(t));
    }
    ctx.manifold.check_point(xi)?;
    let h = ctx.manifold.h(xi);
    let a = ctx.competitor(xi);
    let rescaled = ctx.constants.c2 * t * h - ctx.constants.c3 * a;
    Ok(((-2.0 * t / ctx.epsilon_n4()).exp() * rescaled, rescaled))
}

/// Scale maximising `tilde_e` at fixed `xi`, requiring h(xi) > 0.
///
/// Branches:
/// - N4:             c3 A / (c2 h) + eps/2
/// - N5_OR_LCF:      (2 c2 h / ((n-2) c3 A))^(1/(n-4))
/// - Weyl (n >= 6):  (c2 h / (2 c3 |W|^2))^(1/2)
///
/// A vanishing competitor makes the power-law energies increasing in t;
/// the supremum is then at infinity and the returned scale is +inf. The
/// n = 4 branch stays finite there (the exponential always wins).
pub fn t_star(ctx: &ReducedEnergyContext, xi: &[f64]) -> Result<f64, ReducedError> {
    ctx.manifold.check_point(xi)?;
    let h = ctx.manifold.h(xi);
    if !(h > 0.0) {
        return Err(ReducedError::NonPositiveH(xi.to_vec(), h));
    }
    let a = ctx.competitor(xi);
    let c2 = ctx.constants.c2;
    let c3 = ctx.constants.c3;
    Ok(match ctx.case {
        ReducedCase::N4 => c3 * a / (c2 * h) + ctx.epsilon_n4() / 2.0,
        ReducedCase::N5OrLcf { n } => {
            if a <= 0.0 {
                f64::INFINITY
            } else {
                let nf = n as f64;
                (2.0 * c2 * h / ((nf - 2.0) * c3 * a)).powf(1.0 / (nf - 4.0))
            }
        }
        ReducedCase::N6NonLcf | ReducedCase::N7PlusNonLcf { .. } => {
            if a <= 0.0 {
                f64::INFINITY
            } else {
                (c2 * h / (2.0 * c3 * a)).sqrt()
            }
        }
    })
}

/// Angular functional whose maxima locate concentration points:
/// h A^(-2/(n-2)) on the mass branches, h / |W| on the Weyl ones.
///
/// h(xi) = 0 gives 0 whatever the denominator; a vanishing denominator
/// with h(xi) != 0 gives an infinity signed by h.
pub fn e_reduced(ctx: &ReducedEnergyContext, xi: &[f64]) -> Result<f64, ReducedError> {
    ctx.manifold.check_point(xi)?;
    let h = ctx.manifold.h(xi);
    if h == 0.0 {
        return Ok(0.0);
    }
    Ok(if ctx.case.mass_branch() {
        let a = ctx.manifold.mass(xi);
        if a == 0.0 {
            f64::INFINITY * h.signum()
        } else {
            let nf = ctx.case.n() as f64;
            h * a.powf(-2.0 / (nf - 2.0))
        }
    } else {
        let w = ctx.manifold.weyl_norm(xi);
        if w == 0.0 {
            f64::INFINITY * h.signum()
        } else {
            h / w
        }
    })
}
