//! The approximate solution w = G_g(., xi) * w_hat and its k-bubble sum.

use yamabe_bubble::{bubble_value, Bubble};
use yamabe_manifold::ManifoldModel;

use crate::{beta_n, AnsatzError, AnsatzParams, Configuration};

/// Profile factor at conformal distance d, frozen to its d = r0 value
/// outside the ball. The freeze keeps the product with the Green's
/// function proportional to G_g in the far region.
fn w_hat_at(p: &AnsatzParams, m: &ManifoldModel, d_conf: f64) -> f64 {
    let nf = m.n as f64;
    let d = d_conf.min(m.r0);
    beta_n(m.n)
        * p.delta().powf((2.0 - nf) / 2.0)
        * d.powf(nf - 2.0)
        * Bubble::unit_profile(m.n, d / p.delta())
}

/// w_hat(x) = beta_n delta^{(2-n)/2} d^{n-2} U(d/delta) with
/// d = d_conf(x, xi) capped at r0. Vanishes at xi, constant far away.
pub fn w_hat(p: &AnsatzParams, m: &ManifoldModel, x: &[f64]) -> Result<f64, AnsatzError> {
    m.check_point(&p.xi)?;
    m.check_point(x)?;
    Ok(w_hat_at(p, m, m.dist_conf(x, &p.xi)))
}

/// Single-bubble field w(x) = G_g(x, xi) w_hat(x).
///
/// Near the center this is lambda_xi U_delta(d) times
/// beta_n G_{g_xi} d^{n-2}, whose last factor tends to 1; below d = 1e-8
/// the limit value is substituted, which sidesteps the 0 * infinity
/// product on the Green diagonal.
pub fn w(p: &AnsatzParams, m: &ManifoldModel, x: &[f64]) -> Result<f64, AnsatzError> {
    m.check_point(&p.xi)?;
    m.check_point(x)?;
    let d = m.dist_conf(x, &p.xi);
    if d < 1e-8 {
        let b = Bubble {
            n: m.n,
            delta: p.delta(),
        };
        return Ok(m.lambda(&p.xi, x) * bubble_value(b, d));
    }
    Ok(m.green(x, &p.xi) * w_hat_at(p, m, d))
}

/// Sum of the k single-bubble fields of a configuration.
pub fn w_multi(
    c: &Configuration,
    epsilon: f64,
    m: &ManifoldModel,
    x: &[f64],
) -> Result<f64, AnsatzError> {
    if c.k() >= 2 && m.r0 > c.min_sep() / 4.0 {
        return Err(AnsatzError::SeparationTooSmall {
            r0: m.r0,
            min_sep: c.min_sep(),
        });
    }
    let case = m.reduced_case();
    let mut acc = 0.0;
    for (ti, xi) in c.t().iter().zip(c.xi()) {
        let p = AnsatzParams::new(case, epsilon, *ti, xi.clone())?;
        acc += w(&p, m, x)?;
    }
    Ok(acc)
}
