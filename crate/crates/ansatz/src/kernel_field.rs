//! Kernel fields z_0..z_n, the manifold carriers of the linearization
//! kernel: z_i = G_g(., xi) * [beta_n chi(d) delta^{(2-n)/2} d^{n-2}
//! V_i(y/delta)] with y the chart coordinates at xi.

use yamabe_bubble::{kernel_value, KernelElement};
use yamabe_manifold::ManifoldModel;

use crate::{beta_n, cutoff_chi, AnsatzError, AnsatzParams};

/// z_i with the standard quintic cutoff.
pub fn z(p: &AnsatzParams, m: &ManifoldModel, i: usize, x: &[f64]) -> Result<f64, AnsatzError> {
    z_with_cutoff(p, m, i, x, cutoff_chi)
}

/// z_i with a caller-chosen cutoff profile; expansion checks rerun with a
/// cubic shape to certify that leading constants do not depend on it.
///
/// The scale direction i = 0 is radial and evaluable anywhere; the
/// translation directions i >= 1 read the chart at xi, so the antipodal
/// point of a sphere model is a domain error for them even though the
/// cutoff vanishes there.
pub fn z_with_cutoff(
    p: &AnsatzParams,
    m: &ManifoldModel,
    i: usize,
    x: &[f64],
    chi: impl Fn(f64, f64) -> f64,
) -> Result<f64, AnsatzError> {
    if i > m.n as usize {
        return Err(AnsatzError::KernelIndex { i, n: m.n });
    }
    m.check_point(&p.xi)?;
    m.check_point(x)?;
    let nf = m.n as f64;
    let delta = p.delta();
    let d = m.dist_conf(x, &p.xi);
    let k = KernelElement::new(i, m.n)?;
    let v = if i == 0 {
        if d >= m.r0 {
            return Ok(0.0);
        }
        let mut y = vec![0.0; m.n as usize];
        y[0] = d / delta;
        kernel_value(k, &y)?
    } else {
        let y = m.chart(&p.xi, x)?;
        if d >= m.r0 {
            return Ok(0.0);
        }
        let scaled: Vec<f64> = y.iter().map(|c| c / delta).collect();
        kernel_value(k, &scaled)?
    };
    let chi_val = chi(d, m.r0);
    if d < 1e-8 {
        // Removable singularity, as for w: beta_n G_{g_xi} d^{n-2} -> 1.
        return Ok(m.lambda(&p.xi, x) * chi_val * delta.powf((2.0 - nf) / 2.0) * v);
    }
    Ok(m.green(x, &p.xi)
        * beta_n(m.n)
        * chi_val
        * delta.powf((2.0 - nf) / 2.0)
        * d.powf(nf - 2.0)
        * v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cutoff_chi_cubic;
    use yamabe_manifold::ManifoldError;
    use yamabe_numerics::rng::SplitMix64;

    fn sphere(n: u32) -> ManifoldModel {
        yamabe_manifold::round_sphere(n, |_| 1.0).unwrap()
    }

    fn pole(n: u32, flip: bool) -> Vec<f64> {
        let mut p = vec![0.0; n as usize + 1];
        p[n as usize] = if flip { -1.0 } else { 1.0 };
        p
    }

    fn params(m: &ManifoldModel, epsilon: f64, t: f64, xi: Vec<f64>) -> AnsatzParams {
        AnsatzParams::new(m.reduced_case(), epsilon, t, xi).unwrap()
    }

    fn at(m: &ManifoldModel, xi: &[f64], y: &[f64]) -> Vec<f64> {
        m.chart_point(xi, y)
    }

    #[test]
    fn support_sign_and_scale_root() {
        let m = sphere(5);
        let xi = pole(5, false);
        let p = params(&m, 1e-3, 1.0, xi.clone());
        let delta = p.delta();

        for rho in [m.r0, 1.1 * m.r0, 2.0] {
            for i in 0..=5 {
                let x = at(&m, &xi, &[rho, 0.0, 0.0, 0.0, 0.0]);
                assert_eq!(z(&p, &m, i, &x).unwrap(), 0.0, "i = {i}, rho = {rho}");
            }
        }

        // V_0 has its root where d = delta, is negative inside, positive
        // outside.
        let scale = delta.powf(-1.5);
        let on_root = z(&p, &m, 0, &at(&m, &xi, &[delta, 0.0, 0.0, 0.0, 0.0])).unwrap();
        assert!(on_root.abs() < 1e-12 * scale, "root value {on_root}");
        assert!(z(&p, &m, 0, &at(&m, &xi, &[delta / 2.0, 0.0, 0.0, 0.0, 0.0])).unwrap() < 0.0);
        assert!(z(&p, &m, 0, &at(&m, &xi, &[2.0 * delta, 0.0, 0.0, 0.0, 0.0])).unwrap() > 0.0);
    }

    #[test]
    fn center_limits() {
        let m = sphere(5);
        let xi = pole(5, false);
        let p = params(&m, 1e-3, 1.0, xi.clone());
        let delta = p.delta();
        let z0 = z(&p, &m, 0, &xi).unwrap();
        let want = -delta.powf(-1.5);
        assert!(((z0 - want) / want).abs() < 1e-14, "{z0} vs {want}");
        assert_eq!(z(&p, &m, 1, &xi).unwrap(), 0.0);
    }

    #[test]
    fn translation_components_are_odd_and_the_radial_one_even() {
        let m = sphere(5);
        let xi = pole(5, false);
        let p = params(&m, 1e-3, 1.0, xi.clone());
        let mut rng = SplitMix64::substream(0x77aa_1905, 5);
        for _ in 0..50 {
            let rho = rng.uniform(1e-4, 0.95 * m.r0);
            let dir = rng.unit_vector(5);
            let y: Vec<f64> = dir.iter().map(|c| c * rho).collect();
            let y_neg: Vec<f64> = y.iter().map(|c| -c).collect();
            for i in [1usize, 2, 5] {
                let plus = z(&p, &m, i, &at(&m, &xi, &y)).unwrap();
                let minus = z(&p, &m, i, &at(&m, &xi, &y_neg)).unwrap();
                let scale = plus.abs().max(minus.abs()).max(1e-300);
                assert!(
                    ((plus + minus) / scale).abs() < 1e-13,
                    "i = {i}: {plus} vs {minus}"
                );
            }
            let even_plus = z(&p, &m, 0, &at(&m, &xi, &y)).unwrap();
            let even_minus = z(&p, &m, 0, &at(&m, &xi, &y_neg)).unwrap();
            assert!(((even_plus - even_minus) / even_plus).abs() < 1e-13);
        }
    }

    #[test]
    fn matches_the_written_out_formula_on_a_synthetic_model() {
        let mut model = yamabe_manifold::SyntheticModel::new(7, false);
        model.h = yamabe_manifold::Field::Constant(1.0);
        let m = model.build().unwrap();
        let xi = pole(7, false);
        // Non-lcf n = 7: delta = t sqrt(eps).
        let p = params(&m, 1e-4, 1.2, xi.clone());
        assert!((p.delta() - 0.012).abs() < 1e-17);

        let y = [0.1, 0.2, 0.05, 0.0, -0.04, 0.0, 0.03];
        let x = at(&m, &xi, &y);
        let rho: f64 = y.iter().map(|c| c * c).sum::<f64>().sqrt();
        let scaled: Vec<f64> = y.iter().map(|c| c / p.delta()).collect();
        for i in [0usize, 2, 7] {
            let mut arg = scaled.clone();
            if i == 0 {
                arg = vec![0.0; 7];
                arg[0] = rho / p.delta();
            }
            let manual = m.green(&x, &xi)
                * beta_n(7)
                * cutoff_chi(rho, m.r0)
                * p.delta().powf(-2.5)
                * rho.powf(5.0)
                * kernel_value(KernelElement::new(i, 7).unwrap(), &arg).unwrap();
            let got = z(&p, &m, i, &x).unwrap();
            assert!(
                ((got - manual) / manual).abs() < 1e-12,
                "i = {i}: {got} vs {manual}"
            );
        }
    }

    #[test]
    fn cutoff_variants_agree_on_the_inner_plateau_only() {
        let m = sphere(5);
        let xi = pole(5, false);
        let p = params(&m, 1e-3, 1.0, xi.clone());
        let inner = at(&m, &xi, &[0.4 * m.r0, 0.0, 0.0, 0.0, 0.0]);
        let a = z_with_cutoff(&p, &m, 0, &inner, cutoff_chi).unwrap();
        let b = z_with_cutoff(&p, &m, 0, &inner, cutoff_chi_cubic).unwrap();
        assert_eq!(a, b);

        let mid = at(&m, &xi, &[0.8 * m.r0, 0.0, 0.0, 0.0, 0.0]);
        let a = z_with_cutoff(&p, &m, 0, &mid, cutoff_chi).unwrap();
        let b = z_with_cutoff(&p, &m, 0, &mid, cutoff_chi_cubic).unwrap();
        assert!(((a - b) / a).abs() > 1e-3, "cutoffs should differ: {a} vs {b}");
    }

    #[test]
    fn index_and_chart_domain_errors() {
        let m = sphere(5);
        let xi = pole(5, false);
        let p = params(&m, 1e-3, 1.0, xi.clone());
        assert!(matches!(
            z(&p, &m, 6, &xi),
            Err(AnsatzError::KernelIndex { i: 6, n: 5 })
        ));
        // The antipode is out of the chart: the radial component returns
        // its supported value 0, the translation ones refuse.
        let anti = pole(5, true);
        assert_eq!(z(&p, &m, 0, &anti).unwrap(), 0.0);
        assert!(matches!(
            z(&p, &m, 1, &anti),
            Err(AnsatzError::Manifold(ManifoldError::ChartDomain))
        ));
    }
}
