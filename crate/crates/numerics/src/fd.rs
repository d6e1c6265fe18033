//! Central finite-difference stencils.
//!
//! Used for derivative cross-checks and for curvature probes where an
//! analytic derivative is not worth maintaining. Step sizes are the caller's
//! responsibility; the standard compromise h ~ 1e-4 balances truncation
//! (h^4 for the five-point first derivative) against roundoff.

/// Five-point first derivative, O(h^4) truncation.
pub fn derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2.0 * h)) / (12.0 * h)
}

/// Five-point second derivative, O(h^4) truncation.
pub fn second_derivative<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x + 2.0 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2.0 * h))
        / (12.0 * h * h)
}

/// Gradient of a multivariate function by the five-point stencil per axis.
pub fn gradient<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], h: f64) -> Vec<f64> {
    let mut g = vec![0.0; x.len()];
    let mut p = x.to_vec();
    for i in 0..x.len() {
        let xi = x[i];
        let mut at = |v: f64| {
            p[i] = v;
            let y = f(&p);
            p[i] = xi;
            y
        };
        g[i] = (-at(xi + 2.0 * h) + 8.0 * at(xi + h) - 8.0 * at(xi - h) + at(xi - 2.0 * h))
            / (12.0 * h);
    }
    g
}

/// Symmetric-difference Hessian. Diagonal entries use the five-point second
/// derivative; off-diagonal entries the four-corner formula, symmetrized.
pub fn hessian<F: Fn(&[f64]) -> f64>(f: F, x: &[f64], h: f64) -> Vec<Vec<f64>> {
    let d = x.len();
    let mut hess = vec![vec![0.0; d]; d];
    let mut p = x.to_vec();
    let at = |dx: &[(usize, f64)], p: &mut Vec<f64>| {
        for &(i, step) in dx {
            p[i] += step;
        }
        let y = f(p);
        for &(i, step) in dx {
            p[i] -= step;
        }
        y
    };
    for i in 0..d {
        hess[i][i] = (-at(&[(i, 2.0 * h)], &mut p) + 16.0 * at(&[(i, h)], &mut p)
            - 30.0 * at(&[], &mut p)
            + 16.0 * at(&[(i, -h)], &mut p)
            - at(&[(i, -2.0 * h)], &mut p))
            / (12.0 * h * h);
        for j in (i + 1)..d {
            let v = (at(&[(i, h), (j, h)], &mut p) - at(&[(i, h), (j, -h)], &mut p)
                - at(&[(i, -h), (j, h)], &mut p)
                + at(&[(i, -h), (j, -h)], &mut p))
                / (4.0 * h * h);
            hess[i][j] = v;
            hess[j][i] = v;
        }
    }
    hess
}
