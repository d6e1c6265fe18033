//! Gauss-Legendre nodes and weights on [-1, 1].
//!
//! Nodes are the roots of P_m found by Newton iteration from the Chebyshev
//! initial guess; the three-term recurrence supplies P_m and P_m'. Accurate
//! to 1-2 ulp for the orders used here (up to a few thousand nodes).

/// Legendre P_m and its derivative at x, by upward recurrence.
fn legendre_pair(m: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if m == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=m {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let dp = m as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// Nodes (ascending) and weights of the m-point rule. Panics if m = 0.
pub fn gauss_legendre(m: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(m >= 1, "node count must be positive");
    let mut nodes = vec![0.0; m];
    let mut weights = vec![0.0; m];
    // Roots come in +/- pairs; solve the upper half and mirror.
    for i in 0..(m + 1) / 2 {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (m as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_pair(m, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-15 {
                let (p2, d2) = legendre_pair(m, x);
                dp = d2;
                x -= p2 / d2;
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[m - 1 - i] = x;
        weights[m - 1 - i] = w;
        nodes[i] = -x;
        weights[i] = w;
    }
    if m % 2 == 1 {
        // Central node is exactly zero for odd m.
        nodes[m / 2] = 0.0;
    }
    (nodes, weights)
}
