//! Radial cutoff profiles: 1 on [0, r0/2], 0 on [r0, infinity).

/// Quintic smoothstep cutoff. The transition polynomial is the unique
/// quintic with value, slope, and curvature matching at both plateau
/// edges, so the cutoff is C^2 on the half line.
pub fn cutoff_chi(r: f64, r0: f64) -> f64 {
    transition(r, r0, |s| 1.0 - s * s * s * (10.0 + s * (-15.0 + 6.0 * s)))
}

/// Cubic smoothstep variant, C^1 only. Expansion constants must not
/// depend on the cutoff shape; acceptance checks rerun with this one.
pub fn cutoff_chi_cubic(r: f64, r0: f64) -> f64 {
    transition(r, r0, |s| 1.0 - s * s * (3.0 - 2.0 * s))
}

/// d/dr of `cutoff_chi`. Zero on both plateaus.
pub fn cutoff_chi_deriv(r: f64, r0: f64) -> f64 {
    transition_deriv(r, r0, |s| -30.0 * s * s * (1.0 - s) * (1.0 - s))
}

/// d/dr of `cutoff_chi_cubic`.
pub fn cutoff_chi_cubic_deriv(r: f64, r0: f64) -> f64 {
    transition_deriv(r, r0, |s| -6.0 * s * (1.0 - s))
}

fn transition(r: f64, r0: f64, shape: impl Fn(f64) -> f64) -> f64 {
    let half = r0 / 2.0;
    if r <= half {
        1.0
    } else if r >= r0 {
        0.0
    } else {
        shape((r - half) / half)
    }
}

fn transition_deriv(r: f64, r0: f64, shape_deriv: impl Fn(f64) -> f64) -> f64 {
    let half = r0 / 2.0;
    if r <= half || r >= r0 {
        0.0
    } else {
        shape_deriv((r - half) / half) / half
    }
}
