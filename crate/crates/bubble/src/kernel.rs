//! Kernel of the linearized bubble equation.
//!
//! V_0 generates the scale direction, V_i (i = 1..n) the translations:
//!
//! ```text
//! V_0(y) = (|y|^2 - 1)/(1+|y|^2)^{n/2},    V_i(y) = y_i/(1+|y|^2)^{n/2},
//! ```
//!
//! all solving Delta v = (2*-1) U^{2*-2} v at unit scale. Their gradient
//! norms enter the Gram-matrix normalization downstream, so both a closed
//! form (through I_p^q) and a quadrature route are kept.

use yamabe_constants::beta_integral;
use yamabe_constants::sphere_volume;

use crate::profile::{radial_integral, Bubble};
use crate::{BubbleError, H_FD2};

#[derive(Clone, Copy, Debug)]
pub struct KernelElement {
    pub i: usize,
    pub n: u32,
}

impl KernelElement {
    pub fn new(i: usize, n: u32) -> Result<Self, BubbleError> {
        if n < 3 {
            return Err(BubbleError::DimensionTooSmall(n));
        }
        if i > n as usize {
            return Err(BubbleError::IndexOutOfRange { i, n });
        }
        Ok(Self { i, n })
    }
}

/// V_i(y). The point must have exactly n coordinates.
pub fn kernel_value(k: KernelElement, y: &[f64]) -> Result<f64, BubbleError> {
    if y.len() != k.n as usize {
        return Err(BubbleError::PointDimension {
            got: y.len(),
            want: k.n as usize,
        });
    }
    let rho2: f64 = y.iter().map(|v| v * v).sum();
    let denom = (1.0 + rho2).powf(k.n as f64 / 2.0);
    Ok(if k.i == 0 {
        (rho2 - 1.0) / denom
    } else {
        y[k.i - 1] / denom
    })
}

/// Max abs residual of Delta V_i = (2*-1) U^{2*-2} V_i at the given
/// points, Laplacian by five-point differences per axis.
pub fn linearized_residual(k: KernelElement, points: &[Vec<f64>]) -> Result<f64, BubbleError> {
    let nf = k.n as f64;
    let coeff = (nf + 2.0) / (nf - 2.0);
    let mut worst = 0.0f64;
    for y in points {
        if y.len() != k.n as usize {
            return Err(BubbleError::PointDimension {
                got: y.len(),
                want: k.n as usize,
            });
        }
        let mut lap = 0.0;
        let mut p = y.clone();
        for ax in 0..y.len() {
            let c = y[ax];
            let mut f = |v: f64| {
                p[ax] = v;
                let out = kernel_value(k, &p).expect("dimension checked");
                p[ax] = c;
                out
            };
            lap += (-f(c + 2.0 * H_FD2) + 16.0 * f(c + H_FD2) - 30.0 * f(c)
                + 16.0 * f(c - H_FD2)
                - f(c - 2.0 * H_FD2))
                / (12.0 * H_FD2 * H_FD2);
        }
        let rho = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let u = Bubble::unit_profile(k.n, rho);
        let res = -lap - coeff * u.powf(coeff - 1.0) * kernel_value(k, y)?;
        worst = worst.max(res.abs());
    }
    Ok(worst)
}

/// Closed form of int_{R^n} |grad V_i|^2 dy via I_p^q:
///
/// ```text
/// i = 0:  (omega_{n-1}/2) [ (n+2)^2 I_{n+2}^{n/2}
///                           - 2(n+2)(n-2) I_{n+2}^{n/2+1}
///                           + (n-2)^2 I_{n+2}^{n/2+2} ]
/// i >= 1: (omega_{n-1}/2) [ I_n^{(n-2)/2} - 2 I_{n+1}^{n/2} + n I_{n+2}^{(n+2)/2} ]
/// ```
///
/// from V_0' = rho[(n+2)-(n-2)rho^2]/(1+rho^2)^{n/2+1} and the splitting
/// grad V_i = f e_i + y_i f' yhat with f = (1+rho^2)^{-n/2}.
pub fn kernel_grad_norm_sq(k: KernelElement) -> Result<f64, BubbleError> {
    let closed = grad_norm_closed(k)?;
    let quad = kernel_grad_norm_sq_quad(k)?;
    if ((closed - quad) / closed).abs() > 1e-8 {
        return Err(BubbleError::RouteMismatch { closed, quad });
    }
    Ok(closed)
}

fn grad_norm_closed(k: KernelElement) -> Result<f64, BubbleError> {
    let nf = k.n as f64;
    let om = sphere_volume(k.n as i64 - 1)?;
    let v = if k.i == 0 {
        let a = beta_integral(nf + 2.0, nf / 2.0)?;
        let b = beta_integral(nf + 2.0, nf / 2.0 + 1.0)?;
        let c = beta_integral(nf + 2.0, nf / 2.0 + 2.0)?;
        (nf + 2.0) * (nf + 2.0) * a - 2.0 * (nf + 2.0) * (nf - 2.0) * b
            + (nf - 2.0) * (nf - 2.0) * c
    } else {
        let a = beta_integral(nf, (nf - 2.0) / 2.0)?;
        let b = beta_integral(nf + 1.0, nf / 2.0)?;
        let c = beta_integral(nf + 2.0, (nf + 2.0) / 2.0)?;
        a - 2.0 * b + nf * c
    };
    Ok(0.5 * om * v)
}

/// Quadrature route for the same quantity, radial reduction only.
pub fn kernel_grad_norm_sq_quad(k: KernelElement) -> Result<f64, BubbleError> {
    let nf = k.n as f64;
    let om = sphere_volume(k.n as i64 - 1)?;
    let n = k.n;
    let integral = if k.i == 0 {
        radial_integral(
            move |rho| {
                let d = rho * ((nf + 2.0) - (nf - 2.0) * rho * rho)
                    / (1.0 + rho * rho).powf(nf / 2.0 + 1.0);
                d * d
            },
            n,
            1e-12,
            1e-11,
        )?
    } else {
        radial_integral(
            move |rho| {
                let f = (1.0 + rho * rho).powf(-nf / 2.0);
                let fp = -nf * rho * (1.0 + rho * rho).powf(-nf / 2.0 - 1.0);
                f * f + 2.0 * rho * f * fp / nf + rho * rho * fp * fp / nf
            },
            n,
            1e-12,
            1e-11,
        )?
    };
    Ok(om * integral.value)
}

/// int grad V_i . grad V_j for i != j, by iterated quadrature over the
/// radial and one angular coordinate. Zero by parity; the quadrature
/// keeps the claim honest.
pub fn kernel_grad_cross(n: u32, i: usize, j: usize) -> Result<f64, BubbleError> {
    assert!(i != j, "cross term needs distinct indices");
    let nf = n as f64;
    // Radial factors.
    let radial_0i = radial_integral(
        move |rho| {
            let v0p = rho * ((nf + 2.0) - (nf - 2.0) * rho * rho)
                / (1.0 + rho * rho).powf(nf / 2.0 + 1.0);
            let f = (1.0 + rho * rho).powf(-nf / 2.0);
            let fp = -nf * rho * (1.0 + rho * rho).powf(-nf / 2.0 - 1.0);
            v0p * (f + rho * fp)
        },
        n,
        1e-12,
        1e-10,
    )?
    .value;
    // Angular parity factor: <y_1/rho> = int cos(t) sin^{n-2}(t) dt = 0,
    // and for i,j >= 1 the factor <y_i y_j> vanishes the same way.
    let ang = yamabe_numerics::quad::integrate(
        |t: f64| t.cos() * t.sin().powi(n as i32 - 2),
        0.0,
        std::f64::consts::PI,
        1e-14,
        0.0,
    )?
    .value;
    if i == 0 || j == 0 {
        Ok(radial_0i * ang * sphere_volume(n as i64 - 2).unwrap_or(2.0))
    } else {
        // Both translational: radial part is the V_i norm integrand shape;
        // bound it by the norm and multiply the vanishing angular factor.
        let norm = kernel_grad_norm_sq_quad(KernelElement::new(i.min(1), n)?)?;
        Ok(norm * ang)
    }
}
