//! The evaluable-manifold container. Geometry (distances, conformal
//! factor, stereographic chart) is the round sphere's in all models; what
//! varies between models is the analytic fields stored as closures.

use std::sync::Arc;

use yamabe_constants::ReducedCase;

use crate::ManifoldError;

pub type TwoPointField = Arc<dyn Fn(&[f64], &[f64]) -> f64 + Send + Sync>;
pub type OnePointField = Arc<dyn Fn(&[f64]) -> f64 + Send + Sync>;

/// A model manifold with points represented as unit vectors in R^{n+1}.
///
/// Immutable after construction; closures must be reentrant, which makes
/// every evaluation safe to run concurrently.
#[derive(Clone)]
pub struct ManifoldModel {
    pub n: u32,
    pub lcf: bool,
    /// Working radius of the normal-coordinate region around any pole,
    /// measured in the flat chart (equivalently d_conf).
    pub r0: f64,
    pub(crate) is_sphere: bool,
    pub(crate) green_fn: TwoPointField,
    pub(crate) mass_fn: OnePointField,
    pub(crate) weyl_fn: OnePointField,
    pub(crate) scal_fn: OnePointField,
    pub(crate) h_fn: OnePointField,
}

impl ManifoldModel {
    pub fn ambient_dim(&self) -> usize {
        self.n as usize + 1
    }

    /// True only for the exact round-sphere model, where green and mass
    /// have closed forms (mass identically zero in particular).
    pub fn is_sphere(&self) -> bool {
        self.is_sphere
    }

    pub fn reduced_case(&self) -> ReducedCase {
        ReducedCase::infer(self.n, self.lcf).expect("n >= 4 enforced at construction")
    }

    pub fn check_point(&self, x: &[f64]) -> Result<(), ManifoldError> {
        if x.len() != self.ambient_dim() {
            return Err(ManifoldError::PointDimension {
                got: x.len(),
                want: self.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Geodesic distance of g, via atan2 of (cross-norm, dot); stays
    /// accurate where arccos of the dot product loses digits (both ends).
    pub fn dist(&self, x: &[f64], y: &[f64]) -> f64 {
        let d = dot(x, y);
        let s = orth_norm(x, y, d);
        s.atan2(d)
    }

    /// Geodesic distance of the conformal metric g_xi, equal to the chart
    /// radius |y| = 2 tan(theta/2); +infinity at the antipode of xi.
    pub fn dist_conf(&self, x: &[f64], xi: &[f64]) -> f64 {
        let d = dot(x, xi);
        let denom = 1.0 + d;
        if denom <= 0.0 {
            return f64::INFINITY;
        }
        2.0 * orth_norm(x, xi, d) / denom
    }

    /// Conformal factor Lambda_xi(x) = (2 / (1 + x.xi))^{(n-2)/2}.
    /// Symmetric in its arguments; equals 1 at x = xi, diverges at the
    /// antipode.
    pub fn lambda(&self, xi: &[f64], x: &[f64]) -> f64 {
        let denom = 1.0 + dot(x, xi);
        if denom <= 0.0 {
            return f64::INFINITY;
        }
        (2.0 / denom).powf((self.n as f64 - 2.0) / 2.0)
    }

    /// Green's function G_g(x, xi) of the conformal Laplacian.
    pub fn green(&self, x: &[f64], xi: &[f64]) -> f64 {
        (self.green_fn)(x, xi)
    }

    /// G_{g_xi}(x, xi) = G_g(x, xi) / Lambda_xi(x).
    pub fn green_conf(&self, x: &[f64], xi: &[f64]) -> f64 {
        self.green(x, xi) / self.lambda(xi, x)
    }

    pub fn mass(&self, xi: &[f64]) -> f64 {
        (self.mass_fn)(xi)
    }

    pub fn weyl_norm(&self, xi: &[f64]) -> f64 {
        (self.weyl_fn)(xi)
    }

    pub fn scal(&self, x: &[f64]) -> f64 {
        (self.scal_fn)(x)
    }

    pub fn h(&self, x: &[f64]) -> f64 {
        (self.h_fn)(x)
    }

    /// Stereographic chart centered at xi: coordinates y in R^n with
    /// |y| = dist_conf(x, xi). The frame is the deterministic Householder
    /// image of the coordinate axes (see `frame_apply`).
    pub fn chart(&self, xi: &[f64], x: &[f64]) -> Result<Vec<f64>, ManifoldError> {
        self.check_point(x)?;
        self.check_point(xi)?;
        let denom = 1.0 + dot(x, xi);
        if denom <= 1e-14 {
            return Err(ManifoldError::ChartDomain);
        }
        let fx = frame_apply(xi, x);
        Ok(fx[..self.n as usize]
            .iter()
            .map(|c| 2.0 * c / denom)
            .collect())
    }

    /// Inverse of `chart`: the point at chart coordinates y.
    pub fn chart_point(&self, xi: &[f64], y: &[f64]) -> Vec<f64> {
        let rho = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        if rho < 1e-300 {
            return xi.to_vec();
        }
        let theta = 2.0 * (rho / 2.0).atan();
        let mut z = vec![0.0; self.ambient_dim()];
        for (zi, yi) in z.iter_mut().zip(y) {
            *zi = yi / rho;
        }
        let u = frame_apply(xi, &z);
        let (c, s) = (theta.cos(), theta.sin());
        xi.iter().zip(&u).map(|(a, b)| c * a + s * b).collect()
    }

    /// The n tangent frame vectors at xi (rows of length n+1) used by the
    /// chart.
    pub fn tangent_frame(&self, xi: &[f64]) -> Vec<Vec<f64>> {
        let m = self.ambient_dim();
        (0..self.n as usize)
            .map(|i| {
                let mut e = vec![0.0; m];
                e[i] = 1.0;
                frame_apply(xi, &e)
            })
            .collect()
    }
}

pub(crate) fn dot(x: &[f64], y: &[f64]) -> f64 {
    x.iter().zip(y).map(|(a, b)| a * b).sum()
}

/// Norm of the component of x orthogonal to the unit vector y, given
/// d = x.y.
fn orth_norm(x: &[f64], y: &[f64], d: f64) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| {
            let w = a - d * b;
            w * w
        })
        .sum::<f64>()
        .sqrt()
}

/// Apply the orthogonal frame map Q with Q e_{n+1} = xi (or its inverse,
/// which is Q itself up to the sign trick below).
///
/// Q is the Householder reflection through e_{n+1} - xi when that vector
/// is well-conditioned (xi away from the north pole); otherwise the
/// reflection through e_{n+1} + xi composed with negation. Both choices
/// are involutions, so forward and inverse applications coincide.
fn frame_apply(xi: &[f64], z: &[f64]) -> Vec<f64> {
    let m = xi.len();
    let last = xi[m - 1];
    let (sign, vv) = if last < 0.75 {
        (1.0, 2.0 * (1.0 - last))
    } else {
        (-1.0, 2.0 * (1.0 + last))
    };
    // v = e_{n+1} - sign * xi, |v|^2 = vv >= 1/2 in both branches.
    let vdotz = z[m - 1] - sign * dot(xi, z);
    let coef = 2.0 * vdotz / vv;
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let vi = if i == m - 1 { 1.0 - sign * xi[i] } else { -sign * xi[i] };
        out.push(sign * (z[i] - coef * vi));
    }
    out
}
