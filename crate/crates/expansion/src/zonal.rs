//! Zonal fields on S^n and their Gegenbauer spectra.
//!
//! A zonal function u(theta) expands over the normalized zonal harmonics
//! phi_l = C_l^{(n-1)/2}(cos theta) / sqrt(N_l) with
//! N_l = omega_{n-1} h_l the L^2(S^n) norm of the raw Gegenbauer zonal.
//! `ZonalField` carries nodal values on a global Gauss-Legendre grid in
//! cos(theta), exact for band-limited data; `Projector` integrates on a
//! composite panel grid refined geometrically at the pole and capped by
//! the oscillation of the top retained mode, which is what analytic
//! bubble profiles with concentration scales down to 1e-3 need.

use std::f64::consts::PI;

use yamabe_manifold::omega;
use yamabe_numerics::gegenbauer::gegenbauer_norm_sq;
use yamabe_numerics::legendre::gauss_legendre;
use yamabe_numerics::quad::QuadError;
use yamabe_numerics::sum::Accumulator;

use crate::ExpansionError;

/// L^2(S^n) norm squared of the raw zonal C_l^{(n-1)/2}(cos theta).
pub fn basis_norm_sq(n: u32, l: usize) -> f64 {
    omega(n - 1) * gegenbauer_norm_sq((n as f64 - 1.0) / 2.0, l)
}

/// Eigenvalue l(l+n-1) of the (positive) Laplacian on degree-l
/// spherical harmonics of S^n.
pub fn laplace_eigenvalue(n: u32, l: usize) -> f64 {
    let (nf, lf) = (n as f64, l as f64);
    lf * (lf + nf - 1.0)
}

/// Accumulate `v * C_l(s)` into `acc[l]` for l = 0..=lmax by the
/// three-term recurrence, one streamed pass per node.
fn accumulate_zonal(acc: &mut [f64], lam: f64, s: f64, v: f64) {
    let lmax = acc.len() - 1;
    acc[0] += v;
    if lmax == 0 {
        return;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * lam * s;
    acc[1] += v * cur;
    for l in 1..lmax {
        let lf = l as f64;
        let next = (2.0 * (lf + lam) * s * cur - (lf + 2.0 * lam - 1.0) * prev) / (lf + 1.0);
        acc[l + 1] += v * next;
        prev = cur;
        cur = next;
    }
}

/// Nodal samples of a zonal function with optional spectral coefficients.
#[derive(Clone, Debug)]
pub struct ZonalField {
    pub n: u32,
    /// Gauss-Legendre abscissae in cos(theta), ascending.
    x: Vec<f64>,
    /// Sphere-measure weights omega_{n-1} (1-x^2)^{(n-2)/2} w_m.
    weight: Vec<f64>,
    pub values: Vec<f64>,
    coeffs: Option<Vec<f64>>,
}

impl ZonalField {
    fn grid(n: u32, m: usize) -> Result<(Vec<f64>, Vec<f64>), ExpansionError> {
        if n < 4 {
            return Err(ExpansionError::DimensionTooSmall(n));
        }
        if m < 16 {
            return Err(ExpansionError::TooFewNodes { need: 16, got: m });
        }
        let (xs, ws) = gauss_legendre(m);
        let om = omega(n - 1);
        let p = (n as f64 - 2.0) / 2.0;
        let weight = xs
            .iter()
            .zip(&ws)
            .map(|(x, w)| om * (1.0 - x * x).powf(p) * w)
            .collect();
        Ok((xs, weight))
    }

    /// Sample `f(theta)` on an m-node grid.
    pub fn from_function(
        n: u32,
        m: usize,
        f: impl Fn(f64) -> f64,
    ) -> Result<Self, ExpansionError> {
        let (x, weight) = Self::grid(n, m)?;
        let values: Vec<f64> = x.iter().map(|&s| f(s.acos())).collect();
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(QuadError::NonFinite { x: x[bad].acos() }.into());
        }
        Ok(Self {
            n,
            x,
            weight,
            values,
            coeffs: None,
        })
    }

    /// Synthesize the field with the given normalized coefficients. The
    /// node count must out-resolve the band: m > a.len().
    pub fn from_coeffs(n: u32, m: usize, a: &[f64]) -> Result<Self, ExpansionError> {
        if m <= a.len() {
            return Err(ExpansionError::TooFewNodes {
                need: a.len() + 1,
                got: m,
            });
        }
        let (x, weight) = Self::grid(n, m)?;
        let lam = (n as f64 - 1.0) / 2.0;
        let scaled: Vec<f64> = a
            .iter()
            .enumerate()
            .map(|(l, c)| c / basis_norm_sq(n, l).sqrt())
            .collect();
        let values = x
            .iter()
            .map(|&s| {
                let mut acc = vec![0.0; scaled.len()];
                accumulate_zonal(&mut acc, lam, s, 1.0);
                acc.iter().zip(&scaled).map(|(c, a)| c * a).sum()
            })
            .collect();
        Ok(Self {
            n,
            x,
            weight,
            values,
            coeffs: Some(a.to_vec()),
        })
    }

    pub fn node_count(&self) -> usize {
        self.x.len()
    }

    /// Abscissae in cos(theta), ascending.
    pub fn nodes(&self) -> &[f64] {
        &self.x
    }

    /// Integral of the field over S^n.
    pub fn integral(&self) -> f64 {
        let mut acc = Accumulator::new();
        for (w, v) in self.weight.iter().zip(&self.values) {
            acc.add(w * v);
        }
        acc.value()
    }

    /// Integral of the square of the field over S^n.
    pub fn l2_norm_sq(&self) -> f64 {
        let mut acc = Accumulator::new();
        for (w, v) in self.weight.iter().zip(&self.values) {
            acc.add(w * v * v);
        }
        acc.value()
    }

    /// Integral of `g(value) * extra(theta)` against the sphere measure.
    pub(crate) fn weighted_sum(&self, g: impl Fn(f64, f64) -> f64) -> f64 {
        let mut acc = Accumulator::new();
        for ((w, v), x) in self.weight.iter().zip(&self.values).zip(&self.x) {
            acc.add(w * g(*v, x.acos()));
        }
        acc.value()
    }

    /// Project onto phi_0..phi_lmax using the field's own grid. Exact
    /// only when the field is band-limited within the grid's degree.
    pub fn analyze(&mut self, l_max: usize) -> Result<&[f64], ExpansionError> {
        if l_max + 1 >= 2 * self.x.len() {
            return Err(ExpansionError::TooFewNodes {
                need: l_max + 1,
                got: self.x.len(),
            });
        }
        let lam = (self.n as f64 - 1.0) / 2.0;
        let mut acc = vec![0.0; l_max + 1];
        for ((x, w), v) in self.x.iter().zip(&self.weight).zip(&self.values) {
            accumulate_zonal(&mut acc, lam, *x, w * v);
        }
        for (l, c) in acc.iter_mut().enumerate() {
            *c /= basis_norm_sq(self.n, l).sqrt();
        }
        self.coeffs = Some(acc);
        Ok(self.coeffs.as_deref().expect("just stored"))
    }

    pub fn coeffs(&self) -> Option<&[f64]> {
        self.coeffs.as_deref()
    }

    /// |sum a_l^2 - int u^2| / int u^2. Small only for fields that are
    /// band-limited within the analyzed range.
    pub fn parseval_defect(&self) -> Result<f64, ExpansionError> {
        let a = self.coeffs().ok_or(ExpansionError::MissingCoefficients)?;
        let spectral: f64 = a.iter().map(|c| c * c).sum();
        let nodal = self.l2_norm_sq();
        Ok((spectral - nodal).abs() / nodal)
    }
}

/// Composite-grid projector onto the zonal harmonics phi_0..phi_lmax.
///
/// Panels are 24-point Gauss-Legendre. Near theta = 0 the panel widths
/// grow geometrically from a quarter of the given inner scale; away from
/// the pole the width is capped at 12 half-waves of mode l_max. Caller
/// breakpoints (profile seams) are forced onto panel edges.
pub struct Projector {
    n: u32,
    l_max: usize,
    theta: Vec<f64>,
    weight: Vec<f64>,
    inv_norm: Vec<f64>,
}

const PANEL_POINTS: usize = 24;

impl Projector {
    pub fn new(
        n: u32,
        l_max: usize,
        inner_scale: f64,
        breakpoints: &[f64],
    ) -> Result<Self, ExpansionError> {
        if n < 4 {
            return Err(ExpansionError::DimensionTooSmall(n));
        }
        if !(inner_scale > 0.0 && inner_scale.is_finite()) {
            return Err(ExpansionError::NonPositive {
                name: "inner_scale",
                value: inner_scale,
            });
        }
        let cap = (12.0 * PI / (l_max as f64 + 1.0)).min(PI / 16.0);
        let mut edges = vec![0.0];
        let mut g = (inner_scale / 4.0).max(1e-9);
        while g < cap {
            edges.push(g);
            g *= 2.0;
        }
        let start = *edges.last().expect("seeded with 0");
        let panels = ((PI - start) / cap).ceil() as usize;
        for j in 1..=panels {
            edges.push(start + (PI - start) * j as f64 / panels as f64);
        }
        for &b in breakpoints {
            if b > 1e-12 && b < PI - 1e-12 {
                edges.push(b);
            }
        }
        edges.sort_by(f64::total_cmp);
        edges.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

        let (gx, gw) = gauss_legendre(PANEL_POINTS);
        let om = omega(n - 1);
        let p = n as f64 - 1.0;
        let mut theta = Vec::with_capacity(PANEL_POINTS * (edges.len() - 1));
        let mut weight = Vec::with_capacity(theta.capacity());
        for e in edges.windows(2) {
            let half = 0.5 * (e[1] - e[0]);
            let mid = 0.5 * (e[0] + e[1]);
            for (x, w) in gx.iter().zip(&gw) {
                let t = mid + half * x;
                theta.push(t);
                weight.push(om * half * w * t.sin().powf(p));
            }
        }
        let inv_norm = (0..=l_max)
            .map(|l| 1.0 / basis_norm_sq(n, l).sqrt())
            .collect();
        Ok(Self {
            n,
            l_max,
            theta,
            weight,
            inv_norm,
        })
    }

    pub fn node_count(&self) -> usize {
        self.theta.len()
    }

    pub fn l_max(&self) -> usize {
        self.l_max
    }

    /// Coefficients of `f` on phi_0..phi_lmax.
    pub fn project(&self, f: impl Fn(f64) -> f64) -> Result<Vec<f64>, ExpansionError> {
        let lam = (self.n as f64 - 1.0) / 2.0;
        let mut acc = vec![0.0; self.l_max + 1];
        for (t, w) in self.theta.iter().zip(&self.weight) {
            let v = f(*t);
            if !v.is_finite() {
                return Err(QuadError::NonFinite { x: *t }.into());
            }
            accumulate_zonal(&mut acc, lam, t.cos(), w * v);
        }
        for (c, s) in acc.iter_mut().zip(&self.inv_norm) {
            *c *= s;
        }
        Ok(acc)
    }
}
