//! Least-squares line fits for sweep data.
//!
//! Fits run in centered coordinates (x shifted by its mean) so the normal
//! equations stay well conditioned even when the abscissae span a narrow
//! band far from zero, which is the usual shape of log-log rate data.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FitError {
    #[error("need at least two points with distinct abscissae, got {0}")]
    TooFewPoints(usize),
    #[error("abscissae are all equal")]
    DegenerateAbscissae,
    #[error("log-log fit requires strictly positive data, offending value {0}")]
    NonPositive(f64),
}

#[derive(Clone, Copy, Debug)]
pub struct LineFit {
    pub intercept: f64,
    pub slope: f64,
    /// Root-mean-square of the fit residuals.
    pub residual_rms: f64,
}

impl LineFit {
    pub fn eval(&self, x: f64) -> f64 {
        self.intercept + self.slope * x
    }
}

/// Ordinary least squares for y = intercept + slope * x.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<LineFit, FitError> {
    if xs.len() < 2 || xs.len() != ys.len() {
        return Err(FitError::TooFewPoints(xs.len()));
    }
    let n = xs.len() as f64;
    let xbar = xs.iter().sum::<f64>() / n;
    let ybar = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - xbar) * (x - xbar)).sum();
    if sxx == 0.0 {
        return Err(FitError::DegenerateAbscissae);
    }
    let sxy: f64 = xs
        .iter()
        .zip(ys.iter())
        .map(|(x, y)| (x - xbar) * (y - ybar))
        .sum();
    let slope = sxy / sxx;
    let intercept = ybar - slope * xbar;
    let ss: f64 = xs
        .iter()
        .zip(ys.iter())
        .map(|(x, y)| {
            let r = y - (intercept + slope * x);
            r * r
        })
        .sum();
    Ok(LineFit {
        intercept,
        slope,
        residual_rms: (ss / n).sqrt(),
    })
}

/// Least squares of ln y against ln x. `slope` is then the power-law rate
/// and `intercept` the log of the prefactor.
pub fn log_log_fit(xs: &[f64], ys: &[f64]) -> Result<LineFit, FitError> {
    for &v in xs.iter().chain(ys.iter()) {
        if !(v > 0.0) {
            return Err(FitError::NonPositive(v));
        }
    }
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    fit_line(&lx, &ly)
}
