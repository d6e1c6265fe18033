use crate::{multi::tilde_e_k, ReducedEnergyContext, ReducedError};
use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use yamabe_constants::ReducedCase;
use yamabe_numerics::{fd, rng::SplitMix64};

/// Steps whose mapped points come closer than this are rejected by the
/// line search; the energy blows up on the diagonal.
const SEP_GUARD: f64 = 1e-3;

/// Minimum pairwise separation of a freshly drawn start tuple.
const START_SEP: f64 = 1e-2;

/// A trajectory whose log-scale leaves the search box by this much has
/// run off to the boundary of the scale domain.
const ESCAPE_MARGIN: f64 = 40.0;

/// Per-coordinate cap on a single step, so an early huge quasi-Newton
/// direction cannot overflow the exponential scale map.
const STEP_CAP: f64 = 5.0;

const MAX_ITER: usize = 400;
const MAX_HALVINGS: usize = 60;
const ARMIJO_C1: f64 = 1e-4;
const GRAD_H: f64 = 1e-5;
const HESS_H: f64 = 1e-4;

/// Gradient tolerance, relative to 1 + |value|.
const GTOL: f64 = 1e-8;

/// Scale window searched by `maximize`; starts are drawn log-uniformly.
#[derive(Clone, Copy, Debug)]
pub struct SearchBox {
    pub t_lo: f64,
    pub t_hi: f64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSign {
    /// det of the chart Hessian is positive.
    Positive,
    /// det of the chart Hessian is negative.
    Negative,
    /// An eigenvalue sits within 1e-6 (relative) of zero.
    Degenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// Converged to an interior critical point.
    Interior,
    /// Every converged run escaped the scale window; the functional has
    /// no interior maximum over the sampled basins.
    Boundary,
    /// Neither converged nor escaped within the iteration budget.
    Unconverged,
}

/// Where a search ended and what the second-order probe saw there.
///
/// The Hessian is taken in the chart coordinates (log-scales and tangent
/// displacements); at a critical point its spectrum is chart-invariant.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalPointReport {
    pub t: Vec<f64>,
    pub xi: Vec<Vec<f64>>,
    pub value: f64,
    pub grad_norm: f64,
    /// Ascending; empty for boundary reports.
    pub hessian_eigenvalues: Vec<f64>,
    pub degree_sign: DegreeSign,
    pub outcome: SearchOutcome,
}

/// Chart around a base tuple: per bubble one log-scale coordinate and n
/// tangent coordinates, the moved point being projected back to the
/// sphere. The chart reaches everything except the base antipodes, which
/// multistart covers from other bases.
struct Chart<'a> {
    ctx: &'a ReducedEnergyContext,
    t0: Vec<f64>,
    xi0: Vec<Vec<f64>>,
    frames: Vec<Vec<Vec<f64>>>,
    n: usize,
}

impl<'a> Chart<'a> {
    fn new(ctx: &'a ReducedEnergyContext, t0: Vec<f64>, xi0: Vec<Vec<f64>>) -> Self {
        let frames = xi0.iter().map(|p| ctx.manifold.tangent_frame(p)).collect();
        let n = ctx.manifold.n as usize;
        Chart {
            ctx,
            t0,
            xi0,
            frames,
            n,
        }
    }

    fn dim(&self) -> usize {
        self.t0.len() * (self.n + 1)
    }

    fn map(&self, s: &[f64]) -> (Vec<f64>, Vec<Vec<f64>>) {
        let block = self.n + 1;
        let k = self.t0.len();
        let mut t = Vec::with_capacity(k);
        let mut xi = Vec::with_capacity(k);
        for i in 0..k {
            t.push(self.t0[i] * s[i * block].exp());
            let mut x = self.xi0[i].clone();
            for j in 0..self.n {
                let c = s[i * block + 1 + j];
                for (xa, fa) in x.iter_mut().zip(&self.frames[i][j]) {
                    *xa += c * fa;
                }
            }
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            for v in &mut x {
                *v /= norm;
            }
            xi.push(x);
        }
        (t, xi)
    }

    /// Energy at the mapped tuple; probes outside the validated domain
    /// come back as NaN, which the line search then rejects.
    fn eval(&self, s: &[f64]) -> f64 {
        let (t, xi) = self.map(s);
        tilde_e_k(self.ctx, &t, &xi).unwrap_or(f64::NAN)
    }

    fn min_sep(&self, xi: &[Vec<f64>]) -> f64 {
        let mut best = f64::INFINITY;
        for i in 0..xi.len() {
            for j in i + 1..xi.len() {
                best = best.min(self.ctx.manifold.dist(&xi[i], &xi[j]));
            }
        }
        best
    }
}

struct RestartRun {
    converged: bool,
    escaped: bool,
    value: f64,
    grad_norm: f64,
    t: Vec<f64>,
    xi: Vec<Vec<f64>>,
}

fn bfgs(chart: &Chart, search: &SearchBox) -> RestartRun {
    let d = chart.dim();
    let phi = |s: &[f64]| -chart.eval(s);
    let mut s = DVector::<f64>::zeros(d);
    let mut f = phi(s.as_slice());
    let mut g = DVector::from_vec(fd::gradient(&phi, s.as_slice(), GRAD_H));
    let mut h_inv = DMatrix::<f64>::identity(d, d);
    let mut converged = false;
    let mut escaped = false;
    let (lo, hi) = (search.t_lo.ln(), search.t_hi.ln());

    for _ in 0..MAX_ITER {
        let (t, _) = chart.map(s.as_slice());
        if t.iter()
            .any(|&ti| ti.ln() > hi + ESCAPE_MARGIN || ti.ln() < lo - ESCAPE_MARGIN)
        {
            escaped = true;
            break;
        }
        if g.norm() <= GTOL * (1.0 + f.abs()) {
            converged = true;
            break;
        }
        let mut p = -(&h_inv * &g);
        if p.dot(&g) >= 0.0 {
            h_inv = DMatrix::identity(d, d);
            p = -g.clone();
        }
        let cap = p.amax();
        if cap > STEP_CAP {
            p *= STEP_CAP / cap;
        }
        let dd = p.dot(&g);

        let mut alpha = 1.0;
        let mut accepted = None;
        for _ in 0..MAX_HALVINGS {
            let trial = &s + &p * alpha;
            let (tt, txi) = chart.map(trial.as_slice());
            if tt.len() == 1 || chart.min_sep(&txi) >= SEP_GUARD {
                let ft = phi(trial.as_slice());
                if ft <= f + ARMIJO_C1 * alpha * dd {
                    accepted = Some((trial, ft));
                    break;
                }
            }
            alpha *= 0.5;
        }
        let Some((s_new, f_new)) = accepted else { break };
        let g_new = DVector::from_vec(fd::gradient(&phi, s_new.as_slice(), GRAD_H));
        let step = &s_new - &s;
        let y = &g_new - &g;
        let sy = step.dot(&y);
        if sy > 1e-12 * step.norm() * y.norm() {
            let rho = 1.0 / sy;
            let id = DMatrix::<f64>::identity(d, d);
            let left = &id - (&step * y.transpose()).scale(rho);
            let right = &id - (&y * step.transpose()).scale(rho);
            h_inv = &left * h_inv * &right + (&step * step.transpose()).scale(rho);
        } else {
            h_inv = DMatrix::identity(d, d);
        }
        s = s_new;
        f = f_new;
        g = g_new;
    }
    if !converged && !escaped && g.norm() <= GTOL * (1.0 + f.abs()) {
        converged = true;
    }
    let (t, xi) = chart.map(s.as_slice());
    RestartRun {
        converged,
        escaped,
        value: -f,
        grad_norm: g.norm(),
        t,
        xi,
    }
}

fn run_restart(
    ctx: &ReducedEnergyContext,
    k: usize,
    search: &SearchBox,
    seed: u64,
    index: u64,
) -> RestartRun {
    let mut rng = SplitMix64::substream(seed, index);
    let amb = ctx.manifold.ambient_dim();
    let (lo, hi) = (search.t_lo.ln(), search.t_hi.ln());
    let t0: Vec<f64> = (0..k).map(|_| rng.uniform(lo, hi).exp()).collect();
    let mut xi0: Vec<Vec<f64>> = (0..k).map(|_| rng.unit_vector(amb)).collect();
    for _ in 0..100 {
        let sep = {
            let mut best = f64::INFINITY;
            for i in 0..k {
                for j in i + 1..k {
                    best = best.min(ctx.manifold.dist(&xi0[i], &xi0[j]));
                }
            }
            best
        };
        if sep >= START_SEP {
            break;
        }
        xi0 = (0..k).map(|_| rng.unit_vector(amb)).collect();
    }
    let chart = Chart::new(ctx, t0, xi0);
    bfgs(&chart, search)
}

/// Multistart quasi-Newton search for a maximum of the k-bubble energy.
///
/// Restarts run concurrently on disjoint substreams of `seed`; the merge
/// prefers converged interior runs, best value first and lowest restart
/// index on ties, so a fixed seed reproduces the report exactly. When
/// every informative run left the scale window the report says Boundary
/// instead of raising an error.
pub fn maximize(
    ctx: &ReducedEnergyContext,
    k: usize,
    search: SearchBox,
    restarts: u32,
    seed: u64,
) -> Result<CriticalPointReport, ReducedError> {
    if k == 0 {
        return Err(ReducedError::EmptyTuple);
    }
    if !(search.t_lo > 0.0 && search.t_lo < search.t_hi && search.t_hi.is_finite()) {
        return Err(ReducedError::BadSearchBox {
            t_lo: search.t_lo,
            t_hi: search.t_hi,
        });
    }
    if restarts == 0 {
        return Err(ReducedError::NoRestarts);
    }
    if k >= 2 && !matches!(ctx.case, ReducedCase::N5OrLcf { .. }) {
        return Err(ReducedError::UnsupportedCase {
            op: "maximize",
            case: ctx.case,
        });
    }

    let runs: Vec<RestartRun> = (0..restarts)
        .into_par_iter()
        .map(|r| run_restart(ctx, k, &search, seed, r as u64))
        .collect();

    let best_where = |pred: fn(&RestartRun) -> bool| -> Option<&RestartRun> {
        runs.iter().filter(|r| pred(r)).fold(None, |best, r| match best {
            Some(b) if r.value <= b.value => Some(b),
            _ => Some(r),
        })
    };

    if let Some(win) = best_where(|r| r.converged && !r.escaped) {
        return diagnose(ctx, &win.t, &win.xi);
    }
    if let Some(win) = best_where(|r| r.escaped) {
        return Ok(CriticalPointReport {
            t: win.t.clone(),
            xi: win.xi.clone(),
            value: win.value,
            grad_norm: win.grad_norm,
            hessian_eigenvalues: Vec::new(),
            degree_sign: DegreeSign::Degenerate,
            outcome: SearchOutcome::Boundary,
        });
    }
    let win = best_where(|_| true).expect("at least one restart ran");
    let mut report = diagnose(ctx, &win.t, &win.xi)?;
    report.outcome = SearchOutcome::Unconverged;
    Ok(report)
}

/// Probe a configuration: gradient and Hessian of the energy in the
/// chart centred there, with eigenvalues sorted ascending and the sign
/// of the Hessian determinant (Degenerate when an eigenvalue is within
/// 1e-6, relative, of zero).
pub fn diagnose(
    ctx: &ReducedEnergyContext,
    t: &[f64],
    xi: &[Vec<f64>],
) -> Result<CriticalPointReport, ReducedError> {
    tilde_e_k(ctx, t, xi)?;
    let chart = Chart::new(ctx, t.to_vec(), xi.to_vec());
    let f = |s: &[f64]| chart.eval(s);
    let zero = vec![0.0; chart.dim()];
    let value = f(&zero);
    let g = fd::gradient(&f, &zero, HESS_H);
    let grad_norm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
    let hess = fd::hessian(&f, &zero, HESS_H);
    let d = chart.dim();
    let hm = DMatrix::from_fn(d, d, |i, j| 0.5 * (hess[i][j] + hess[j][i]));
    let mut eig: Vec<f64> = hm.symmetric_eigen().eigenvalues.iter().copied().collect();
    eig.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    let max_abs = eig.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let tol = 1e-6 * max_abs.max(1.0);
    let degree_sign = if eig.iter().any(|v| v.abs() < tol) {
        DegreeSign::Degenerate
    } else if eig.iter().filter(|v| **v < 0.0).count() % 2 == 1 {
        DegreeSign::Negative
    } else {
        DegreeSign::Positive
    };
    let (t_out, xi_out) = chart.map(&zero);
    Ok(CriticalPointReport {
        t: t_out,
        xi: xi_out,
        value,
        grad_norm,
        hessian_eigenvalues: eig,
        degree_sign,
        outcome: SearchOutcome::Interior,
    })
}
