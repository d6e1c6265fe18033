//! Globally adaptive Gauss-Kronrod quadrature.
//!
//! The G7K15 pair is applied per panel; the panel with the largest error
//! estimate is bisected until the summed estimate meets the requested
//! tolerance. The strategy is deterministic: ties in the error ordering are
//! broken by panel position, and the final value is a compensated sum over
//! panels ordered left to right.
//!
//! Integrands with known awkward points (kinks, concentration scales) should
//! be integrated through [`integrate_breakpoints`] so panel edges land on
//! them from the start.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use crate::sum::Accumulator;

/// Abscissae of the 15-point Kronrod rule on [-1, 1], positive half.
/// Odd indices (1, 3, 5, 7) are the embedded 7-point Gauss nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];

const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

#[derive(Debug, Error)]
pub enum QuadError {
    #[error("integrand returned a non-finite value at x = {x}")]
    NonFinite { x: f64 },
    #[error("tolerance not reached: estimated error {achieved:.3e} after {panels} panels (requested {requested:.3e})")]
    Tolerance {
        achieved: f64,
        requested: f64,
        panels: usize,
    },
    #[error("integration bounds are not finite and increasing")]
    BadBounds,
}

#[derive(Clone, Copy, Debug)]
pub struct QuadResult {
    pub value: f64,
    /// Summed Kronrod-minus-Gauss error estimates; pessimistic for smooth panels.
    pub error_estimate: f64,
    pub evaluations: usize,
    pub panels: usize,
}

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.a == other.a
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap on error; ties resolved by left endpoint for determinism.
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn g7k15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel, QuadError> {
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let mut k = Accumulator::new();
    let mut g = Accumulator::new();
    for (i, (&x, &wk)) in XGK.iter().zip(WGK.iter()).enumerate() {
        let eval = |t: f64| -> Result<f64, QuadError> {
            let v = f(t);
            if v.is_finite() {
                Ok(v)
            } else {
                Err(QuadError::NonFinite { x: t })
            }
        };
        if x == 0.0 {
            let v = eval(mid)?;
            k.add(wk * v);
            g.add(WG[3] * v);
        } else {
            let v1 = eval(mid - half * x)?;
            let v2 = eval(mid + half * x)?;
            k.add(wk * (v1 + v2));
            if i % 2 == 1 {
                g.add(WG[i / 2] * (v1 + v2));
            }
        }
    }
    let value = k.value() * half;
    let error = ((k.value() - g.value()) * half).abs();
    Ok(Panel { a, b, value, error })
}

/// Adaptive integral of `f` over `[a, b]`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult, QuadError> {
    integrate_breakpoints(f, &[a, b], abs_tol, rel_tol)
}

/// Panel budget. Generous: hitting it means the integrand or the tolerance
/// is wrong for this rule, and the caller sees a Tolerance error.
const MAX_PANELS: usize = 1 << 18;

/// Adaptive integral over `[pts[0], pts.last()]` with initial panel edges at
/// every interior breakpoint. `pts` must be finite and strictly increasing.
pub fn integrate_breakpoints<F: Fn(f64) -> f64>(
    f: F,
    pts: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult, QuadError> {
    if pts.len() < 2 || pts.iter().any(|x| !x.is_finite()) || pts.windows(2).any(|w| w[0] >= w[1])
    {
        return Err(QuadError::BadBounds);
    }
    let mut heap = BinaryHeap::new();
    let mut evaluations = 0usize;
    // Running totals are kept incrementally; drift is refreshed on acceptance.
    let mut total_error = 0.0f64;
    let mut total_value = 0.0f64;
    for w in pts.windows(2) {
        let p = g7k15(&f, w[0], w[1])?;
        evaluations += 15;
        total_error += p.error;
        total_value += p.value;
        heap.push(p);
    }

    loop {
        let target = abs_tol.max(rel_tol * total_value.abs());
        if total_error <= target || heap.len() >= MAX_PANELS {
            let exact_error: f64 = heap.iter().map(|p| p.error).sum();
            if exact_error > target {
                return Err(QuadError::Tolerance {
                    achieved: exact_error,
                    requested: target,
                    panels: heap.len(),
                });
            }
            // Re-sum left to right for a deterministic, compensated result.
            let mut panels: Vec<Panel> = heap.into_vec();
            panels.sort_by(|p, q| p.a.total_cmp(&q.a));
            let mut acc = Accumulator::new();
            for p in &panels {
                acc.add(p.value);
            }
            return Ok(QuadResult {
                value: acc.value(),
                error_estimate: exact_error,
                evaluations,
                panels: panels.len(),
            });
        }
        let worst = heap.pop().expect("heap is nonempty");
        total_error -= worst.error;
        total_value -= worst.value;
        let mid = 0.5 * (worst.a + worst.b);
        if !(worst.a < mid && mid < worst.b) {
            // Panel narrowed to machine width; keep it and stop splitting it.
            total_value += worst.value;
            heap.push(Panel {
                error: 0.0,
                ..worst
            });
            continue;
        }
        let left = g7k15(&f, worst.a, mid)?;
        let right = g7k15(&f, mid, worst.b)?;
        evaluations += 30;
        total_error += left.error + right.error;
        total_value += left.value + right.value;
        heap.push(left);
        heap.push(right);
    }
}

/// Adaptive integral of `f` over `[0, inf)` via the substitution
/// `r = s/(1-s)`, with optional breakpoints given in `r` coordinates.
///
/// The integrand must decay fast enough to be integrable; nodes never touch
/// the right endpoint, so decaying tails are sampled at finite `r` only.
pub fn integrate_half_line<F: Fn(f64) -> f64>(
    f: F,
    breaks_r: &[f64],
    abs_tol: f64,
    rel_tol: f64,
) -> Result<QuadResult, QuadError> {
    let mut pts = vec![0.0];
    for &r in breaks_r {
        if r.is_finite() && r > 0.0 {
            pts.push(r / (1.0 + r));
        }
    }
    pts.push(0.5);
    pts.push(1.0);
    pts.sort_by(f64::total_cmp);
    pts.dedup();
    integrate_breakpoints(
        move |s| {
            let om = 1.0 - s;
            let r = s / om;
            f(r) / (om * om)
        },
        &pts,
        abs_tol,
        rel_tol,
    )
}
