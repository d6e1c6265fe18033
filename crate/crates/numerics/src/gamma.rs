//! Gamma, log-gamma, and beta via the Lanczos approximation (g = 7, 9 terms).
//!
//! The coefficient set is the classical g=7 table; with the reflection
//! formula below it delivers relative error well under 1e-13 across the
//! range used here (arguments in roughly [0.25, 60]).

/// Lanczos coefficients for g = 7.
const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const SQRT_TWO_PI: f64 = 2.506_628_274_631_000_5;

fn lanczos_series(x: f64) -> f64 {
    let mut a = LANCZOS_COEF[0];
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64 - 1.0);
    }
    a
}

/// Gamma function for positive arguments. Returns NaN for x <= 0.
pub fn gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        // Reflection keeps the series argument away from the pole.
        return std::f64::consts::PI / ((std::f64::consts::PI * x).sin() * gamma(1.0 - x));
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    SQRT_TWO_PI * t.powf(z + 0.5) * (-t).exp() * lanczos_series(x)
}

/// Natural log of gamma for positive arguments. Returns NaN for x <= 0.
pub fn ln_gamma(x: f64) -> f64 {
    if !(x > 0.0) {
        return f64::NAN;
    }
    if x < 0.5 {
        let s = (std::f64::consts::PI * x).sin();
        return std::f64::consts::PI.ln() - s.ln() - ln_gamma(1.0 - x);
    }
    let z = x - 1.0;
    let t = z + LANCZOS_G + 0.5;
    SQRT_TWO_PI.ln() + (z + 0.5) * t.ln() - t + lanczos_series(x).ln()
}

/// Euler beta function B(a, b) for positive arguments.
///
/// Small arguments go through the gamma product directly; large ones through
/// log space to dodge overflow. The crossover keeps both paths in their
/// accurate regimes.
pub fn beta(a: f64, b: f64) -> f64 {
    if !(a > 0.0) || !(b > 0.0) {
        return f64::NAN;
    }
    if a + b < 40.0 {
        gamma(a) * gamma(b) / gamma(a + b)
    } else {
        (ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)).exp()
    }
}
