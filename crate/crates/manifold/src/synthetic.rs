//! Sphere-backed synthetic models: the round-sphere geometry with
//! user-chosen analytic fields, for experiments that need positive mass
//! or nonzero Weyl norm. Field families are closed under a small config
//! grammar; arbitrary closures are accepted through the builder API.

use std::f64::consts::PI;
use std::sync::Arc;

use crate::omega;
use yamabe_numerics::rng::SplitMix64;

use crate::model::{dot, ManifoldModel, OnePointField, TwoPointField};
use crate::ManifoldError;

/// A scalar field on the sphere, evaluable at ambient unit vectors.
#[derive(Clone)]
pub enum Field {
    Zero,
    Constant(f64),
    /// c0 + c1 x_1 + ... + c_m x_m in ambient coordinates, m <= n+1.
    Affine(Vec<f64>),
    Custom(OnePointField),
}

impl Field {
    fn eval(&self, x: &[f64]) -> f64 {
        match self {
            Field::Zero => 0.0,
            Field::Constant(c) => *c,
            Field::Affine(coefs) => {
                let mut acc = coefs[0];
                for (c, xi) in coefs[1..].iter().zip(x) {
                    acc += c * xi;
                }
                acc
            }
            Field::Custom(f) => f(x),
        }
    }

    fn into_closure(self) -> OnePointField {
        match self {
            Field::Custom(f) => f,
            other => Arc::new(move |x: &[f64]| other.eval(x)),
        }
    }

    fn is_statically_zero(&self) -> bool {
        matches!(self, Field::Zero | Field::Constant(0.0))
    }
}

/// Green's function families for synthetic models.
#[derive(Clone)]
pub enum GreenField {
    /// The round sphere's chordal kernel.
    Sphere,
    /// Sphere kernel plus Lambda(x, xi) (mass(x) + mass(xi)) / 2; this is
    /// the symmetric extension whose conformal expansion at xi has
    /// constant term mass(xi).
    SpherePlusMass,
    Custom(TwoPointField),
}

/// Builder for a synthetic model; `build` validates and wraps the fields.
#[derive(Clone)]
pub struct SyntheticModel {
    pub n: u32,
    pub lcf: bool,
    pub r0: Option<f64>,
    pub h: Field,
    pub mass: Field,
    pub weyl: Field,
    /// Defaults to the sphere's n(n-1) when absent.
    pub scal: Option<Field>,
    pub green: GreenField,
}

impl SyntheticModel {
    pub fn new(n: u32, lcf: bool) -> Self {
        SyntheticModel {
            n,
            lcf,
            r0: None,
            h: Field::Constant(1.0),
            mass: Field::Zero,
            weyl: Field::Zero,
            scal: None,
            green: GreenField::Sphere,
        }
    }

    /// Validate and wrap. Green symmetry and positivity are checked on
    /// 100 random pairs drawn from a fixed internal stream, so the check
    /// is deterministic.
    pub fn build(self) -> Result<ManifoldModel, ManifoldError> {
        if self.n < 4 {
            return Err(ManifoldError::DimensionTooSmall(self.n));
        }
        let r0 = self.r0.unwrap_or_else(|| f64::min(1.0, PI / 4.0));
        if !(r0 > 0.0 && r0 < PI) {
            return Err(ManifoldError::BadRadius(r0));
        }
        if self.lcf && !self.weyl.is_statically_zero() {
            return Err(ManifoldError::LcfWeylConflict);
        }
        let nf = self.n as f64;
        for field in [&self.h, &self.mass, &self.weyl] {
            if let Field::Affine(coefs) = field {
                if coefs.is_empty() || coefs.len() > self.n as usize + 2 {
                    return Err(ManifoldError::Config {
                        line: 0,
                        message: format!(
                            "affine field takes 1..={} coefficients, got {}",
                            self.n + 2,
                            coefs.len()
                        ),
                    });
                }
            }
        }

        let mass_fn = self.mass.into_closure();
        let beta_inv = 1.0 / ((nf - 2.0) * omega(self.n - 1));
        let sphere_green = move |x: &[f64], xi: &[f64]| {
            let chord2: f64 = x.iter().zip(xi).map(|(a, b)| (a - b) * (a - b)).sum();
            if chord2 == 0.0 {
                return f64::INFINITY;
            }
            beta_inv * chord2.powf((2.0 - nf) / 2.0)
        };
        let green_fn: TwoPointField = match self.green {
            GreenField::Sphere => Arc::new(sphere_green),
            GreenField::SpherePlusMass => {
                let mass = mass_fn.clone();
                Arc::new(move |x: &[f64], xi: &[f64]| {
                    let lam = (2.0 / (1.0 + dot(x, xi))).powf((nf - 2.0) / 2.0);
                    sphere_green(x, xi) + lam * 0.5 * (mass(x) + mass(xi))
                })
            }
            GreenField::Custom(f) => f,
        };

        let ambient = self.n as usize + 1;
        let mut rng = SplitMix64::substream(0x9e3f_a217, 1);
        for _ in 0..100 {
            let x = rng.unit_vector(ambient);
            let y = rng.unit_vector(ambient);
            let forward = green_fn(&x, &y);
            let backward = green_fn(&y, &x);
            if !(forward > 0.0) {
                return Err(ManifoldError::NonPositiveGreen(forward));
            }
            if (forward - backward).abs() > 1e-10 * forward.abs().max(1.0) {
                return Err(ManifoldError::AsymmetricGreen { forward, backward });
            }
        }

        let scal_fn = match self.scal {
            Some(f) => f.into_closure(),
            None => Arc::new(move |_: &[f64]| nf * (nf - 1.0)),
        };
        Ok(ManifoldModel {
            n: self.n,
            lcf: self.lcf,
            r0,
            is_sphere: false,
            green_fn,
            mass_fn,
            weyl_fn: self.weyl.into_closure(),
            scal_fn,
            h_fn: self.h.into_closure(),
        })
    }
}

/// Parse the key=value config grammar:
///
/// ```text
/// n = 7                      # required
/// lcf = true                 # default false
/// r0 = 0.5                   # default min(1, pi/4)
/// h = affine 1 0.5           # zero | constant v | affine c0 c1 ...
/// mass = constant 2.0
/// weyl = zero
/// scal = constant 42         # default constant n(n-1)
/// green = sphere_plus_mass   # sphere | sphere_plus_mass
/// ```
///
/// `#` starts a comment; unknown or duplicate keys are errors.
pub fn from_config(text: &str) -> Result<SyntheticModel, ManifoldError> {
    let mut n: Option<(u32, usize)> = None;
    let mut lcf: Option<bool> = None;
    let mut r0 = None;
    let mut h = None;
    let mut mass = None;
    let mut weyl = None;
    let mut scal = None;
    let mut green = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| ManifoldError::Config {
            line,
            message: "expected key = value".into(),
        })?;
        let key = key.trim();
        let value = value.trim();
        let dup = |line| ManifoldError::Config {
            line,
            message: format!("duplicate key `{key}`"),
        };
        match key {
            "n" => {
                if n.is_some() {
                    return Err(dup(line));
                }
                let v = value.parse::<u32>().map_err(|e| ManifoldError::Config {
                    line,
                    message: format!("bad dimension: {e}"),
                })?;
                n = Some((v, line));
            }
            "lcf" => {
                if lcf.is_some() {
                    return Err(dup(line));
                }
                lcf = Some(value.parse::<bool>().map_err(|e| ManifoldError::Config {
                    line,
                    message: format!("bad boolean: {e}"),
                })?);
            }
            "r0" => {
                if r0.is_some() {
                    return Err(dup(line));
                }
                let v = value.parse::<f64>().map_err(|e| ManifoldError::Config {
                    line,
                    message: format!("bad radius: {e}"),
                })?;
                r0 = Some(v);
            }
            "h" | "mass" | "weyl" | "scal" => {
                let slot = match key {
                    "h" => &mut h,
                    "mass" => &mut mass,
                    "weyl" => &mut weyl,
                    _ => &mut scal,
                };
                if slot.is_some() {
                    return Err(dup(line));
                }
                *slot = Some(parse_field(value, line)?);
            }
            "green" => {
                if green.is_some() {
                    return Err(dup(line));
                }
                green = Some(match value {
                    "sphere" => GreenField::Sphere,
                    "sphere_plus_mass" => GreenField::SpherePlusMass,
                    other => {
                        return Err(ManifoldError::Config {
                            line,
                            message: format!("unknown green family `{other}`"),
                        })
                    }
                });
            }
            other => {
                return Err(ManifoldError::Config {
                    line,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }

    let (n, n_line) = n.ok_or(ManifoldError::Config {
        line: 0,
        message: "missing required key `n`".into(),
    })?;
    let mut model = SyntheticModel::new(n, lcf.unwrap_or(false));
    model.r0 = r0;
    if let Some(f) = h {
        model.h = f;
    }
    if let Some(f) = mass {
        model.mass = f;
    }
    if let Some(f) = weyl {
        model.weyl = f;
    }
    model.scal = scal;
    if let Some(g) = green {
        model.green = g;
    }
    for field in [&model.h, &model.mass, &model.weyl] {
        if let Field::Affine(coefs) = field {
            if coefs.len() > n as usize + 2 {
                return Err(ManifoldError::Config {
                    line: n_line,
                    message: format!(
                        "affine field has {} coefficients but n = {n} allows at most {}",
                        coefs.len(),
                        n + 2
                    ),
                });
            }
        }
    }
    Ok(model)
}

fn parse_field(value: &str, line: usize) -> Result<Field, ManifoldError> {
    let mut tokens = value.split_whitespace();
    let family = tokens.next().ok_or_else(|| ManifoldError::Config {
        line,
        message: "empty field spec".into(),
    })?;
    let numbers: Result<Vec<f64>, _> = tokens.map(str::parse::<f64>).collect();
    let numbers = numbers.map_err(|e| ManifoldError::Config {
        line,
        message: format!("bad coefficient: {e}"),
    })?;
    match family {
        "zero" if numbers.is_empty() => Ok(Field::Zero),
        "zero" => Err(ManifoldError::Config {
            line,
            message: "zero takes no coefficients".into(),
        }),
        "constant" if numbers.len() == 1 => Ok(Field::Constant(numbers[0])),
        "constant" => Err(ManifoldError::Config {
            line,
            message: "constant takes exactly one value".into(),
        }),
        "affine" if !numbers.is_empty() => Ok(Field::Affine(numbers)),
        "affine" => Err(ManifoldError::Config {
            line,
            message: "affine needs at least the constant coefficient".into(),
        }),
        other => Err(ManifoldError::Config {
            line,
            message: format!("unknown field family `{other}`"),
        }),
    }
}

/// Parse and build in one step.
pub fn synthetic_from_config(text: &str) -> Result<ManifoldModel, ManifoldError> {
    from_config(text)?.build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_config_round_trip() {
        let text = "
            # a non-lcf model with Weyl curvature
            n = 6
            lcf = false
            r0 = 0.5
            h = affine 1 0.5
            mass = zero
            weyl = constant 2.0
            green = sphere
            scal = constant 42
        ";
        let m = synthetic_from_config(text).unwrap();
        assert_eq!(m.n, 6);
        assert!(!m.lcf);
        assert_eq!(m.r0, 0.5);
        let p = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(m.h(&p), 1.5);
        assert_eq!(m.mass(&p), 0.0);
        assert_eq!(m.weyl_norm(&p), 2.0);
        assert_eq!(m.scal(&p), 42.0);
        assert!(!m.is_sphere());
    }

    #[test]
    fn defaults_fill_in() {
        let m = synthetic_from_config("n = 5\nlcf = true").unwrap();
        assert!(m.lcf);
        assert_eq!(m.r0, f64::min(1.0, PI / 4.0));
        let p = vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0];
        assert_eq!(m.h(&p), 1.0);
        assert_eq!(m.scal(&p), 20.0);
    }

    #[test]
    fn unknown_key_is_an_error_with_line_number() {
        let err = from_config("n = 5\nfoo = 1").map(|_| ()).unwrap_err();
        match err {
            ManifoldError::Config { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("unknown key"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn duplicate_and_malformed_lines_error() {
        assert!(from_config("n = 5\nn = 6").is_err());
        assert!(from_config("n five").is_err());
        assert!(from_config("n = 5\nh = affine").is_err());
        assert!(from_config("n = 5\nh = constant 1 2").is_err());
        assert!(from_config("n = 5\ngreen = cube").is_err());
        assert!(from_config("h = constant 1").is_err()); // missing n
    }

    #[test]
    fn affine_coefficient_budget() {
        // n = 4 allows c0 plus 5 ambient coefficients.
        assert!(from_config("n = 4\nh = affine 1 1 1 1 1 1").is_ok());
        assert!(from_config("n = 4\nh = affine 1 1 1 1 1 1 1").is_err());
    }

    #[test]
    fn asymmetric_custom_green_is_rejected() {
        let mut model = SyntheticModel::new(5, true);
        model.green = GreenField::Custom(Arc::new(|x: &[f64], y: &[f64]| {
            2.0 + 0.5 * (x[0] - y[0]) // positive, but the antisymmetric part breaks the contract
        }));
        assert!(matches!(
            model.build(),
            Err(ManifoldError::AsymmetricGreen { .. })
        ));
    }

    #[test]
    fn nonpositive_custom_green_is_rejected() {
        let mut model = SyntheticModel::new(5, true);
        model.green = GreenField::Custom(Arc::new(|_: &[f64], _: &[f64]| -1.0));
        assert!(matches!(
            model.build(),
            Err(ManifoldError::NonPositiveGreen(_))
        ));
    }

    #[test]
    fn lcf_with_weyl_conflicts() {
        let mut model = SyntheticModel::new(6, true);
        model.weyl = Field::Constant(2.0);
        assert!(matches!(
            model.build(),
            Err(ManifoldError::LcfWeylConflict)
        ));
    }

    #[test]
    fn sphere_plus_mass_green_is_symmetric_and_shifted() {
        let text = "
            n = 5
            lcf = true
            mass = constant 0.7
            green = sphere_plus_mass
        ";
        let m = synthetic_from_config(text).unwrap();
        let x = vec![1.0, 0.0, 0.0, 0.0, 0.0, 0.0];
        let y = vec![0.0, 1.0, 0.0, 0.0, 0.0, 0.0];
        let base = synthetic_from_config("n = 5\nlcf = true").unwrap();
        // At dot = 0 the conformal factor is 2^{(n-2)/2}.
        let want = base.green(&x, &y) + 0.7 * 2.0f64.powf(1.5);
        let got = m.green(&x, &y);
        assert!(((got - want) / want).abs() < 1e-14);
        assert_eq!(m.green(&x, &y), m.green(&y, &x));
    }

    #[test]
    fn custom_field_closure_is_used() {
        let mut model = SyntheticModel::new(4, true);
        model.h = Field::Custom(Arc::new(|x: &[f64]| x[0] * x[0]));
        let m = model.build().unwrap();
        let p = vec![0.6, 0.8, 0.0, 0.0, 0.0];
        assert!((m.h(&p) - 0.36).abs() < 1e-15);
    }

    #[test]
    fn bad_radius_rejected() {
        let mut model = SyntheticModel::new(5, true);
        model.r0 = Some(-0.1);
        assert!(matches!(model.build(), Err(ManifoldError::BadRadius(_))));
    }
}
