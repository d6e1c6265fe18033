use crate::{single::tilde_e, ReducedEnergyContext, ReducedError};
use nalgebra::{DMatrix, DVector};
use yamabe_constants::ReducedCase;

/// Points closer than this are treated as a coincident tuple.
const DISTINCT_DIST: f64 = 1e-9;

/// Condition numbers beyond this make the linear solves meaningless.
const COND_LIMIT: f64 = 1e12;

/// Symmetric k x k matrix with the mass on the diagonal and the Green's
/// function off it.
pub struct InteractionMatrix {
    pub k: usize,
    pub entries: DMatrix<f64>,
    pub points: Vec<Vec<f64>>,
    cond: f64,
}

impl InteractionMatrix {
    /// Spectral condition number, +inf when singular.
    pub fn cond(&self) -> f64 {
        self.cond
    }
}

fn check_tuple(ctx: &ReducedEnergyContext, xi: &[Vec<f64>]) -> Result<(), ReducedError> {
    if xi.is_empty() {
        return Err(ReducedError::EmptyTuple);
    }
    for p in xi {
        ctx.manifold.check_point(p)?;
    }
    for i in 0..xi.len() {
        for j in i + 1..xi.len() {
            let dist = ctx.manifold.dist(&xi[i], &xi[j]);
            if dist < DISTINCT_DIST {
                return Err(ReducedError::FatDiagonal { i, j, dist });
            }
        }
    }
    Ok(())
}

pub fn interaction_matrix(
    ctx: &ReducedEnergyContext,
    xi: &[Vec<f64>],
) -> Result<InteractionMatrix, ReducedError> {
    check_tuple(ctx, xi)?;
    let k = xi.len();
    let entries = DMatrix::from_fn(k, k, |i, j| {
        if i == j {
            ctx.manifold.mass(&xi[i])
        } else {
            ctx.manifold.green(&xi[i], &xi[j])
        }
    });
    let sv = entries.clone().svd(false, false).singular_values;
    let s_max = sv.iter().fold(0.0f64, |m, s| m.max(*s));
    let s_min = sv.iter().fold(f64::INFINITY, |m, s| m.min(*s));
    let cond = if s_min > 0.0 {
        s_max / s_min
    } else {
        f64::INFINITY
    };
    Ok(InteractionMatrix {
        k,
        entries,
        points: xi.to_vec(),
        cond,
    })
}

/// Quadratic-form energy <H, A^{-1} H> with H = (h(xi_1), ..., h(xi_k)).
///
/// Solved as a linear system; the matrix is rejected when its condition
/// number exceeds 1e12.
pub fn e_k(ctx: &ReducedEnergyContext, xi: &[Vec<f64>]) -> Result<f64, ReducedError> {
    let a = interaction_matrix(ctx, xi)?;
    if !(a.cond <= COND_LIMIT) {
        return Err(ReducedError::IllConditioned { cond: a.cond });
    }
    let h = DVector::from_fn(a.k, |i, _| ctx.manifold.h(&xi[i]));
    let x = a
        .entries
        .clone()
        .lu()
        .solve(&h)
        .ok_or(ReducedError::IllConditioned { cond: a.cond })?;
    Ok(h.dot(&x))
}

fn check_scales(t: &[f64], xi: &[Vec<f64>]) -> Result<(), ReducedError> {
    if t.len() != xi.len() {
        return Err(ReducedError::LengthMismatch {
            t_len: t.len(),
            xi_len: xi.len(),
        });
    }
    for &ti in t {
        if !(ti > 0.0 && ti.is_finite()) {
            return Err(ReducedError::NonPositiveScale(ti));
        }
    }
    Ok(())
}

/// Multi-bubble profile energy
///
///   c2 sum t_i^2 h(xi_i) - c3 sum t_i^(n-2) A_i
///     - c3 sum_{i != j} (t_i t_j)^((n-2)/2) G(xi_i, xi_j),
///
/// the pair sum running over ordered pairs. With one bubble this is
/// `tilde_e` on any branch; coupled bubbles are only defined on the
/// N5_OR_LCF branch.
pub fn tilde_e_k(
    ctx: &ReducedEnergyContext,
    t: &[f64],
    xi: &[Vec<f64>],
) -> Result<f64, ReducedError> {
    check_scales(t, xi)?;
    if t.len() == 1 {
        return tilde_e(ctx, t[0], &xi[0]);
    }
    check_tuple(ctx, xi)?;
    let n = match ctx.case {
        ReducedCase::N5OrLcf { n } => n,
        _ => {
            return Err(ReducedError::UnsupportedCase {
                op: "tilde_e_k",
                case: ctx.case,
            })
        }
    };
    let nf = n as f64;
    let c2 = ctx.constants.c2;
    let c3 = ctx.constants.c3;
    let mut value = 0.0;
    for (ti, p) in t.iter().zip(xi) {
        value += c2 * ti * ti * ctx.manifold.h(p);
        value -= c3 * ti.powf(nf - 2.0) * ctx.manifold.mass(p);
    }
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let g = ctx.manifold.green(&xi[i], &xi[j]);
            value -= 2.0 * c3 * (t[i] * t[j]).powf((nf - 2.0) / 2.0) * g;
        }
    }
    Ok(value)
}

/// The n = 6 rewriting of `tilde_e_k` as a quadratic form in T = (t_i^2):
/// c2 <T, H> - c3 <T, A T> with A the interaction matrix.
pub fn tilde_e_k_quadratic(
    ctx: &ReducedEnergyContext,
    t: &[f64],
    xi: &[Vec<f64>],
) -> Result<f64, ReducedError> {
    if ctx.case != (ReducedCase::N5OrLcf { n: 6 }) {
        return Err(ReducedError::UnsupportedCase {
            op: "tilde_e_k_quadratic",
            case: ctx.case,
        });
    }
    check_scales(t, xi)?;
    let a = interaction_matrix(ctx, xi)?;
    let big_t = DVector::from_fn(a.k, |i, _| t[i] * t[i]);
    let h = DVector::from_fn(a.k, |i, _| ctx.manifold.h(&xi[i]));
    Ok(ctx.constants.c2 * big_t.dot(&h) - ctx.constants.c3 * big_t.dot(&(&a.entries * &big_t)))
}

/// Stationary point of the n = 6 quadratic form in the T variables.
pub struct OptimalScales {
    /// T_0 = (c2 / 2 c3) A^{-1} H, in the squared-scale variables.
    pub t_squared: Vec<f64>,
    /// Whether every coordinate is positive, so that T_0 comes from an
    /// admissible tuple of scales. A failure is reported, not an error.
    pub all_positive: bool,
}

pub fn optimal_t(
    ctx: &ReducedEnergyContext,
    xi: &[Vec<f64>],
) -> Result<OptimalScales, ReducedError> {
    if ctx.case != (ReducedCase::N5OrLcf { n: 6 }) {
        return Err(ReducedError::UnsupportedCase {
            op: "optimal_t",
            case: ctx.case,
        });
    }
    let a = interaction_matrix(ctx, xi)?;
    if !(a.cond <= COND_LIMIT) {
        return Err(ReducedError::IllConditioned { cond: a.cond });
    }
    let h = DVector::from_fn(a.k, |i, _| ctx.manifold.h(&xi[i]));
    let x = a
        .entries
        .clone()
        .lu()
        .solve(&h)
        .ok_or(ReducedError::IllConditioned { cond: a.cond })?;
    let scale = ctx.constants.c2 / (2.0 * ctx.constants.c3);
    let t_squared: Vec<f64> = x.iter().map(|v| scale * v).collect();
    let all_positive = t_squared.iter().all(|&v| v > 0.0);
    Ok(OptimalScales {
        t_squared,
        all_positive,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::single::t_star;
    use std::sync::Arc;
    use yamabe_manifold::{round_sphere, Field, GreenField, SyntheticModel};

    fn axis(n: u32, i: usize) -> Vec<f64> {
        let mut x = vec![0.0; n as usize + 1];
        x[i] = 1.0;
        x
    }

    fn mass_ctx(n: u32, mass: f64, h: f64) -> ReducedEnergyContext {
        let mut s = SyntheticModel::new(n, true);
        s.mass = Field::Constant(mass);
        s.h = Field::Constant(h);
        ReducedEnergyContext::new(s.build().unwrap(), None).unwrap()
    }

    #[test]
    fn matrix_entries_diagonal_and_green() {
        let ctx = mass_ctx(6, 2.0, 1.4);
        let a = interaction_matrix(&ctx, &[axis(6, 0)]).unwrap();
        assert_eq!(a.k, 1);
        assert_eq!(a.entries[(0, 0)], 2.0);

        // Zero-mass sphere: zero diagonal, symmetric Green off-diagonal.
        let m = round_sphere(5, |_| 1.0).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(5, 0), axis(5, 1)];
        let g = ctx.manifold.green(&pts[0], &pts[1]);
        assert!(g > 0.0);
        let a = interaction_matrix(&ctx, &pts).unwrap();
        assert_eq!(a.entries[(0, 0)], 0.0);
        assert_eq!(a.entries[(1, 1)], 0.0);
        assert_eq!(a.entries[(0, 1)], g);
        assert_eq!(a.entries[(1, 0)], g);
        assert!((a.cond() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn matrix_respects_permutations_and_rejects_coincident_points() {
        let m = round_sphere(6, |x: &[f64]| 1.0 + 0.3 * x[1]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(6, 0), axis(6, 2), axis(6, 4)];
        let a = interaction_matrix(&ctx, &pts).unwrap();
        let perm = [2usize, 0, 1];
        let permuted: Vec<Vec<f64>> = perm.iter().map(|&i| pts[i].clone()).collect();
        let b = interaction_matrix(&ctx, &permuted).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(b.entries[(i, j)], a.entries[(perm[i], perm[j])]);
            }
        }

        let err = interaction_matrix(&ctx, &[axis(6, 0), axis(6, 0)])
            .map(|_| ())
            .unwrap_err();
        assert!(matches!(err, ReducedError::FatDiagonal { .. }));
    }

    #[test]
    fn e_k_closed_forms() {
        // k = 1: h^2 / A.
        let ctx = mass_ctx(6, 2.0, 1.4);
        let v = e_k(&ctx, &[axis(6, 0)]).unwrap();
        assert!((v - 1.4 * 1.4 / 2.0).abs() < 1e-15);

        // Sphere pair: E_2 = 2 h1 h2 / G.
        let m = round_sphere(6, |x: &[f64]| 1.0 + 0.5 * x[0] + 0.2 * x[1]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(6, 0), axis(6, 1)];
        let g = ctx.manifold.green(&pts[0], &pts[1]);
        let h1 = ctx.manifold.h(&pts[0]);
        let h2 = ctx.manifold.h(&pts[1]);
        let v = e_k(&ctx, &pts).unwrap();
        assert!((v / (2.0 * h1 * h2 / g) - 1.0).abs() < 1e-13);

        // Sphere triple at mutually orthogonal points: all pair kernels
        // equal g, and inverting the hollow matrix by hand gives
        // E_3 = ((sum h)^2 - 2 sum h^2) / (2 g).
        let m = round_sphere(6, |x: &[f64]| 1.0 + 0.5 * x[0] + 0.2 * x[1]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(6, 0), axis(6, 1), axis(6, 2)];
        let h: Vec<f64> = pts.iter().map(|p| ctx.manifold.h(p)).collect();
        let sum: f64 = h.iter().sum();
        let sum_sq: f64 = h.iter().map(|v| v * v).sum();
        let expect = (sum * sum - 2.0 * sum_sq) / (2.0 * g);
        let v = e_k(&ctx, &pts).unwrap();
        assert!((v / expect - 1.0).abs() < 1e-13);
    }

    #[test]
    fn e_k_rejects_singular_matrices() {
        // One bubble on the sphere: the 1 x 1 matrix is exactly zero.
        let m = round_sphere(5, |_| 1.0).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let err = e_k(&ctx, &[axis(5, 0)]).map(|_| ()).unwrap_err();
        assert!(matches!(err, ReducedError::IllConditioned { .. }));
    }

    #[test]
    fn tilde_e_k_reduces_to_tilde_e_for_one_bubble() {
        let mut s = SyntheticModel::new(7, false);
        s.weyl = Field::Constant(0.4);
        s.h = Field::Constant(1.2);
        let ctx = ReducedEnergyContext::new(s.build().unwrap(), None).unwrap();
        let xi = axis(7, 0);
        let a = tilde_e_k(&ctx, &[0.8], &[xi.clone()]).unwrap();
        let b = tilde_e(&ctx, 0.8, &xi).unwrap();
        assert_eq!(a, b);

        // Coupled bubbles exist only on the N5_OR_LCF branch.
        let err = tilde_e_k(&ctx, &[0.8, 0.9], &[axis(7, 0), axis(7, 1)])
            .map(|_| ())
            .unwrap_err();
        assert!(matches!(err, ReducedError::UnsupportedCase { .. }));
    }

    #[test]
    fn tilde_e_k_matches_the_written_out_pair_sum() {
        for n in [5u32, 6] {
            let ctx = mass_ctx(n, 0.7, 1.3);
            let nf = n as f64;
            let pts = [axis(n, 0), axis(n, 1)];
            let (t1, t2) = (0.3, 0.5);
            let g = ctx.manifold.green(&pts[0], &pts[1]);
            let c2 = ctx.constants.c2;
            let c3 = ctx.constants.c3;
            let expect = c2 * (t1 * t1 + t2 * t2) * 1.3
                - c3 * (t1.powf(nf - 2.0) + t2.powf(nf - 2.0)) * 0.7
                - 2.0 * c3 * (t1 * t2).powf((nf - 2.0) / 2.0) * g;
            let v = tilde_e_k(&ctx, &[t1, t2], &pts).unwrap();
            assert!((v / expect - 1.0).abs() < 1e-14, "n={n}");
        }
    }

    #[test]
    fn quadratic_rewriting_agrees_for_n6() {
        let ctx = mass_ctx(6, 0.7, 1.3);
        let pts = [axis(6, 0), axis(6, 3), axis(6, 5)];
        let t = [0.31, 0.52, 0.47];
        let sum_form = tilde_e_k(&ctx, &t, &pts).unwrap();
        let quad_form = tilde_e_k_quadratic(&ctx, &t, &pts).unwrap();
        assert!((sum_form / quad_form - 1.0).abs() < 1e-12);

        let ctx5 = mass_ctx(5, 0.7, 1.3);
        let err = tilde_e_k_quadratic(&ctx5, &[0.3], &[axis(5, 0)])
            .map(|_| ())
            .unwrap_err();
        assert!(matches!(err, ReducedError::UnsupportedCase { .. }));
    }

    #[test]
    fn tilde_e_k_is_permutation_invariant() {
        let m = round_sphere(5, |x: &[f64]| 1.0 + 0.4 * x[2]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(5, 0), axis(5, 1), axis(5, 4)];
        let t = [0.21, 0.35, 0.44];
        let v = tilde_e_k(&ctx, &t, &pts).unwrap();
        let perm = [1usize, 2, 0];
        let tp: Vec<f64> = perm.iter().map(|&i| t[i]).collect();
        let pp: Vec<Vec<f64>> = perm.iter().map(|&i| pts[i].clone()).collect();
        let w = tilde_e_k(&ctx, &tp, &pp).unwrap();
        assert!((v - w).abs() <= 1e-13 * v.abs().max(1.0));
    }

    #[test]
    fn vanishing_interaction_recovers_superposition() {
        // A constant custom Green's function of size c shifts the energy
        // from the decoupled sum by exactly -2 c3 (t1 t2)^2 c in n = 6.
        let decoupled = |c: f64| {
            let mut s = SyntheticModel::new(6, true);
            s.mass = Field::Constant(0.7);
            s.h = Field::Constant(1.3);
            s.green = GreenField::Custom(Arc::new(move |_: &[f64], _: &[f64]| c));
            let ctx = ReducedEnergyContext::new(s.build().unwrap(), None).unwrap();
            let pts = [axis(6, 0), axis(6, 1)];
            let (t1, t2) = (0.3, 0.5);
            let coupled = tilde_e_k(&ctx, &[t1, t2], &pts).unwrap();
            let single_sum = tilde_e(&ctx, t1, &pts[0]).unwrap() + tilde_e(&ctx, t2, &pts[1]).unwrap();
            (coupled, single_sum, ctx.constants.c3)
        };
        for c in [1e-3, 1e-6] {
            let (coupled, single_sum, c3) = decoupled(c);
            let gap = single_sum - coupled;
            let expect = 2.0 * c3 * (0.3f64 * 0.5).powi(2) * c;
            assert!((gap / expect - 1.0).abs() < 1e-9, "c={c}");
        }
    }

    #[test]
    fn optimal_scales_match_t_star_and_hand_inverses() {
        // k = 1: T_0 = (c2 / 2 c3) h / A equals t_star^2.
        let ctx = mass_ctx(6, 2.0, 1.4);
        let xi = axis(6, 0);
        let opt = optimal_t(&ctx, &[xi.clone()]).unwrap();
        assert!(opt.all_positive);
        let ts = t_star(&ctx, &xi).unwrap();
        assert!((opt.t_squared[0] / (ts * ts) - 1.0).abs() < 1e-12);

        // Sphere pair: T_0 = (c2 / 2 c3) (h2/G, h1/G), and the gradient
        // c2 H - 2 c3 A T_0 vanishes there.
        let m = round_sphere(6, |x: &[f64]| 1.0 + 0.5 * x[0] + 0.2 * x[1]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(6, 0), axis(6, 1)];
        let g = ctx.manifold.green(&pts[0], &pts[1]);
        let h1 = ctx.manifold.h(&pts[0]);
        let h2 = ctx.manifold.h(&pts[1]);
        let opt = optimal_t(&ctx, &pts).unwrap();
        assert!(opt.all_positive);
        let scale = ctx.constants.c2 / (2.0 * ctx.constants.c3);
        assert!((opt.t_squared[0] / (scale * h2 / g) - 1.0).abs() < 1e-13);
        assert!((opt.t_squared[1] / (scale * h1 / g) - 1.0).abs() < 1e-13);
        let a = interaction_matrix(&ctx, &pts).unwrap();
        let t0 = DVector::from_vec(opt.t_squared.clone());
        let h = DVector::from_vec(vec![h1, h2]);
        let grad = &h * ctx.constants.c2 - (&a.entries * &t0) * (2.0 * ctx.constants.c3);
        assert!(grad.norm() <= 1e-10 * (ctx.constants.c2 * h.norm()));

        // A sign change in h flips a coordinate of T_0; that is reported
        // through the flag, not an error.
        let m = round_sphere(6, |x: &[f64]| x[2]).unwrap();
        let ctx = ReducedEnergyContext::new(m, None).unwrap();
        let pts = [axis(6, 2), {
            let mut p = vec![0.0; 7];
            p[2] = -1.0;
            p
        }];
        let opt = optimal_t(&ctx, &pts).unwrap();
        assert!(!opt.all_positive);
        assert!(opt.t_squared[0] < 0.0 && opt.t_squared[1] > 0.0);

        // Branch guard: only n = 6 lcf has the quadratic structure.
        let ctx5 = mass_ctx(5, 0.7, 1.3);
        let err = optimal_t(&ctx5, &[axis(5, 0)]).map(|_| ()).unwrap_err();
        assert!(matches!(err, ReducedError::UnsupportedCase { .. }));
    }
}
