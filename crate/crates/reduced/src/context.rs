use crate::ReducedError;
use yamabe_constants::{reduced_constants, ReducedCase, ReducedConstants};
use yamabe_manifold::ManifoldModel;

/// A manifold model paired with the frozen constants of its reduced case.
///
/// `epsilon` is the perturbation size. Only the n = 4 branch needs it to
/// evaluate energies (the scale law is exponential in 1/epsilon there);
/// the other branches carry it along untouched, so it may be `None` for
/// them.
pub struct ReducedEnergyContext {
    pub case: ReducedCase,
    pub constants: ReducedConstants,
    pub manifold: ManifoldModel,
    pub epsilon: Option<f64>,
}

impl ReducedEnergyContext {
    pub fn new(manifold: ManifoldModel, epsilon: Option<f64>) -> Result<Self, ReducedError> {
        let case = manifold.reduced_case();
        if let Some(eps) = epsilon {
            if !(eps > 0.0 && eps.is_finite()) {
                return Err(ReducedError::BadEpsilon(eps));
            }
        }
        if case == ReducedCase::N4 && epsilon.is_none() {
            return Err(ReducedError::MissingEpsilon(case));
        }
        let constants = reduced_constants(case)?;
        Ok(ReducedEnergyContext {
            case,
            constants,
            manifold,
            epsilon,
        })
    }

    /// Epsilon of an n = 4 context. The constructor guarantees presence.
    pub(crate) fn epsilon_n4(&self) -> f64 {
        self.epsilon.expect("N4 contexts always carry epsilon")
    }

    /// The coefficient competing against h at `xi`: the mass on the mass
    /// branches, the squared Weyl norm on the others.
    pub(crate) fn competitor(&self, xi: &[f64]) -> f64 {
        if self.case.mass_branch() {
            self.manifold.mass(xi)
        } else {
            let w = self.manifold.weyl_norm(xi);
            w * w
        }
    }
}
