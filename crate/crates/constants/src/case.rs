//! The four-way dimensional case split of the reduced energy.
//!
//! The scale law, the expansion rate, and the (c2, c3) pair all branch on
//! the same case, so it is carried as one value everywhere:
//!
//!   N4             n = 4 (any geometry)
//!   N5_OR_LCF      n = 5, or n >= 6 locally conformally flat (mass branch)
//!   N6_NONLCF      n = 6, not locally conformally flat (Weyl branch, log scale)
//!   N7PLUS_NONLCF  n >= 7, not locally conformally flat (Weyl branch)

use std::fmt;

use crate::error::ConstantsError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReducedCase {
    N4,
    N5OrLcf { n: u32 },
    N6NonLcf,
    N7PlusNonLcf { n: u32 },
}

impl ReducedCase {
    /// Build from an explicit tag and dimension, validating consistency.
    pub fn from_tag(tag: &str, n: u32) -> Result<Self, ConstantsError> {
        let case = match tag {
            "n4" => {
                if n != 4 {
                    return Err(ConstantsError::CaseMismatch { tag: "n4", n });
                }
                ReducedCase::N4
            }
            "n5-lcf" => {
                if n < 5 {
                    return Err(ConstantsError::CaseMismatch { tag: "n5-lcf", n });
                }
                ReducedCase::N5OrLcf { n }
            }
            "n6-nonlcf" => {
                if n != 6 {
                    return Err(ConstantsError::CaseMismatch { tag: "n6-nonlcf", n });
                }
                ReducedCase::N6NonLcf
            }
            "n7plus-nonlcf" => {
                if n < 7 {
                    return Err(ConstantsError::CaseMismatch {
                        tag: "n7plus-nonlcf",
                        n,
                    });
                }
                ReducedCase::N7PlusNonLcf { n }
            }
            other => return Err(ConstantsError::UnknownTag(other.to_string())),
        };
        Ok(case)
    }

    /// The case a model of dimension n with the given conformal-flatness
    /// flag falls into.
    pub fn infer(n: u32, lcf: bool) -> Result<Self, ConstantsError> {
        match (n, lcf) {
            (0..=3, _) => Err(ConstantsError::DimensionOutOfRange {
                m: n as i64,
                min: 4,
            }),
            (4, _) => Ok(ReducedCase::N4),
            (5, _) => Ok(ReducedCase::N5OrLcf { n: 5 }),
            (m, true) => Ok(ReducedCase::N5OrLcf { n: m }),
            (6, false) => Ok(ReducedCase::N6NonLcf),
            (m, false) => Ok(ReducedCase::N7PlusNonLcf { n: m }),
        }
    }

    pub fn n(&self) -> u32 {
        match *self {
            ReducedCase::N4 => 4,
            ReducedCase::N5OrLcf { n } => n,
            ReducedCase::N6NonLcf => 6,
            ReducedCase::N7PlusNonLcf { n } => n,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            ReducedCase::N4 => "n4",
            ReducedCase::N5OrLcf { .. } => "n5-lcf",
            ReducedCase::N6NonLcf => "n6-nonlcf",
            ReducedCase::N7PlusNonLcf { .. } => "n7plus-nonlcf",
        }
    }

    /// Whether the single-bubble energy is driven by the mass constant
    /// (true) or the Weyl norm (false).
    pub fn mass_branch(&self) -> bool {
        matches!(self, ReducedCase::N4 | ReducedCase::N5OrLcf { .. })
    }
}

impl fmt::Display for ReducedCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={})", self.tag(), self.n())
    }
}
