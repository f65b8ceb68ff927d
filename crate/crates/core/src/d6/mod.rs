//! The exceptional imprimitive six-class family `{m, m-1, 1, b3, b4, 1; 1, c2, m-b3, 1, c5, m}`:
//! its cubic factor, explicit eigenmatrix, the value of `p^1_16`, and infeasibility certificates.

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub mod certificate;
pub mod p161;
pub mod params;
pub mod q6;
pub mod recheck;
pub mod roots;
pub mod sweep;

pub use certificate::{certify_infeasible, certify_infeasible_with_width, Certificate};
pub use p161::{lemma51_check, p161_plus_1, paper_relation_order, Lemma51Report, R161};
pub use params::{validate, D6Params, Invariant};
pub use q6::{build_q6, Q6};
pub use recheck::{recheck, recheck_json, RecheckReport};
pub use roots::{compute_x1, cubic, quadratic, v7_factorization_check, V7Check, X1Root};
pub use sweep::{sweep, Grid, PointOutcome, SweepReport};

use crate::scheme::SchemeError;

/// The step of the contradiction that could not be certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailStep {
    EmptyAlphaInterval,
    X1Bounds,
    DenominatorNotPositive,
    BranchZero,
    SecondInequality,
    CombinedIdentity,
    FinalContradiction,
    RouteDisagreement,
}

impl std::fmt::Display for FailStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = serde_json::to_value(self).expect("unit variant");
        f.write_str(s.as_str().expect("string"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum D6Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(Invariant),
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("denominator of p^1_16 + 1 is not positive")]
    DenominatorNotPositive,
    #[error("identity check failed: {0}")]
    IdentityCheckFailed(String),
    #[error("certification failed at {step}: {detail}")]
    CertificationFailed { step: FailStep, detail: String },
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

impl D6Error {
    pub(crate) fn failed(step: FailStep, detail: impl Into<String>) -> Self {
        D6Error::CertificationFailed {
            step,
            detail: detail.into(),
        }
    }
}
