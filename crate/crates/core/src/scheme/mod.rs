//! Parameter tables of cometric association schemes.

use thiserror::Error;

pub mod dual;
pub mod feasibility;
pub mod krein;
pub mod oracle;
pub mod table;

pub use dual::{dual_eigenvalues, dual_polys, DualPolySeq};
pub use feasibility::{feasibility_check, Condition, FeasibilityReport, Violation};
pub use krein::{KreinArray, KreinError, ParseError};
pub use oracle::{from_relation_matrices, parse_relation_file, Axiom, SchemeOracle};
pub use table::{build_table, ParameterTable, Spectrum};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("v*_(d+1) has {found} distinct real roots, expected {expected}")]
    FewerThanD1RealRoots { expected: usize, found: usize },
    #[error("Q is singular")]
    SingularQ,
    #[error("internal identity check failed: {0}")]
    IdentityCheckFailed(String),
    #[error("not an association scheme: {0} violated")]
    NotAnAssociationScheme(Axiom),
    #[error("no cometric ordering of the primitive idempotents")]
    NotCometric,
    #[error("eigenvalues are not all rational")]
    IrrationalSpectrum,
}
