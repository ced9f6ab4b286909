//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LyError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("cochain space mismatch: {0}")]
    SpaceMismatch(String),

    #[error("stored structure constants violate skew-symmetry: {0}")]
    Structure(String),

    #[error("product is not associative")]
    NotAssociative,

    #[error("operator is not a Nijenhuis operator")]
    NotNijenhuis,

    #[error("degree-1 cochain is not a Maurer-Cartan element")]
    NotMaurerCartan,

    #[error("operator is not a relative Rota-Baxter operator")]
    NotRotaBaxter,

    #[error("coefficients do not form a verified order-n deformation")]
    NotVerifiedDeformation,

    #[error("element is not a Nijenhuis element")]
    NotNijenhuisElement,

    #[error("resource cap exceeded: {0}")]
    ResourceCap(String),

    #[error("internal consistency violation: {0}")]
    Internal(String),

    #[error("cohomology level {level} unsupported: {reason}")]
    Level { level: usize, reason: String },
}
