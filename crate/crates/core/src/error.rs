use crate::linalg::Rational;
use crate::structures::AxiomReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid structure data: {0}")]
    Invariant(String),

    #[error("bracket violates the Jacobi identity at basis triple {witness:?}")]
    JacobiViolation {
        witness: (usize, usize, usize),
        residual: Vec<Rational>,
    },

    #[error("algebra does not satisfy the Lie-Yamaguti identities")]
    InvalidAlgebra(Box<AxiomReport>),

    #[error("data does not satisfy the representation identities")]
    InvalidRepresentation(Box<AxiomReport>),

    #[error("map is not a Nijenhuis operator")]
    NotNijenhuis(Box<AxiomReport>),

    #[error("operator has not been verified as a relative Rota-Baxter operator")]
    UnverifiedOperator,

    #[error("map is not a relative Rota-Baxter operator")]
    NotRelativeRotaBaxter(Box<AxiomReport>),

    #[error("map is not a Lie-Yamaguti automorphism")]
    NotAutomorphism(Box<AxiomReport>),

    #[error("pair of maps does not intertwine the representation")]
    NotIntertwining(Box<AxiomReport>),

    #[error("element is not a Nijenhuis element: condition {condition} fails")]
    NotNijenhuisElement {
        condition: String,
        report: Box<AxiomReport>,
    },

    #[error("truncated sum is not an order-n deformation")]
    NotOrderN(Box<AxiomReport>),

    #[error("map does not generate a linear deformation")]
    NotLinearDeformation(Box<AxiomReport>),

    #[error("map is singular: {0}")]
    Singular(String),

    #[error("degree out of range: {0}")]
    Degree(String),
}
