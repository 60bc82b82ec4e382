//! Lie-Yamaguti algebras, representations, axiom checks and the standard
//! constructions built from them.

mod algebra;
mod nijenhuis;
mod report;
mod representation;

pub use algebra::{
    check_lya, homomorphism_check, lya_from_lie, AlgebraBuilder, LyAlgebra, HOM_BINARY,
    HOM_TERNARY, LY1, LY2, LY3, LY4,
};
pub use nijenhuis::{
    deformed_bracket, deformed_brackets, deformed_consistency, deformed_ternary,
    nijenhuis_operator_check, NIJ_BINARY, NIJ_TERNARY,
};
pub(crate) use nijenhuis::deformed_unchecked;
pub use report::{AxiomReport, Violation};
pub use representation::{
    adjoint_rep, check_representation, check_representation_defining, d_map, is_adjoint,
    semidirect, Representation, REP_DEFINING, REP_DERIVED, REP_D_CYCLIC, REP_D_TERNARY,
    REP_MU_BRACKET_LEFT, REP_MU_BRACKET_RIGHT, REP_MU_EXPANDED, REP_MU_MU, REP_MU_TERNARY,
    REP_RHO_TERNARY,
};
