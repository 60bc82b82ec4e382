//! Exact rational scalars, dense matrices and the elimination routines the
//! rest of the crate reduces to.

mod matrix;
mod rational;

pub use matrix::{
    add_scaled, is_zero_vector, rank_kernel, reduce_modulo_columns, solve_linear, unit_vector,
    vec_add, vec_sub, Matrix,
};
pub use rational::{q, qi, ParseRationalError, Rational};
