//! Small named algebras, representations and operators used as fixtures.

use std::sync::Arc;

use crate::linalg::{qi, Matrix, Rational};
use crate::structures::{LyAlgebra, Representation};

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| qi(x)).collect()
}

/// `[e1,e2] = e1`, `<e1,e2,e2> = e1`.
pub fn two_dim() -> LyAlgebra {
    LyAlgebra::builder(2)
        .bracket(0, 1, v(&[1, 0]))
        .ternary(0, 1, 1, v(&[1, 0]))
        .build()
        .expect("valid constants")
}

/// `[e1,e2] = 2 e4`, `<e1,e2,e1> = e4`.
pub fn four_dim() -> LyAlgebra {
    LyAlgebra::builder(4)
        .bracket(0, 1, v(&[0, 0, 0, 2]))
        .ternary(0, 1, 0, v(&[0, 0, 0, 1]))
        .build()
        .expect("valid constants")
}

/// Rota-Baxter operator `e1 ↦ 0`, `e2 ↦ a e1 + b e2` on [`two_dim`].
pub fn two_dim_operator(a: &Rational, b: &Rational) -> Matrix {
    let z = Rational::zero();
    Matrix::from_rows(vec![vec![z.clone(), a.clone()], vec![z, b.clone()]]).expect("2x2")
}

/// Rota-Baxter operator on [`four_dim`] with the nine free entries
/// `a12, a31, a32, a33, a34, a41, a42, a43, a44`.
pub fn four_dim_operator(p: &[Rational; 9]) -> Matrix {
    let z = Rational::zero();
    Matrix::from_rows(vec![
        vec![z.clone(), p[0].clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z],
        vec![p[1].clone(), p[2].clone(), p[3].clone(), p[4].clone()],
        vec![p[5].clone(), p[6].clone(), p[7].clone(), p[8].clone()],
    ])
    .expect("4x4")
}

/// The two-dimensional non-abelian Lie algebra `[e1,e2] = e1`.
pub fn lie_r2() -> LyAlgebra {
    LyAlgebra::builder(2).bracket(0, 1, v(&[1, 0])).build().expect("valid constants")
}

/// Heisenberg algebra `[e1,e2] = e3`.
pub fn lie_heisenberg() -> LyAlgebra {
    LyAlgebra::builder(3).bracket(0, 1, v(&[0, 0, 1])).build().expect("valid constants")
}

/// Cross-product algebra `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn lie_so3() -> LyAlgebra {
    LyAlgebra::builder(3)
        .bracket(0, 1, v(&[0, 0, 1]))
        .bracket(0, 2, v(&[0, -1, 0]))
        .bracket(1, 2, v(&[1, 0, 0]))
        .build()
        .expect("valid constants")
}

/// `sl2` with basis `h, e, f`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn lie_sl2() -> LyAlgebra {
    LyAlgebra::builder(3)
        .bracket(0, 1, v(&[0, 2, 0]))
        .bracket(0, 2, v(&[0, 0, -2]))
        .bracket(1, 2, v(&[1, 0, 0]))
        .build()
        .expect("valid constants")
}

/// From a Lie bracket, the algebra with bracket `lambda [x,y]` and ternary
/// bracket `[[x,y],z]`. It satisfies the Lie-Yamaguti identities for every
/// rational `lambda`; `lambda = 1` is [`crate::structures::lya_from_lie`].
/// Jacobi is not checked here.
pub fn scaled_lie(lie: &LyAlgebra, lambda: &Rational) -> LyAlgebra {
    LyAlgebra::from_fn_named(
        lie.names().to_vec(),
        |i, j| lie.bracket_basis(i, j).iter().map(|c| c * lambda).collect(),
        |i, j, k| lie.bracket(lie.bracket_basis(i, j), &lie.basis(k)),
    )
}

/// Representation of [`scaled_lie`] built from a Lie module `pi`:
/// `rho = lambda pi` and `mu(x,y) = pi(y) pi(x)`.
pub fn scaled_lie_module(
    algebra: impl Into<Arc<LyAlgebra>>,
    pi: &[Matrix],
    lambda: &Rational,
) -> crate::Result<Representation> {
    let algebra = algebra.into();
    let m = algebra.dim();
    let rho = pi.iter().map(|p| p.scale(lambda)).collect();
    let mut mu = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            mu.push(pi[j].matmul(&pi[i]));
        }
    }
    Representation::new(algebra, rho, mu)
}

/// Module of `r2` on `K^2`: `e1 ↦ E12`, `e2 ↦ diag(c, c + 1)`.
pub fn r2_module(c: &Rational) -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::diagonal(&[c.clone(), c + Rational::one()]),
    ]
}

/// Adjoint matrices `ad_{e_i}` of a Lie bracket, usable as a Lie module.
pub fn lie_adjoint_module(lie: &LyAlgebra) -> Vec<Matrix> {
    (0..lie.dim()).map(|i| lie.ad(&lie.basis(i))).collect()
}

/// Defining module of `sl2` on `K^2`.
pub fn sl2_defining_module() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[1, 0], &[0, -1]]),
        Matrix::from_i64(&[&[0, 1], &[0, 0]]),
        Matrix::from_i64(&[&[0, 0], &[1, 0]]),
    ]
}

/// Defining module of `so3` (cross product) on `K^3`.
pub fn so3_defining_module() -> Vec<Matrix> {
    lie_adjoint_module(&lie_so3())
}

/// Module of the Heisenberg algebra on `K^3` by strictly upper-triangular
/// matrices: `e1 ↦ E12`, `e2 ↦ E23`, `e3 ↦ E13`.
pub fn heisenberg_module() -> Vec<Matrix> {
    vec![
        Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 0], &[0, 0, 1], &[0, 0, 0]]),
        Matrix::from_i64(&[&[0, 0, 1], &[0, 0, 0], &[0, 0, 0]]),
    ]
}
