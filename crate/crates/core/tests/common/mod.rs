//! Fixture builders shared by the integration tests.
#![allow(dead_code)]

use std::sync::Arc;

use lyrb_core::catalog::*;
use lyrb_core::linalg::{q, qi, Matrix, Rational};
use lyrb_core::rbo::RelRbo;
use lyrb_core::structures::{adjoint_rep, LyAlgebra, Representation};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational with numerator in `-9..=9` and denominator in `1..=4`.
pub fn rational(rng: &mut TestRng) -> Rational {
    q(rng.gen_range(-9..=9), rng.gen_range(1..=4))
}

pub fn nonzero_rational(rng: &mut TestRng) -> Rational {
    loop {
        let r = rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn matrix(rng: &mut TestRng, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols).map(|_| rational(rng)).collect();
    Matrix::from_flat(rows, cols, entries).unwrap()
}

/// Sparse small-integer matrix; these reach degenerate cases more often.
pub fn sparse_matrix(rng: &mut TestRng, rows: usize, cols: usize) -> Matrix {
    let entries = (0..rows * cols)
        .map(|_| if rng.gen_bool(0.6) { Rational::zero() } else { qi(rng.gen_range(-2..=2)) })
        .collect();
    Matrix::from_flat(rows, cols, entries).unwrap()
}

pub fn invertible(rng: &mut TestRng, n: usize) -> Matrix {
    loop {
        let p = matrix(rng, n, n);
        if p.inverse().is_some() {
            return p;
        }
    }
}

pub fn two_dim_rbo(a: &Rational, b: &Rational) -> RelRbo {
    RelRbo::new(adjoint_rep(two_dim()).unwrap(), two_dim_operator(a, b)).unwrap()
}

pub fn four_dim_params(rng: &mut TestRng) -> [Rational; 9] {
    std::array::from_fn(|_| rational(rng))
}

/// The parameter vector used for the frozen four-dimensional fixtures.
pub fn four_dim_reference_params() -> [Rational; 9] {
    [qi(1), qi(2), qi(-1), qi(3), q(1, 2), qi(0), qi(1), qi(2), qi(-3)]
}

pub fn four_dim_rbo(p: &[Rational; 9]) -> RelRbo {
    RelRbo::new(adjoint_rep(four_dim()).unwrap(), four_dim_operator(p)).unwrap()
}

/// Lie algebras of dimension at most 3 together with modules of dimension at
/// most 3.
fn lie_pairs(rng: &mut TestRng) -> Vec<(&'static str, LyAlgebra, Vec<Matrix>)> {
    let r2 = lie_r2();
    let heis = lie_heisenberg();
    let sl2 = lie_sl2();
    let so3 = lie_so3();
    vec![
        ("r2 on K^2", r2.clone(), r2_module(&rational(rng))),
        ("r2 adjoint", r2.clone(), lie_adjoint_module(&r2)),
        ("heisenberg on K^3", heis.clone(), heisenberg_module()),
        ("heisenberg adjoint", heis.clone(), lie_adjoint_module(&heis)),
        ("sl2 on K^2", sl2.clone(), sl2_defining_module()),
        ("sl2 adjoint", sl2.clone(), lie_adjoint_module(&sl2)),
        ("so3 on K^3", so3, so3_defining_module()),
        ("abelian on K^2", LyAlgebra::abelian(2), vec![Matrix::zeros(2, 2); 2]),
    ]
}

/// A random valid pair: a scaled Lie-type algebra with a module, transported
/// along random changes of basis of both the algebra and the module. Every
/// fourth draw is the two-dimensional example with its adjoint representation.
pub fn random_pair(rng: &mut TestRng) -> (String, Representation) {
    let (name, base_rep) = if rng.gen_range(0..4) == 0 {
        ("2-dim example adjoint".to_string(), adjoint_rep(two_dim()).unwrap())
    } else {
        let mut pairs = lie_pairs(rng);
        let (name, lie, pi) = pairs.swap_remove(rng.gen_range(0..pairs.len()));
        let lambda = rational(rng);
        let algebra = scaled_lie(&lie, &lambda);
        let rep = scaled_lie_module(algebra, &pi, &lambda).unwrap();
        (format!("{name}, lambda = {lambda}"), rep)
    };
    let m = base_rep.algebra().dim();
    let p = invertible(rng, m);
    let moved = Arc::new(base_rep.algebra().change_basis(&p).unwrap());
    let rep = base_rep.pull_back(moved, &p).unwrap();
    let qm = invertible(rng, rep.dim_v());
    (name, rep.change_module_basis(&qm).unwrap())
}

/// Alters one random entry of `rho` or `mu`.
pub fn corrupt(rng: &mut TestRng, r: &Representation) -> Representation {
    let (m, n) = (r.algebra().dim(), r.dim_v());
    let mut bump = Matrix::zeros(n, n);
    bump[(rng.gen_range(0..n), rng.gen_range(0..n))] = nonzero_rational(rng);
    if rng.gen_bool(0.5) {
        let i = rng.gen_range(0..m);
        r.with_rho(i, r.rho(i).plus(&bump)).unwrap()
    } else {
        let (i, j) = (rng.gen_range(0..m), rng.gen_range(0..m));
        r.with_mu(i, j, r.mu(i, j).plus(&bump)).unwrap()
    }
}

/// The verified operators used wherever "every fixture operator" is needed.
pub fn operator_fixtures(rng: &mut TestRng) -> Vec<(String, RelRbo)> {
    let mut out = vec![
        ("2-dim a=0 b=1".to_string(), two_dim_rbo(&qi(0), &qi(1))),
        ("2-dim a=3/2 b=-2".to_string(), two_dim_rbo(&q(3, 2), &qi(-2))),
        ("4-dim reference".to_string(), four_dim_rbo(&four_dim_reference_params())),
    ];
    for _ in 0..3 {
        let (a, b) = (rational(rng), rational(rng));
        out.push((format!("2-dim a={a} b={b}"), two_dim_rbo(&a, &b)));
    }
    for k in 0..3 {
        out.push((format!("4-dim random #{k}"), four_dim_rbo(&four_dim_params(rng))));
    }
    for _ in 0..3 {
        let (name, rep) = random_pair(rng);
        let (m, n) = (rep.algebra().dim(), rep.dim_v());
        out.push((format!("zero operator over {name}"), RelRbo::new(rep, Matrix::zeros(m, n)).unwrap()));
    }
    out
}

/// One verified operator drawn from the same families as [`operator_fixtures`].
pub fn random_operator(rng: &mut TestRng) -> RelRbo {
    match rng.gen_range(0..5) {
        0 | 1 => two_dim_rbo(&rational(rng), &rational(rng)),
        2 | 3 => four_dim_rbo(&four_dim_params(rng)),
        _ => {
            let (_, rep) = random_pair(rng);
            let (m, n) = (rep.algebra().dim(), rep.dim_v());
            RelRbo::new(rep, Matrix::zeros(m, n)).unwrap()
        }
    }
}
