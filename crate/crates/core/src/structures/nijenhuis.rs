use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

use super::algebra::{check_lya, homomorphism_check, LyAlgebra};
use super::report::AxiomReport;

pub const NIJ_BINARY: &str = "[Nx,Ny] = N([Nx,y] + [x,Ny] - N[x,y])";
pub const NIJ_TERNARY: &str = "<Nx,Ny,Nz> = N(<x,y,z>_N-terms)";

fn combine(parts: &[(Rational, Vec<Rational>)], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (c, v) in parts {
        crate::linalg::add_scaled(&mut out, v, c);
    }
    out
}

/// `[x,y]_N` on arbitrary vectors.
pub fn deformed_bracket(a: &LyAlgebra, n: &Matrix, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
    let (nx, ny) = (n.apply(x), n.apply(y));
    let one = Rational::one();
    combine(
        &[
            (one.clone(), a.bracket(&nx, y)),
            (one.clone(), a.bracket(x, &ny)),
            (-one, n.apply(&a.bracket(x, y))),
        ],
        a.dim(),
    )
}

/// `<x,y,z>_N` on arbitrary vectors.
pub fn deformed_ternary(
    a: &LyAlgebra,
    n: &Matrix,
    x: &[Rational],
    y: &[Rational],
    z: &[Rational],
) -> Vec<Rational> {
    let (nx, ny, nz) = (n.apply(x), n.apply(y), n.apply(z));
    let one = Rational::one();
    let inner = combine(
        &[
            (one.clone(), a.ternary(&nx, y, z)),
            (one.clone(), a.ternary(x, &ny, z)),
            (one.clone(), a.ternary(x, y, &nz)),
            (-one.clone(), n.apply(&a.ternary(x, y, z))),
        ],
        a.dim(),
    );
    combine(
        &[
            (one.clone(), a.ternary(&nx, &ny, z)),
            (one.clone(), a.ternary(&nx, y, &nz)),
            (one.clone(), a.ternary(x, &ny, &nz)),
            (-one, n.apply(&inner)),
        ],
        a.dim(),
    )
}

fn check_square(a: &LyAlgebra, n: &Matrix) -> Result<()> {
    if n.rows() != a.dim() || n.cols() != a.dim() {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, algebra has dimension {}",
            n.rows(),
            n.cols(),
            a.dim()
        )));
    }
    Ok(())
}

/// Evaluates both Nijenhuis conditions on all basis tuples.
pub fn nijenhuis_operator_check(a: &LyAlgebra, n: &Matrix) -> Result<AxiomReport> {
    check_square(a, n)?;
    let m = a.dim();
    let e: Vec<Vec<Rational>> = (0..m).map(|i| a.basis(i)).collect();
    let ne: Vec<Vec<Rational>> = (0..m).map(|i| n.column(i)).collect();
    let mut report = AxiomReport::new();
    for i in 0..m {
        for j in 0..m {
            let lhs = a.bracket(&ne[i], &ne[j]);
            let rhs = n.apply(&deformed_bracket(a, n, &e[i], &e[j]));
            report.record(NIJ_BINARY, &[i, j], crate::linalg::vec_sub(&lhs, &rhs));
        }
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let lhs = a.ternary(&ne[i], &ne[j], &ne[k]);
                let rhs = n.apply(&deformed_ternary(a, n, &e[i], &e[j], &e[k]));
                report.record(NIJ_TERNARY, &[i, j, k], crate::linalg::vec_sub(&lhs, &rhs));
            }
        }
    }
    Ok(report)
}

/// The algebra with brackets `[.,.]_N` and `<.,.,.>_N`. Fails unless `n` is a
/// Nijenhuis operator.
pub fn deformed_brackets(a: &LyAlgebra, n: &Matrix) -> Result<LyAlgebra> {
    nijenhuis_operator_check(a, n)?.into_result(Error::NotNijenhuis)?;
    Ok(deformed_unchecked(a, n))
}

pub(crate) fn deformed_unchecked(a: &LyAlgebra, n: &Matrix) -> LyAlgebra {
    LyAlgebra::from_fn_named(
        a.names().to_vec(),
        |i, j| deformed_bracket(a, n, &a.basis(i), &a.basis(j)),
        |i, j, k| deformed_ternary(a, n, &a.basis(i), &a.basis(j), &a.basis(k)),
    )
}

/// Checks the two consequences of the Nijenhuis property: the deformed
/// algebra is Lie-Yamaguti and `n` maps it homomorphically onto `a`.
pub fn deformed_consistency(a: &LyAlgebra, n: &Matrix) -> Result<AxiomReport> {
    let d = deformed_brackets(a, n)?;
    let mut report = check_lya(&d);
    report.merge(homomorphism_check(&d, a, n)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    fn two_dim() -> LyAlgebra {
        LyAlgebra::builder(2)
            .bracket(0, 1, vec![qi(1), qi(0)])
            .ternary(0, 1, 1, vec![qi(1), qi(0)])
            .build()
            .unwrap()
    }

    #[test]
    fn identity_and_zero() {
        let a = two_dim();
        assert!(nijenhuis_operator_check(&a, &Matrix::identity(2)).unwrap().valid());
        assert_eq!(deformed_brackets(&a, &Matrix::identity(2)).unwrap(), a);
        let z = Matrix::zeros(2, 2);
        assert!(nijenhuis_operator_check(&a, &z).unwrap().valid());
        assert!(deformed_brackets(&a, &z).unwrap().is_abelian());
    }

    #[test]
    fn every_operator_on_the_two_dim_example_is_nijenhuis() {
        // in dimension 2 both torsions vanish by Cayley-Hamilton
        let a = two_dim();
        let n = Matrix::diagonal(&[qi(1), qi(0)]);
        assert!(nijenhuis_operator_check(&a, &n).unwrap().valid());
        assert!(deformed_brackets(&a, &n).unwrap().is_abelian());
        let n = Matrix::from_i64(&[&[2, -1], &[1, 3]]);
        assert!(nijenhuis_operator_check(&a, &n).unwrap().valid());
    }

    #[test]
    fn nilpotent_map_on_cross_product_algebra() {
        let lie = LyAlgebra::builder(3)
            .bracket(0, 1, vec![qi(0), qi(0), qi(1)])
            .bracket(0, 2, vec![qi(0), qi(-1), qi(0)])
            .bracket(1, 2, vec![qi(1), qi(0), qi(0)])
            .build()
            .unwrap();
        let a = crate::structures::lya_from_lie(&lie).unwrap();
        let n = Matrix::from_i64(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
        let report = nijenhuis_operator_check(&a, &n).unwrap();
        let w = report.first(NIJ_BINARY).unwrap();
        assert_eq!(w.args, vec![1, 2]);
        assert_eq!(w.residual, vec![qi(1), qi(0), qi(0)]);
        assert!(matches!(deformed_brackets(&a, &n), Err(Error::NotNijenhuis(_))));
    }

    #[test]
    fn non_scalar_nijenhuis_operator() {
        let a = two_dim();
        let n = Matrix::diagonal(&[qi(0), qi(1)]);
        assert!(nijenhuis_operator_check(&a, &n).unwrap().valid());
        let report = deformed_consistency(&a, &n).unwrap();
        assert!(report.valid(), "{report}");
        let d = deformed_brackets(&a, &n).unwrap();
        assert_eq!(d.bracket_basis(0, 1), &[qi(1), qi(0)][..]);
        assert_eq!(d.ternary_basis(0, 1, 1), &[qi(1), qi(0)][..]);
    }
}
