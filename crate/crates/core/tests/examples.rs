//! Worked examples with hand-checked or frozen values, one test per operation.

mod common;

use common::*;
use lyrb_core::catalog::*;
use lyrb_core::complex::{cochain_dim, cohomology_dims, Cochain, ComplexContext};
use lyrb_core::deformation::*;
use lyrb_core::linalg::{q, qi, rank_kernel, solve_linear, Matrix, Rational};
use lyrb_core::rbo::*;
use lyrb_core::rbo_cohomology::*;
use lyrb_core::structures::*;
use lyrb_core::Error;

fn ints(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| qi(x)).collect()
}

fn m(rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(rows)
}

fn base() -> RelRbo {
    two_dim_rbo(&qi(0), &qi(1))
}

fn e12() -> Wedge2 {
    Wedge2::basis(2, 0, 1).unwrap()
}

// exact linear algebra

#[test]
fn kernel_of_rank_one_matrix() {
    assert_eq!(rank_kernel(&Matrix::identity(2)), (2, vec![]));
    assert_eq!(rank_kernel(&Matrix::zeros(2, 2)), (0, vec![ints(&[1, 0]), ints(&[0, 1])]));
    assert_eq!(rank_kernel(&m(&[&[1, 2], &[2, 4]])), (1, vec![ints(&[-2, 1])]));
}

#[test]
fn solving() {
    assert_eq!(solve_linear(&Matrix::identity(2), &ints(&[3, 5])).unwrap(), Some(ints(&[3, 5])));
    assert_eq!(solve_linear(&Matrix::zeros(2, 2), &ints(&[1, 0])).unwrap(), None);
    let a = m(&[&[1, 1], &[0, 0]]);
    let x = solve_linear(&a, &ints(&[2, 0])).unwrap().unwrap();
    assert_eq!(a.apply(&x), ints(&[2, 0]));
    assert!(matches!(solve_linear(&a, &ints(&[1])), Err(Error::Dimension(_))));
}

// structures

#[test]
fn wrong_ternary_fails_with_witness() {
    let bad = LyAlgebra::builder(2)
        .bracket(0, 1, ints(&[1, 0]))
        .ternary(0, 1, 1, ints(&[0, 1]))
        .build()
        .unwrap();
    let report = check_lya(&bad);
    let w = report.first("<x,y,[z,w]> = [<x,y,z>,w] + [z,<x,y,w>]").unwrap();
    assert_eq!(w.args, vec![0, 1, 0, 1]);
    assert_eq!(w.residual, ints(&[-1, 0]));
}

#[test]
fn lie_algebras_become_lie_yamaguti() {
    let from_r2 = lya_from_lie(&lie_r2()).unwrap();
    assert_eq!(from_r2.ternary_basis(0, 1, 1), &ints(&[1, 0])[..]);
    assert_eq!(from_r2.ternary_basis(0, 1, 0), &ints(&[0, 0])[..]);
    assert_eq!(from_r2, two_dim());
    let so3 = lya_from_lie(&lie_so3()).unwrap();
    assert_eq!(so3.ternary_basis(0, 1, 0), &ints(&[0, 1, 0])[..]);
    assert!(check_lya(&so3).valid());
}

#[test]
fn adjoint_and_d_map() {
    let r = adjoint_rep(two_dim()).unwrap();
    assert!(check_representation(&r).valid());
    assert_eq!(r.rho(0), &m(&[&[0, 1], &[0, 0]]));
    assert_eq!(r.mu(1, 1), &m(&[&[1, 0], &[0, 0]]));
    assert_eq!(d_map(&r, 0, 1), m(&[&[0, 1], &[0, 0]]));
    assert!(d_map(&r, 1, 1).is_zero());

    let r4 = adjoint_rep(four_dim()).unwrap();
    assert_eq!(r4.rho(0).column(1), ints(&[0, 0, 0, 2]));
    assert_eq!(d_map(&r4, 0, 1).column(0), ints(&[0, 0, 0, 1]));

    let abelian = adjoint_rep(LyAlgebra::abelian(3)).unwrap();
    assert!((0..3).all(|i| abelian.rho(i).is_zero() && (0..3).all(|j| abelian.mu(i, j).is_zero())));
}

#[test]
fn d_map_without_rho() {
    let a = two_dim();
    let zero = Representation::zero(a, 2);
    let r = zero.with_mu(0, 1, m(&[&[1, 2], &[0, 3]])).unwrap();
    assert_eq!(d_map(&r, 0, 1), r.mu(1, 0).minus(r.mu(0, 1)));
}

#[test]
fn corrupted_adjoint() {
    let r = adjoint_rep(two_dim()).unwrap();
    assert!(check_representation(&Representation::zero(two_dim(), 3)).valid());
    let broken = r.with_mu(1, 1, Matrix::identity(2)).unwrap();
    assert!(!check_representation(&broken).valid());
    assert!(!check_lya(&semidirect(&broken)).valid());
    assert!(check_lya(&semidirect(&r)).valid());
    assert!(semidirect(&Representation::zero(LyAlgebra::abelian(2), 2)).is_abelian());
}

#[test]
fn nijenhuis_operators_on_two_dim() {
    let a = two_dim();
    assert!(nijenhuis_operator_check(&a, &Matrix::identity(2)).unwrap().valid());
    assert!(nijenhuis_operator_check(&a, &Matrix::zeros(2, 2)).unwrap().valid());
    let diag = Matrix::diagonal(&[qi(1), qi(0)]);
    assert!(nijenhuis_operator_check(&a, &diag).unwrap().valid());
    assert!(deformed_brackets(&a, &diag).unwrap().is_abelian());
    assert_eq!(deformed_brackets(&a, &Matrix::identity(2)).unwrap(), a);
    assert!(deformed_brackets(&a, &Matrix::zeros(2, 2)).unwrap().is_abelian());
    // e1 -> e1, e2 -> e1 + 2 e2
    let n = m(&[&[1, 1], &[0, 2]]);
    let d = deformed_brackets(&a, &n).unwrap();
    assert_eq!(d.bracket_basis(0, 1), &ints(&[2, 0])[..]);
    assert_eq!(d.ternary_basis(0, 1, 1), &ints(&[4, 0])[..]);
    assert!(deformed_consistency(&a, &n).unwrap().valid());
}

// Yamaguti complex

#[test]
fn cochain_dimensions() {
    let two = ComplexContext::new(adjoint_rep(two_dim()).unwrap()).unwrap();
    assert_eq!(cochain_dim(&two, 1).unwrap(), 4);
    assert_eq!(cochain_dim(&two, 2).unwrap(), 6);
    let four = ComplexContext::new(adjoint_rep(four_dim()).unwrap()).unwrap();
    assert_eq!(cochain_dim(&four, 3).unwrap(), 720);
    assert!(matches!(cochain_dim(&two, 0), Err(Error::Degree(_))));
}

#[test]
fn identity_cochain_coboundary() {
    let ctx = ComplexContext::new(adjoint_rep(two_dim()).unwrap()).unwrap();
    let id = Cochain::from_map(&ctx, &Matrix::identity(2)).unwrap();
    // delta_I(id)(x,y) = [x,y] and delta_II(id)(x,y,z) = 2<x,y,z>
    assert_eq!(ctx.coboundary(&id).unwrap().data(), &ints(&[1, 0, 0, 0, 2, 0])[..]);
    for p in 1..=3 {
        let zero = Cochain::zero(&ctx, p).unwrap();
        assert!(ctx.coboundary(&zero).unwrap().is_zero());
    }
}

#[test]
fn two_dim_yamaguti_matrix_and_dimensions() {
    let ctx = ComplexContext::new(adjoint_rep(two_dim()).unwrap()).unwrap();
    assert_eq!(
        format!("{:?}", ctx.coboundary_matrix(1).unwrap().to_rows()),
        "[[0, 0, 0, 1], [0, -1, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 2], [0, -1, 0, 0]]"
    );
    let dims: Vec<_> = (1..=3)
        .map(|p| {
            let s = cohomology_dims(&ctx, p, true).unwrap();
            (s.dim_cochains, s.dim_cocycles, s.dim_coboundaries, s.dim_h)
        })
        .collect();
    assert_eq!(dims, vec![(4, 2, 0, 2), (6, 3, 2, 1), (6, 4, 3, 1)]);
}

#[test]
fn trivial_complexes() {
    let ctx = ComplexContext::new(Representation::zero(LyAlgebra::abelian(2), 2)).unwrap();
    for p in 1..=3 {
        assert!(ctx.coboundary_matrix(p).unwrap().is_zero());
        let s = cohomology_dims(&ctx, p, true).unwrap();
        assert_eq!(s.dim_h, s.dim_cochains);
    }
}

// relative Rota-Baxter operators

#[test]
fn rota_baxter_family_on_two_dim() {
    let r = adjoint_rep(two_dim()).unwrap();
    assert!(check_rbo(&r, &Matrix::zeros(2, 2)).unwrap().valid());
    for (a, b) in [(qi(0), qi(1)), (qi(3), qi(5)), (qi(-2), q(7, 3))] {
        assert!(check_rbo(&r, &two_dim_operator(&a, &b)).unwrap().valid());
    }
    let report = check_rbo(&r, &Matrix::identity(2)).unwrap();
    let w = report.first(RBO_BINARY).unwrap();
    assert_eq!(w.args, vec![0, 1]);
    // [e1,e2] = e1 against T(2 e1)
    assert_eq!(w.residual, ints(&[-1, 0]));
}

#[test]
fn induced_structures_on_two_dim() {
    let o = base();
    let on_v = induced_lya_on_v(&o).unwrap();
    assert_eq!(on_v, two_dim());
    let on_g = induced_rep_on_g(&o).unwrap();
    assert!(on_g.rho(0).is_zero());
    assert_eq!(on_g.rho(1), &m(&[&[-1, 0], &[0, 0]]));
    for u in 0..2 {
        for v in 0..2 {
            assert_eq!(on_g.d(u, v), &induced_d_closed_form(&o, u, v));
        }
    }
    let pre = pre_ly_products(&o).unwrap();
    assert_eq!(pre.binary(1, 0), &ints(&[-1, 0])[..]);
    assert_eq!(pre.ternary(0, 1, 1), &ints(&[1, 0])[..]);
    assert!(pre_ly_commutator_check(&o).unwrap().valid());
}

#[test]
fn zero_operator_induces_nothing() {
    let r = adjoint_rep(two_dim()).unwrap();
    let o = RelRbo::new(r, Matrix::zeros(2, 2)).unwrap();
    assert!(induced_lya_on_v(&o).unwrap().is_abelian());
    let on_g = induced_rep_on_g(&o).unwrap();
    assert!((0..2).all(|i| on_g.rho(i).is_zero() && (0..2).all(|j| on_g.mu(i, j).is_zero())));
    assert!(lift_to_nijenhuis(&o).unwrap().is_zero());
    assert!((0..2).all(|u| (0..2).all(|v| pre_ly_products(&o).unwrap().binary(u, v).iter().all(Rational::is_zero))));
}

#[test]
fn four_dim_induced_algebra_and_homomorphism() {
    let o = four_dim_rbo(&four_dim_reference_params());
    let on_v = induced_lya_on_v(&o).unwrap();
    assert!(check_lya(&on_v).valid());
    assert!(homomorphism_check(&on_v, o.algebra(), o.matrix()).unwrap().valid());
}

#[test]
fn lift_on_two_dim() {
    let o = base();
    let n = lift_to_nijenhuis(&o).unwrap();
    assert_eq!(n, m(&[&[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0], &[0, 0, 0, 0]]));
    assert!(nijenhuis_operator_check(&semidirect(o.rep()), &n).unwrap().valid());
    assert!(lift_consistency_check(&o).unwrap().valid());
}

#[test]
fn broken_operator_has_non_nijenhuis_lift() {
    let r = adjoint_rep(two_dim()).unwrap();
    let lift = nijenhuis_lift_matrix(&Matrix::identity(2));
    assert!(!nijenhuis_operator_check(&semidirect(&r), &lift).unwrap().valid());
}

#[test]
fn operator_homomorphisms() {
    let o = base();
    let id = Matrix::identity(2);
    assert!(rbo_homomorphism_check(&o, &o, &id, &id).unwrap().valid());
    let other = two_dim_rbo(&qi(3), &qi(5));
    let report = rbo_homomorphism_check(&o, &other, &id, &id.scale(&qi(2))).unwrap();
    assert!(report.fails(HOM_T));
}

#[test]
fn conjugation() {
    let o = two_dim_rbo(&qi(3), &qi(5));
    let id = Matrix::identity(2);
    assert_eq!(conjugate_rbo(&o, &id, &id).unwrap().matrix(), o.matrix());
    let p = Matrix::diagonal(&[q(1, 2), qi(1)]);
    let c = conjugate_rbo(&o, &p, &p).unwrap();
    assert_eq!(c.matrix(), &two_dim_operator(&qi(6), &qi(5)));
    assert!(check_rbo(c.rep(), c.matrix()).unwrap().valid());
    assert!(matches!(conjugate_rbo(&o, &id.scale(&qi(2)), &id.scale(&qi(2))), Err(Error::NotAutomorphism(_))));
}

// operator cohomology

#[test]
fn delta_of_basis_wedge() {
    let o = base();
    assert!(delta0_map(&o, &Wedge2::zero(2)).unwrap().is_zero());
    assert_eq!(delta0_map(&o, &e12()).unwrap(), m(&[&[0, -1], &[0, 0]]));
    assert_eq!(format!("{:?}", delta0_matrix(&o).unwrap().to_rows()), "[[0], [0], [-1], [0]]");
    let c = RboComplex::new(o.clone()).unwrap();
    assert!(c.ctx().coboundary(&rbo_delta0(&o, &e12()).unwrap()).unwrap().is_zero());
}

#[test]
fn operator_complex_on_two_dim() {
    let c = RboComplex::new(base()).unwrap();
    assert_eq!(
        format!("{:?}", rbo_coboundary_matrix(&c, 1).unwrap().to_rows()),
        "[[0, 0, 0, 0], [0, -1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, -1, 0, 0]]"
    );
    let dims: Vec<_> = (1..=3)
        .map(|p| {
            let s = rbo_cohomology_dims(&c, p).unwrap();
            (s.dim_cochains, s.dim_cocycles, s.dim_coboundaries, s.dim_h)
        })
        .collect();
    assert_eq!(dims, vec![(4, 3, 1, 2), (6, 4, 1, 3), (6, 5, 2, 3)]);
    assert!(rbo_coboundary_matrix(&c, 1).unwrap().matmul(&rbo_coboundary_matrix(&c, 0).unwrap()).is_zero());
}

#[test]
fn zero_operator_on_abelian_algebra() {
    let r = Representation::zero(LyAlgebra::abelian(2), 2);
    let c = RboComplex::new(RelRbo::new(r, Matrix::zeros(2, 2)).unwrap()).unwrap();
    for p in 0..=2 {
        assert!(rbo_coboundary_matrix(&c, p).unwrap().is_zero());
    }
    let s = rbo_cohomology_dims(&c, 1).unwrap();
    assert_eq!((s.dim_h, s.dim_cochains), (4, 4));
}

// deformations

#[test]
fn linear_deformations_on_two_dim() {
    let o = base();
    assert!(linear_deformation_check(&o, &Matrix::zeros(2, 2)).unwrap().valid());
    assert!(linear_deformation_check(&o, &m(&[&[0, -1], &[0, 0]])).unwrap().valid());
    let e1_to_e2 = m(&[&[0, 0], &[1, 0]]);
    let report = linear_deformation_check(&o, &e1_to_e2).unwrap();
    assert_eq!(report.failed_identities(), vec![LIN_BINARY_LINEAR, LIN_TERNARY_QUADRATIC, LIN_TERNARY_LINEAR]);
    assert_eq!(report.first(LIN_BINARY_LINEAR).unwrap().residual, ints(&[0, -1]));
    assert!(!sampled_linear_check(&o, &e1_to_e2, &[qi(1), qi(2), qi(3)]).unwrap().valid());
}

#[test]
fn nijenhuis_elements_of_the_examples() {
    let o = base();
    assert!(nijenhuis_element_check(&o, &Wedge2::zero(2)).unwrap().is_nijenhuis());
    for c in [q(1, 1), q(-3, 2), q(7, 5)] {
        let r = nijenhuis_element_check(&o, &e12().scale(&c)).unwrap();
        assert!(r.is_nijenhuis());
        assert_eq!(r.reduced, Some(true));
    }
    let o4 = four_dim_rbo(&four_dim_reference_params());
    for i in 0..4 {
        for j in i + 1..4 {
            assert!(nijenhuis_element_check(&o4, &Wedge2::basis(4, i, j).unwrap()).unwrap().is_nijenhuis());
        }
    }
}

#[test]
fn trivial_deformations() {
    let o = base();
    let zero = trivial_deformation_from(&o, &Wedge2::zero(2)).unwrap();
    assert_eq!(zero.terms(), &[o.matrix().clone(), Matrix::zeros(2, 2)]);
    let d = trivial_deformation_from(&o, &e12()).unwrap();
    assert_eq!(d.terms(), &[o.matrix().clone(), m(&[&[0, -1], &[0, 0]])]);

    let o4 = four_dim_rbo(&four_dim_reference_params());
    let x = Wedge2::basis(4, 2, 3).unwrap();
    let d4 = trivial_deformation_from(&o4, &x).unwrap();
    assert!(linear_deformation_check(&o4, d4.infinitesimal().unwrap()).unwrap().valid());
    for t in [qi(1), q(-1, 3)] {
        assert!(trivial_homomorphism_at(&o4, &d4, &x, &t).unwrap().valid());
    }
}

#[test]
fn equivalences() {
    let o = base();
    let constant = TruncatedDeformation::linear(&o, Matrix::zeros(2, 2)).unwrap();
    assert!(equivalence_check_linear(&o, &constant, &constant, &Wedge2::zero(2)).unwrap().valid());
    let d = trivial_deformation_from(&o, &e12()).unwrap();
    assert!(equivalence_check_linear(&o, &constant, &d, &e12()).unwrap().valid());

    // E22 is a 1-cocycle outside the image of delta, since dim H^1 = 2.
    let e22 = m(&[&[0, 0], &[0, 1]]);
    let flat = RboComplex::new(o.clone()).unwrap().cochain_from_map(&e22).unwrap();
    assert!(solve_linear(&delta0_matrix(&o).unwrap(), flat.data()).unwrap().is_none());
    let d2 = TruncatedDeformation::new(vec![o.matrix().clone(), e22]).unwrap();
    assert!(order_n_check(&o, &d2).unwrap().valid());
    for c in [qi(0), qi(1), qi(-1), q(5, 2)] {
        let report = equivalence_check_linear(&o, &constant, &d2, &e12().scale(&c)).unwrap();
        let first = &report.first_per_identity().violations[0];
        assert_eq!(first.identity, "T1_t psi = phi T2_t [t^1], i.e. T2 - T1 = delta(X)");
    }
}

#[test]
fn order_n_checks() {
    let o = base();
    assert!(order_n_check(&o, &TruncatedDeformation::constant(&o)).unwrap().valid());
    let d = trivial_deformation_from(&o, &e12()).unwrap();
    assert!(order_n_check(&o, &d).unwrap().valid());
    let bad = TruncatedDeformation::new(vec![o.matrix().clone(), m(&[&[0, 0], &[1, 0]])]).unwrap();
    let report = order_n_check(&o, &bad).unwrap();
    assert!(!report.valid());
    assert!(report.violations.iter().all(|v| v.identity.ends_with("[t^1]")));
}

#[test]
fn obstructions_and_extensions() {
    let o = base();
    let constant = TruncatedDeformation::constant(&o);
    let ob0 = obstruction(&o, &constant).unwrap();
    assert!(ob0.ob.is_zero() && ob0.trivial);
    let ext0 = extend_deformation(&o, &constant).unwrap().unwrap();
    assert_eq!(ext0.terms(), &[o.matrix().clone(), Matrix::zeros(2, 2)]);

    let d = trivial_deformation_from(&o, &e12()).unwrap();
    let ob = obstruction(&o, &d).unwrap();
    assert_eq!(ob.ob.data(), &ints(&[0, 0, 0, 0, 0, 0])[..]);
    assert!(ob.is_cocycle && ob.trivial);
    let ext = extend_deformation(&o, &d).unwrap().unwrap();
    assert_eq!(ext.order(), 2);
    assert!(order_n_check(&o, &ext).unwrap().valid());

    let e11 = TruncatedDeformation::new(vec![o.matrix().clone(), m(&[&[1, 0], &[0, 0]])]).unwrap();
    let ob = obstruction(&o, &e11).unwrap();
    assert!(ob.is_cocycle);
    assert!(!ob.trivial && ob.witness.is_none());
    assert_eq!(ob.ob.data(), &ints(&[-1, 0, 0, 0, -2, 0])[..]);
    assert_eq!(ob.class_residual, ints(&[-1, 0, 0, 0, -2, 0]));
    assert!(extend_deformation(&o, &e11).unwrap().is_none());

    let bad = TruncatedDeformation::new(vec![o.matrix().clone(), m(&[&[0, 0], &[1, 0]])]).unwrap();
    assert!(matches!(obstruction(&o, &bad), Err(Error::NotOrderN(_))));
}

#[test]
fn pre_ly_deformation_tables() {
    let o = base();
    let f = m(&[&[0, -1], &[0, 0]]);
    let terms = pre_ly_deformation_terms(&o, &f).unwrap();
    assert_eq!(terms.phi(1, 1), &ints(&[-1, 0])[..]);
    assert_eq!(terms.phi(1, 0), &ints(&[0, 0])[..]);
    assert_eq!(terms.phi(0, 0), &ints(&[0, 0])[..]);
    assert_eq!(terms.omega1(1, 1, 1), &ints(&[1, 0])[..]);
    assert!((0..8).all(|k| terms.omega2[k].iter().all(Rational::is_zero)));
    for t in [qi(1), qi(-2), q(1, 3)] {
        assert!(pre_ly_consistency_at(&o, &f, &t).unwrap().valid());
    }
    let zero = pre_ly_deformation_terms(&o, &Matrix::zeros(2, 2)).unwrap();
    assert!(zero.phi.iter().chain(&zero.omega1).chain(&zero.omega2).all(|v| v.iter().all(Rational::is_zero)));
    assert!(matches!(
        pre_ly_deformation_terms(&o, &m(&[&[0, 0], &[1, 0]])),
        Err(Error::NotLinearDeformation(_))
    ));
}

#[test]
fn rigidity() {
    let probe = rigidity_probe(&base()).unwrap();
    assert_eq!((probe.dim_z1, probe.rank_delta0, probe.nijenhuis_image_contained), (3, 1, false));
    let r = Representation::zero(LyAlgebra::abelian(2), 1);
    let probe = rigidity_probe(&RelRbo::new(r, Matrix::zeros(2, 1)).unwrap()).unwrap();
    assert_eq!((probe.dim_z1, probe.rank_delta0, probe.nijenhuis_image_contained), (2, 0, false));
}
