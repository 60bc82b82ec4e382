//! Relative Rota-Baxter operators `T: V → g` and the structures they induce.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, vec_sub, Matrix, Rational};
use crate::structures::{
    check_lya, check_representation, deformed_unchecked, homomorphism_check,
    nijenhuis_operator_check, semidirect, AxiomReport, LyAlgebra, Representation,
};

pub const RBO_BINARY: &str = "[Tu,Tv] = T(rho(Tu)v - rho(Tv)u)";
pub const RBO_TERNARY: &str = "<Tu,Tv,Tw> = T(D(Tu,Tv)w + mu(Tv,Tw)u - mu(Tu,Tw)v)";

pub const INDUCED_D_CLOSED_FORM: &str = "D_T(u,v)x = <Tu,Tv,x> - T(mu(Tv,x)u - mu(Tu,x)v)";
pub const PRE_LY_COMMUTATOR: &str = "u*v - v*u = [u,v]_T";
pub const LIFT_MATCHES_INDUCED: &str = "deformed brackets of N_T = semidirect product of the induced representation";

pub const HOM_T: &str = "T phi_V = phi_g T'";
pub const HOM_RHO: &str = "phi_V rho(x) = rho(phi_g x) phi_V";
pub const HOM_MU: &str = "phi_V mu(x,y) = mu(phi_g x, phi_g y) phi_V";
pub const HOM_D: &str = "phi_V D(x,y) = D(phi_g x, phi_g y) phi_V";

/// An element of the wedge square of an algebra of dimension `dim`,
/// stored by its coefficients on `e_i ∧ e_j`, `i < j`, in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Wedge2 {
    dim: usize,
    coeffs: Vec<Rational>,
}

fn pair_index(dim: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < dim);
    i * dim - i * (i + 1) / 2 + (j - i - 1)
}

impl Wedge2 {
    pub fn zero(dim: usize) -> Self {
        Wedge2 {
            dim,
            coeffs: vec![Rational::zero(); dim * dim.saturating_sub(1) / 2],
        }
    }

    /// `e_i ∧ e_j`; `i > j` gives the negative of the basis element.
    pub fn basis(dim: usize, i: usize, j: usize) -> Result<Self> {
        let mut out = Self::zero(dim);
        out.add_term(i, j, &Rational::one())?;
        Ok(out)
    }

    /// Coefficients in the lexicographic wedge basis.
    pub fn from_coefficients(dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() != dim * dim.saturating_sub(1) / 2 {
            return Err(Error::Dimension(format!(
                "wedge square of dimension {dim} needs {} coefficients, got {}",
                dim * dim.saturating_sub(1) / 2,
                coeffs.len()
            )));
        }
        Ok(Wedge2 { dim, coeffs })
    }

    /// `x ∧ y` for vectors.
    pub fn from_vectors(x: &[Rational], y: &[Rational]) -> Self {
        let dim = x.len();
        let mut out = Self::zero(dim);
        for (i, a) in x.iter().enumerate() {
            for (j, b) in y.iter().enumerate() {
                if i != j && !a.is_zero() && !b.is_zero() {
                    out.add_term(i, j, &(a * b)).expect("in range");
                }
            }
        }
        out
    }

    /// Adds `c · e_i ∧ e_j`.
    pub fn add_term(&mut self, i: usize, j: usize, c: &Rational) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::Dimension(format!(
                "wedge index ({}, {}) out of range for dimension {}",
                i + 1,
                j + 1,
                self.dim
            )));
        }
        if i == j {
            return Err(Error::Invariant(format!("diagonal wedge e{} ∧ e{}", i + 1, j + 1)));
        }
        if i < j {
            self.coeffs[pair_index(self.dim, i, j)] += c;
        } else {
            self.coeffs[pair_index(self.dim, j, i)] -= c;
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `e_i ∧ e_j`, antisymmetric in `(i, j)`.
    pub fn coeff(&self, i: usize, j: usize) -> Rational {
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Rational::zero(),
            std::cmp::Ordering::Less => self.coeffs[pair_index(self.dim, i, j)].clone(),
            std::cmp::Ordering::Greater => -&self.coeffs[pair_index(self.dim, j, i)],
        }
    }

    /// Nonzero terms `(i, j, c)` with `i < j`.
    pub fn terms(&self) -> Vec<(usize, usize, Rational)> {
        let mut out = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &self.coeffs[pair_index(self.dim, i, j)];
                if !c.is_zero() {
                    out.push((i, j, c.clone()));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Wedge2 {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Matrix of `z ↦ <X, z>`.
    pub fn left_ternary(&self, a: &LyAlgebra) -> Matrix {
        let mut out = Matrix::zeros(a.dim(), a.dim());
        for (i, j, c) in self.terms() {
            out.add_scaled(&a.left_ternary(&a.basis(i), &a.basis(j)), &c);
        }
        out
    }

    /// `D(X)` for the representation `r`.
    pub fn d_map(&self, r: &Representation) -> Matrix {
        let mut out = Matrix::zeros(r.dim_v(), r.dim_v());
        for (i, j, c) in self.terms() {
            out.add_scaled(r.d(i, j), &c);
        }
        out
    }

    /// `<X, z>`.
    pub fn pair(&self, a: &LyAlgebra, z: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); a.dim()];
        for (i, j, c) in self.terms() {
            add_scaled(&mut out, &a.ternary(&a.basis(i), &a.basis(j), z), &c);
        }
        out
    }

    /// Formats with the given basis names, e.g. `e1∧e2 - 1/2 e2∧e3`.
    pub fn display_with(&self, names: &[String]) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (n, (i, j, c)) in terms.into_iter().enumerate() {
            let w = format!("{}∧{}", names[i], names[j]);
            let (neg, mag) = (c.is_negative(), c.abs());
            let body = if mag.is_one() { w } else { format!("{mag} {w}") };
            match (n, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => out.push_str(&format!("-{body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
                (_, true) => out.push_str(&format!(" - {body}")),
            }
        }
        out
    }
}

impl fmt::Debug for Wedge2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.dim).map(|i| format!("e{i}")).collect();
        f.write_str(&self.display_with(&names))
    }
}

/// A linear map `T: V → g` (an `m × v` matrix) together with the
/// representation it is relative to. Only operators built through
/// [`RelRbo::new`] carry the verified flag that downstream constructions
/// require.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelRbo {
    rep: Arc<Representation>,
    t: Matrix,
    verified: bool,
}

impl RelRbo {
    /// Verifies `t` against both operator identities and returns the
    /// certified operator.
    pub fn new(rep: impl Into<Arc<Representation>>, t: Matrix) -> Result<Self> {
        let rep = rep.into();
        let rep_report = check_representation(&rep);
        if !rep_report.valid() {
            return Err(Error::InvalidRepresentation(Box::new(rep_report)));
        }
        check_rbo(&rep, &t)?.into_result(Error::NotRelativeRotaBaxter)?;
        Ok(RelRbo {
            rep,
            t,
            verified: true,
        })
    }

    /// Wraps `t` without checking anything beyond dimensions.
    pub fn unverified(rep: impl Into<Arc<Representation>>, t: Matrix) -> Result<Self> {
        let rep = rep.into();
        check_shape(&rep, &t)?;
        Ok(RelRbo {
            rep,
            t,
            verified: false,
        })
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn rep_arc(&self) -> &Arc<Representation> {
        &self.rep
    }

    pub fn algebra(&self) -> &LyAlgebra {
        self.rep.algebra()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    pub fn is_verified(&self) -> bool {
        self.verified
    }

    pub(crate) fn require_verified(&self) -> Result<()> {
        if self.verified {
            Ok(())
        } else {
            Err(Error::UnverifiedOperator)
        }
    }

    /// `T e_k`.
    pub fn image(&self, k: usize) -> Vec<Rational> {
        self.t.column(k)
    }

    /// Same representation, different operator matrix; verified afresh.
    pub fn with_matrix(&self, t: Matrix) -> Result<Self> {
        check_rbo(&self.rep, &t)?.into_result(Error::NotRelativeRotaBaxter)?;
        Ok(RelRbo {
            rep: self.rep.clone(),
            t,
            verified: true,
        })
    }
}

fn check_shape(rep: &Representation, t: &Matrix) -> Result<()> {
    let (m, v) = (rep.algebra().dim(), rep.dim_v());
    if t.rows() != m || t.cols() != v {
        return Err(Error::Dimension(format!(
            "operator is {}x{}, expected {m}x{v}",
            t.rows(),
            t.cols()
        )));
    }
    Ok(())
}

/// `[u,v]_T` on module vectors.
fn induced_bracket(r: &Representation, t: &Matrix, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
    vec_sub(&r.rho_of(&t.apply(u)).apply(v), &r.rho_of(&t.apply(v)).apply(u))
}

/// `<u,v,w>_T` on module vectors.
fn induced_ternary(
    r: &Representation,
    t: &Matrix,
    u: &[Rational],
    v: &[Rational],
    w: &[Rational],
) -> Vec<Rational> {
    let (tu, tv, tw) = (t.apply(u), t.apply(v), t.apply(w));
    let mut out = r.d_of(&tu, &tv).apply(w);
    add_scaled(&mut out, &r.mu_of(&tv, &tw).apply(u), &Rational::one());
    add_scaled(&mut out, &r.mu_of(&tu, &tw).apply(v), &-Rational::one());
    out
}

/// Evaluates both operator identities on all basis pairs and triples of `V`.
pub fn check_rbo(r: &Representation, t: &Matrix) -> Result<AxiomReport> {
    check_shape(r, t)?;
    let a = r.algebra();
    let n = r.dim_v();
    let e: Vec<Vec<Rational>> = (0..n).map(|i| crate::linalg::unit_vector(n, i)).collect();
    let te: Vec<Vec<Rational>> = (0..n).map(|i| t.column(i)).collect();
    let mut report = AxiomReport::new();
    for u in 0..n {
        for v in 0..n {
            let lhs = a.bracket(&te[u], &te[v]);
            let rhs = t.apply(&induced_bracket(r, t, &e[u], &e[v]));
            report.record(RBO_BINARY, &[u, v], vec_sub(&lhs, &rhs));
        }
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let lhs = a.ternary(&te[u], &te[v], &te[w]);
                let rhs = t.apply(&induced_ternary(r, t, &e[u], &e[v], &e[w]));
                report.record(RBO_TERNARY, &[u, v, w], vec_sub(&lhs, &rhs));
            }
        }
    }
    Ok(report)
}

/// The Lie-Yamaguti structure `([.,.]_T, <.,.,.>_T)` on `V`.
pub fn induced_lya_on_v(o: &RelRbo) -> Result<LyAlgebra> {
    o.require_verified()?;
    Ok(induced_unchecked(o))
}

fn induced_unchecked(o: &RelRbo) -> LyAlgebra {
    let r = o.rep();
    let n = r.dim_v();
    let e = |i| crate::linalg::unit_vector(n, i);
    LyAlgebra::from_fn_named(
        r.names().to_vec(),
        |i, j| induced_bracket(r, &o.t, &e(i), &e(j)),
        |i, j, k| induced_ternary(r, &o.t, &e(i), &e(j), &e(k)),
    )
}

/// The representation of the induced algebra on `g`:
/// `ϱ(u)x = [Tu,x] + T(rho(x)u)` and
/// `ϖ(u,v)x = <x,Tu,Tv> - T(D(x,Tu)v - mu(x,Tv)u)`.
pub fn induced_rep_on_g(o: &RelRbo) -> Result<Representation> {
    o.require_verified()?;
    let algebra = Arc::new(induced_unchecked(o));
    let (r, t) = (o.rep(), &o.t);
    let a = r.algebra();
    let (m, n) = (a.dim(), r.dim_v());
    let ev = |i| crate::linalg::unit_vector(n, i);
    let eg = |i| crate::linalg::unit_vector(m, i);
    let mut rho = Vec::with_capacity(n);
    for u in 0..n {
        let tu = t.column(u);
        let cols: Vec<Vec<Rational>> = (0..m)
            .map(|x| {
                let mut col = a.bracket(&tu, &eg(x));
                add_scaled(&mut col, &t.apply(&r.rho(x).apply(&ev(u))), &Rational::one());
                col
            })
            .collect();
        rho.push(Matrix::from_columns(m, &cols));
    }
    let mut mu = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let (tu, tv) = (t.column(u), t.column(v));
            let cols: Vec<Vec<Rational>> = (0..m)
                .map(|x| {
                    let x = eg(x);
                    let mut col = a.ternary(&x, &tu, &tv);
                    let mut inner = r.d_of(&x, &tu).apply(&ev(v));
                    add_scaled(&mut inner, &r.mu_of(&x, &tv).apply(&ev(u)), &-Rational::one());
                    add_scaled(&mut col, &t.apply(&inner), &-Rational::one());
                    col
                })
                .collect();
            mu.push(Matrix::from_columns(m, &cols));
        }
    }
    Representation::new(algebra, rho, mu)?.with_names(a.names().to_vec())
}

/// `x ↦ <Tu,Tv,x> - T(mu(Tv,x)u - mu(Tu,x)v)` for basis vectors `u, v`.
pub fn induced_d_closed_form(o: &RelRbo, u: usize, v: usize) -> Matrix {
    let (r, t) = (o.rep(), &o.t);
    let a = r.algebra();
    let (m, n) = (a.dim(), r.dim_v());
    let (tu, tv) = (t.column(u), t.column(v));
    let (eu, evv) = (crate::linalg::unit_vector(n, u), crate::linalg::unit_vector(n, v));
    let cols: Vec<Vec<Rational>> = (0..m)
        .map(|x| {
            let x = a.basis(x);
            let mut col = a.ternary(&tu, &tv, &x);
            let mut inner = r.mu_of(&tv, &x).apply(&eu);
            add_scaled(&mut inner, &r.mu_of(&tu, &x).apply(&evv), &-Rational::one());
            add_scaled(&mut col, &t.apply(&inner), &-Rational::one());
            col
        })
        .collect();
    Matrix::from_columns(m, &cols)
}

/// Runs every consequence of the operator identities on the induced
/// structures: the induced algebra and representation satisfy their axioms,
/// `D` of the induced representation has the closed form, and `T` is a
/// homomorphism from the induced algebra to `g`.
pub fn induced_structure_check(o: &RelRbo) -> Result<AxiomReport> {
    let on_v = induced_lya_on_v(o)?;
    let on_g = induced_rep_on_g(o)?;
    let mut report = check_lya(&on_v);
    report.merge(check_representation(&on_g));
    let n = o.rep().dim_v();
    for u in 0..n {
        for v in 0..n {
            let diff = on_g.d(u, v).minus(&induced_d_closed_form(o, u, v));
            report.record(INDUCED_D_CLOSED_FORM, &[u, v], diff.entries().to_vec());
        }
    }
    report.merge(homomorphism_check(&on_v, o.algebra(), &o.t)?);
    Ok(report)
}

/// Product tables on `V`: `u*v = rho(Tu)v` and `{u,v,w} = mu(Tv,Tw)u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLyProducts {
    dim: usize,
    binary: Vec<Vec<Rational>>,
    ternary: Vec<Vec<Rational>>,
}

impl PreLyProducts {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `e_u * e_v`.
    pub fn binary(&self, u: usize, v: usize) -> &[Rational] {
        &self.binary[u * self.dim + v]
    }

    /// `{e_u, e_v, e_w}`.
    pub fn ternary(&self, u: usize, v: usize, w: usize) -> &[Rational] {
        &self.ternary[(u * self.dim + v) * self.dim + w]
    }
}

pub(crate) fn pre_ly_unchecked(r: &Representation, t: &Matrix) -> PreLyProducts {
    let n = r.dim_v();
    let mut binary = Vec::with_capacity(n * n);
    for u in 0..n {
        let rho_tu = r.rho_of(&t.column(u));
        for v in 0..n {
            binary.push(rho_tu.column(v));
        }
    }
    let mut ternary = Vec::with_capacity(n * n * n);
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                ternary.push(r.mu_of(&t.column(v), &t.column(w)).column(u));
            }
        }
    }
    PreLyProducts {
        dim: n,
        binary,
        ternary,
    }
}

pub fn pre_ly_products(o: &RelRbo) -> Result<PreLyProducts> {
    o.require_verified()?;
    Ok(pre_ly_unchecked(o.rep(), &o.t))
}

/// `u*v - v*u = [u,v]_T` on basis pairs.
pub fn pre_ly_commutator_check(o: &RelRbo) -> Result<AxiomReport> {
    let p = pre_ly_products(o)?;
    let on_v = induced_lya_on_v(o)?;
    let mut report = AxiomReport::new();
    for u in 0..p.dim {
        for v in 0..p.dim {
            let lhs = vec_sub(p.binary(u, v), p.binary(v, u));
            report.record(PRE_LY_COMMUTATOR, &[u, v], vec_sub(&lhs, on_v.bracket_basis(u, v)));
        }
    }
    Ok(report)
}

/// Block matrix `[[0, T], [0, 0]]` on `g ⊕ V`, for any `m × v` matrix.
pub fn nijenhuis_lift_matrix(t: &Matrix) -> Matrix {
    let (m, v) = (t.rows(), t.cols());
    let mut out = Matrix::zeros(m + v, m + v);
    for i in 0..m {
        for j in 0..v {
            out[(i, m + j)] = t[(i, j)].clone();
        }
    }
    out
}

/// `N_T` on the semidirect product `g ⋉ V`.
pub fn lift_to_nijenhuis(o: &RelRbo) -> Result<Matrix> {
    o.require_verified()?;
    Ok(nijenhuis_lift_matrix(&o.t))
}

/// Checks that `N_T` is a Nijenhuis operator on the semidirect product and
/// that its deformed brackets, read on `V ⊕ g`, are exactly the semidirect
/// product of the induced representation.
pub fn lift_consistency_check(o: &RelRbo) -> Result<AxiomReport> {
    let n_t = lift_to_nijenhuis(o)?;
    let semi = semidirect(o.rep());
    let mut report = nijenhuis_operator_check(&semi, &n_t)?;
    let deformed = deformed_unchecked(&semi, &n_t);
    let induced = semidirect(&induced_rep_on_g(o)?);
    let (m, v) = (o.algebra().dim(), o.rep().dim_v());
    // V ⊕ g → g ⊕ V
    let mut perm = Matrix::zeros(m + v, m + v);
    for k in 0..v {
        perm[(m + k, k)] = Rational::one();
    }
    for x in 0..m {
        perm[(x, v + x)] = Rational::one();
    }
    for w in homomorphism_check(&induced, &deformed, &perm)?.violations {
        report.record(LIFT_MATCHES_INDUCED, &w.args, w.residual);
    }
    Ok(report)
}

/// Checks that `(phi_g, phi_v)` is a homomorphism from `source` to `target`:
/// `phi_g` preserves both brackets, `T_target phi_v = phi_g T_source`, and
/// `phi_v` intertwines `rho` and `mu` (and hence `D`, checked as well).
pub fn rbo_homomorphism_check(
    source: &RelRbo,
    target: &RelRbo,
    phi_g: &Matrix,
    phi_v: &Matrix,
) -> Result<AxiomReport> {
    if source.rep != target.rep {
        return Err(Error::Invariant(
            "operators must share the algebra and representation".into(),
        ));
    }
    let r = source.rep();
    let n = r.dim_v();
    if phi_v.rows() != n || phi_v.cols() != n {
        return Err(Error::Dimension(format!("phi_V must be {n}x{n}")));
    }
    let mut report = homomorphism_check(r.algebra(), r.algebra(), phi_g)?;
    report.merge(intertwining_report(r, phi_g, phi_v));
    let lhs = target.t.matmul(phi_v);
    let rhs = phi_g.matmul(&source.t);
    for k in 0..n {
        report.record(HOM_T, &[k], vec_sub(&lhs.column(k), &rhs.column(k)));
    }
    Ok(report)
}

fn intertwining_report(r: &Representation, phi_g: &Matrix, phi_v: &Matrix) -> AxiomReport {
    let m = r.algebra().dim();
    let img: Vec<Vec<Rational>> = (0..m).map(|i| phi_g.column(i)).collect();
    let mut report = AxiomReport::new();
    for x in 0..m {
        let diff = phi_v.matmul(r.rho(x)).minus(&r.rho_of(&img[x]).matmul(phi_v));
        report.record(HOM_RHO, &[x], diff.entries().to_vec());
    }
    for x in 0..m {
        for y in 0..m {
            let diff = phi_v.matmul(r.mu(x, y)).minus(&r.mu_of(&img[x], &img[y]).matmul(phi_v));
            report.record(HOM_MU, &[x, y], diff.entries().to_vec());
            let diff = phi_v.matmul(r.d(x, y)).minus(&r.d_of(&img[x], &img[y]).matmul(phi_v));
            report.record(HOM_D, &[x, y], diff.entries().to_vec());
        }
    }
    report
}

/// `phi_g^{-1} T phi_v` for an automorphism `phi_g` and an intertwining
/// `phi_v`.
pub fn conjugate_rbo(o: &RelRbo, phi_g: &Matrix, phi_v: &Matrix) -> Result<RelRbo> {
    o.require_verified()?;
    let r = o.rep();
    let (m, n) = (r.algebra().dim(), r.dim_v());
    if phi_g.rows() != m || phi_g.cols() != m || phi_v.rows() != n || phi_v.cols() != n {
        return Err(Error::Dimension(format!(
            "expected phi_g {m}x{m} and phi_v {n}x{n}"
        )));
    }
    let inv_g = phi_g
        .inverse()
        .ok_or_else(|| Error::Singular("phi_g is not invertible".into()))?;
    if phi_v.inverse().is_none() {
        return Err(Error::Singular("phi_v is not invertible".into()));
    }
    homomorphism_check(r.algebra(), r.algebra(), phi_g)?.into_result(Error::NotAutomorphism)?;
    intertwining_report(r, phi_g, phi_v).into_result(Error::NotIntertwining)?;
    o.with_matrix(inv_g.matmul(&o.t).matmul(phi_v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{two_dim, two_dim_operator};
    use crate::linalg::{q, qi};
    use crate::structures::adjoint_rep;

    fn two_dim_rbo(a: i64, b: i64) -> RelRbo {
        let r = adjoint_rep(two_dim()).unwrap();
        RelRbo::new(r, two_dim_operator(&qi(a), &qi(b))).unwrap()
    }

    #[test]
    fn wedge_indexing() {
        let mut x = Wedge2::zero(4);
        x.add_term(2, 1, &qi(3)).unwrap();
        assert_eq!(x.coeff(1, 2), qi(-3));
        assert_eq!(x.coeff(2, 1), qi(3));
        assert_eq!(x.coefficients()[3], qi(-3));
        assert!(Wedge2::basis(4, 1, 1).is_err());
        assert_eq!(
            Wedge2::from_vectors(&[qi(1), qi(1), qi(0)], &[qi(0), qi(1), qi(2)]).terms(),
            vec![(0, 1, qi(1)), (0, 2, qi(2)), (1, 2, qi(2))]
        );
    }

    #[test]
    fn identity_is_not_rota_baxter() {
        let r = adjoint_rep(two_dim()).unwrap();
        let report = check_rbo(&r, &Matrix::identity(2)).unwrap();
        let w = report.first(RBO_BINARY).unwrap();
        assert_eq!(w.args, vec![0, 1]);
        // [e1,e2] = e1 against T(rho(e1)e2 - rho(e2)e1) = 2 e1
        assert_eq!(w.residual, vec![qi(-1), qi(0)]);
        assert!(matches!(
            RelRbo::new(r, Matrix::identity(2)),
            Err(Error::NotRelativeRotaBaxter(_))
        ));
    }

    #[test]
    fn induced_structures_on_two_dim() {
        let o = two_dim_rbo(0, 1);
        let on_v = induced_lya_on_v(&o).unwrap();
        assert_eq!(on_v.bracket_basis(0, 1), &[qi(1), qi(0)][..]);
        assert_eq!(on_v.ternary_basis(0, 1, 1), &[qi(1), qi(0)][..]);
        assert_eq!(on_v.ternary_basis(0, 1, 0), &[qi(0), qi(0)][..]);
        let on_g = induced_rep_on_g(&o).unwrap();
        assert!(on_g.rho(0).is_zero());
        assert_eq!(on_g.rho(1), &Matrix::from_i64(&[&[-1, 0], &[0, 0]]));
        assert!(induced_structure_check(&o).unwrap().valid());
        assert!(lift_consistency_check(&o).unwrap().valid());
        assert!(pre_ly_commutator_check(&o).unwrap().valid());
        let p = pre_ly_products(&o).unwrap();
        assert_eq!(p.binary(1, 0), &[qi(-1), qi(0)][..]);
        assert_eq!(p.ternary(0, 1, 1), &[qi(1), qi(0)][..]);
    }

    #[test]
    fn unverified_operators_are_refused() {
        let r = adjoint_rep(two_dim()).unwrap();
        let o = RelRbo::unverified(r, Matrix::identity(2)).unwrap();
        assert!(matches!(induced_lya_on_v(&o), Err(Error::UnverifiedOperator)));
        assert!(matches!(lift_to_nijenhuis(&o), Err(Error::UnverifiedOperator)));
        let semi = semidirect(o.rep());
        let n = nijenhuis_lift_matrix(o.matrix());
        assert!(!nijenhuis_operator_check(&semi, &n).unwrap().valid());
    }

    #[test]
    fn conjugation() {
        let o = two_dim_rbo(3, 5);
        let same = conjugate_rbo(&o, &Matrix::identity(2), &Matrix::identity(2)).unwrap();
        assert_eq!(same.matrix(), o.matrix());

        let phi = Matrix::diagonal(&[q(1, 2), qi(1)]);
        let c = conjugate_rbo(&o, &phi, &phi).unwrap();
        assert_eq!(c.matrix(), &two_dim_operator(&qi(6), &qi(5)));

        let two = Matrix::scalar(2, &qi(2));
        assert!(matches!(conjugate_rbo(&o, &two, &two), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn homomorphisms() {
        let o = two_dim_rbo(3, 5);
        let id = Matrix::identity(2);
        assert!(rbo_homomorphism_check(&o, &o, &id, &id).unwrap().valid());
        let p = two_dim_rbo(0, 1);
        let report = rbo_homomorphism_check(&p, &o, &id, &Matrix::scalar(2, &qi(2))).unwrap();
        assert!(!report.valid());
        assert!(report.fails(HOM_T));
    }
}
