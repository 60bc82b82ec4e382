//! Cohomology of a relative Rota-Baxter operator.
//!
//! Cochains of degree `n ≥ 1` are Yamaguti cochains of the induced algebra on
//! `V` with values in `g` (through the induced representation), so a degree-1
//! cochain is a map `V → g`, stored as an `m × v` matrix in the layout of
//! [`Cochain::from_map`]. Degree 0 is the wedge square of `g` and
//! `δ(X)v = T D(X)v - <X, Tv>`.

use crate::complex::{summary, Cochain, CohomologySummary, ComplexContext};
use crate::error::{Error, Result};
use crate::linalg::{add_scaled, rank_kernel, unit_vector, vec_sub, Matrix, Rational};
use crate::rbo::{induced_lya_on_v, induced_rep_on_g, RelRbo, Wedge2};

/// The operator together with the Yamaguti complex of its induced structures.
#[derive(Debug, Clone)]
pub struct RboComplex {
    operator: RelRbo,
    ctx: ComplexContext,
}

impl RboComplex {
    pub fn new(operator: RelRbo) -> Result<Self> {
        let rep = induced_rep_on_g(&operator)?;
        let ctx = ComplexContext::new(rep)?;
        Ok(RboComplex { operator, ctx })
    }

    pub fn operator(&self) -> &RelRbo {
        &self.operator
    }

    pub fn ctx(&self) -> &ComplexContext {
        &self.ctx
    }

    /// Dimension of the degree-`p` cochains, with degree 0 the wedge square of `g`.
    pub fn cochain_dim(&self, p: usize) -> Result<usize> {
        if p == 0 {
            let m = self.operator.algebra().dim();
            Ok(m * m.saturating_sub(1) / 2)
        } else {
            self.ctx.cochain_dim(p)
        }
    }

    /// Degree-1 cochain from an `m × v` map `V → g`.
    pub fn cochain_from_map(&self, map: &Matrix) -> Result<Cochain> {
        Cochain::from_map(&self.ctx, map)
    }
}

/// `δ(X)` as an `m × v` matrix: `T D(X) - L_X T` with `L_X = <X, ·>`.
pub fn delta0_map(o: &RelRbo, x: &Wedge2) -> Result<Matrix> {
    o.require_verified()?;
    let a = o.algebra();
    if x.dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "wedge element over dimension {}, algebra has dimension {}",
            x.dim(),
            a.dim()
        )));
    }
    let t = o.matrix();
    Ok(t.matmul(&x.d_map(o.rep())).minus(&x.left_ternary(a).matmul(t)))
}

/// `δ(X)` as a degree-1 cochain of the operator's complex.
pub fn rbo_delta0(o: &RelRbo, x: &Wedge2) -> Result<Cochain> {
    let map = delta0_map(o, x)?;
    Ok(Cochain::from_map_shape(map.rows(), map.cols(), &map))
}

/// Matrix of `δ` from the wedge square of `g` (lexicographic basis) to
/// degree-1 cochains.
pub fn delta0_matrix(o: &RelRbo) -> Result<Matrix> {
    let m = o.algebra().dim();
    let mut cols = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let c = rbo_delta0(o, &Wedge2::basis(m, i, j)?)?;
            cols.push(c.into_data());
        }
    }
    let rows = m * o.rep().dim_v();
    Ok(Matrix::from_columns(rows, &cols))
}

/// Coboundary matrix from degree `p` to `p + 1`; `p = 0` is `δ`.
pub fn rbo_coboundary_matrix(c: &RboComplex, p: usize) -> Result<Matrix> {
    if p == 0 {
        delta0_matrix(&c.operator)
    } else {
        c.ctx.coboundary_matrix(p)
    }
}

/// `H^p_T = Z^p / B^p` for `p ≥ 1`, with `B^1 = δ(∧²g)`.
pub fn rbo_cohomology_dims(c: &RboComplex, p: usize) -> Result<CohomologySummary> {
    if p == 0 {
        return Err(Error::Degree("cohomology is reported from degree 1".into()));
    }
    let dim_cochains = c.cochain_dim(p)?;
    let (rank, _) = rank_kernel(&rbo_coboundary_matrix(c, p)?);
    let dim_coboundaries = rbo_coboundary_matrix(c, p - 1)?.rank();
    summary(p, dim_cochains, dim_cochains - rank, dim_coboundaries)
}

/// Basis of the degree-`p` cocycles in the flattened cochain coordinates.
pub fn rbo_cocycle_basis(c: &RboComplex, p: usize) -> Result<Vec<Vec<Rational>>> {
    Ok(rank_kernel(&rbo_coboundary_matrix(c, p)?).1)
}

/// Evaluates the expanded degree-1 formulas directly on `f: V → g`
/// (an `m × v` matrix), independently of [`ComplexContext`]:
///
/// `δ_I f(u,v) = [Tu,f(v)] - [Tv,f(u)] + T(rho(f(v))u - rho(f(u))v) - f([u,v]_T)`
///
/// `δ_II f(u,v,w) = <Tu,Tv,f(w)> + <f(u),Tv,Tw> - <f(v),Tu,Tw> - f(<u,v,w>_T)
///   - T(D(f(u),Tv)w - D(f(v),Tu)w + mu(Tv,f(w))u - mu(Tu,f(w))v - mu(f(u),Tw)v + mu(f(v),Tw)u)`
///
/// The result uses the degree-2 layout of the operator's complex.
pub fn expanded_delta1(c: &RboComplex, f: &Matrix) -> Result<Cochain> {
    let o = &c.operator;
    let (r, t) = (o.rep(), o.matrix());
    let a = r.algebra();
    let (m, n) = (a.dim(), r.dim_v());
    if f.rows() != m || f.cols() != n {
        return Err(Error::Dimension(format!("f must be {m}x{n}")));
    }
    let on_v = induced_lya_on_v(o)?;
    let minus = -Rational::one();
    let e = |i| unit_vector(n, i);
    let tv: Vec<Vec<Rational>> = (0..n).map(|i| t.column(i)).collect();
    let fv: Vec<Vec<Rational>> = (0..n).map(|i| f.column(i)).collect();

    let mut data = Vec::with_capacity(c.cochain_dim(2)?);
    let wedges = c.ctx.wedge_basis();
    for &(u, v) in wedges {
        let mut out = a.bracket(&tv[u], &fv[v]);
        add_scaled(&mut out, &a.bracket(&tv[v], &fv[u]), &minus);
        let inner = vec_sub(&r.rho_of(&fv[v]).apply(&e(u)), &r.rho_of(&fv[u]).apply(&e(v)));
        add_scaled(&mut out, &t.apply(&inner), &Rational::one());
        add_scaled(&mut out, &f.apply(on_v.bracket_basis(u, v)), &minus);
        data.extend(out);
    }
    for &(u, v) in wedges {
        for w in 0..n {
            let mut out = a.ternary(&tv[u], &tv[v], &fv[w]);
            add_scaled(&mut out, &a.ternary(&fv[u], &tv[v], &tv[w]), &Rational::one());
            add_scaled(&mut out, &a.ternary(&fv[v], &tv[u], &tv[w]), &minus);
            add_scaled(&mut out, &f.apply(on_v.ternary_basis(u, v, w)), &minus);
            let mut inner = r.d_of(&fv[u], &tv[v]).apply(&e(w));
            add_scaled(&mut inner, &r.d_of(&fv[v], &tv[u]).apply(&e(w)), &minus);
            add_scaled(&mut inner, &r.mu_of(&tv[v], &fv[w]).apply(&e(u)), &Rational::one());
            add_scaled(&mut inner, &r.mu_of(&tv[u], &fv[w]).apply(&e(v)), &minus);
            add_scaled(&mut inner, &r.mu_of(&fv[u], &tv[w]).apply(&e(v)), &minus);
            add_scaled(&mut inner, &r.mu_of(&fv[v], &tv[w]).apply(&e(u)), &Rational::one());
            add_scaled(&mut out, &t.apply(&inner), &minus);
            data.extend(out);
        }
    }
    Cochain::from_flat(&c.ctx, 2, data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{two_dim, two_dim_operator};
    use crate::linalg::qi;
    use crate::structures::adjoint_rep;

    fn complex(a: i64, b: i64) -> RboComplex {
        let r = adjoint_rep(two_dim()).unwrap();
        RboComplex::new(RelRbo::new(r, two_dim_operator(&qi(a), &qi(b))).unwrap()).unwrap()
    }

    #[test]
    fn delta0_on_two_dim() {
        let c = complex(0, 1);
        let x = Wedge2::basis(2, 0, 1).unwrap();
        let d = delta0_map(c.operator(), &x).unwrap();
        assert_eq!(d, Matrix::from_i64(&[&[0, -1], &[0, 0]]));
        let cochain = rbo_delta0(c.operator(), &x).unwrap();
        assert_eq!(cochain.data(), &[qi(0), qi(0), qi(-1), qi(0)][..]);
        assert!(rbo_delta0(c.operator(), &Wedge2::zero(2)).unwrap().is_zero());
        assert!(c.ctx().coboundary(&cochain).unwrap().is_zero());
    }

    #[test]
    fn matrices_compose_to_zero() {
        let c = complex(2, 3);
        for p in 0..=1 {
            let lo = rbo_coboundary_matrix(&c, p).unwrap();
            let hi = rbo_coboundary_matrix(&c, p + 1).unwrap();
            assert!(hi.matmul(&lo).is_zero(), "degree {p}");
        }
    }

    #[test]
    fn expanded_formula_matches_generic() {
        let c = complex(1, -2);
        let f = Matrix::from_i64(&[&[3, -1], &[2, 5]]);
        let generic = c.ctx().coboundary(&c.cochain_from_map(&f).unwrap()).unwrap();
        assert_eq!(expanded_delta1(&c, &f).unwrap(), generic);
    }
}
