//! Linear, order-n and trivial deformations of a relative Rota-Baxter
//! operator, Nijenhuis elements, and obstructions to extending a deformation.

use crate::complex::Cochain;
use crate::error::{Error, Result};
use crate::linalg::{
    add_scaled, rank_kernel, reduce_modulo_columns, solve_linear, unit_vector, vec_sub, Matrix,
    Rational,
};
use crate::rbo::{check_rbo, pre_ly_unchecked, rbo_homomorphism_check, RelRbo, Wedge2};
use crate::rbo_cohomology::{delta0_map, delta0_matrix, RboComplex};
use crate::structures::{is_adjoint, AxiomReport, Representation};

pub const LIN_BINARY_LINEAR: &str =
    "[Fu,Tv] + [Tu,Fv] = T(rho(Fu)v - rho(Fv)u) + F(rho(Tu)v - rho(Tv)u)";
pub const LIN_BINARY_QUADRATIC: &str = "[Fu,Fv] = F(rho(Fu)v - rho(Fv)u)";
pub const LIN_TERNARY_LINEAR: &str = "<Tu,Tv,Fw> + <Tu,Fv,Tw> + <Fu,Tv,Tw> = F(K(T,T)) + T(K(T,F) + K(F,T))";
pub const LIN_TERNARY_QUADRATIC: &str = "<Fu,Fv,Tw> + <Tu,Fv,Fw> + <Fu,Tv,Fw> = T(K(F,F)) + F(K(T,F) + K(F,T))";
pub const LIN_TERNARY_CUBIC: &str = "<Fu,Fv,Fw> = F(K(F,F))";

pub const NIJ_BRACKET: &str = "[<X,x>,<X,y>] = 0";
pub const NIJ_TERNARY_QUADRATIC: &str =
    "<<X,x>,<X,y>,z> + <<X,x>,y,<X,z>> + <x,<X,y>,<X,z>> = 0";
pub const NIJ_TERNARY_CUBIC: &str = "<<X,x>,<X,y>,<X,z>> = 0";
pub const NIJ_MU_QUADRATIC: &str =
    "mu(z,<X,w>)D(X) + mu(<X,z>,w)D(X) + mu(<X,z>,<X,w>) = 0";
pub const NIJ_MU_CUBIC: &str = "mu(<X,z>,<X,w>)D(X) = 0";
pub const NIJ_CLOSING: &str = "<X, T(D(X)v) - <X,Tv>> = 0";
pub const NIJ_RHO: &str = "rho(<X,x>)D(X) = 0";

pub const ORDER_BINARY: &str = "sum_{i+j=s} [T_i u, T_j v] - T_i(rho(T_j u)v - rho(T_j v)u) = 0";
pub const ORDER_TERNARY: &str =
    "sum_{i+j+k=s} <T_i u, T_j v, T_k w> - T_i(D(T_j u, T_k v)w + mu(T_j v, T_k w)u - mu(T_j u, T_k w)v) = 0";

pub const EQ_BRACKET: &str = "[phi x, phi y] = phi [x,y]";
pub const EQ_TERNARY: &str = "<phi x, phi y, phi z> = phi <x,y,z>";
pub const EQ_RHO: &str = "psi rho(x) = rho(phi x) psi";
pub const EQ_MU: &str = "psi mu(x,y) = mu(phi x, phi y) psi";
pub const EQ_OPERATOR: &str = "T1_t psi = phi T2_t";
pub const EQ_DIFFERENCE: &str = "T2 - T1 = delta(X)";

pub const PRE_LY_BINARY: &str = "u *_t v = u * v + t phi(u,v)";
pub const PRE_LY_TERNARY: &str = "{u,v,w}_t = {u,v,w} + t omega1(u,v,w) + t^2 omega2(u,v,w)";

/// `T_t = T_0 + T_1 t + ... + T_n t^n` modulo `t^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedDeformation {
    terms: Vec<Matrix>,
}

impl TruncatedDeformation {
    pub fn new(terms: Vec<Matrix>) -> Result<Self> {
        let first = terms
            .first()
            .ok_or_else(|| Error::Invariant("a deformation needs at least the base term".into()))?;
        let shape = (first.rows(), first.cols());
        if let Some(bad) = terms.iter().position(|t| (t.rows(), t.cols()) != shape) {
            return Err(Error::Dimension(format!(
                "term {bad} is {}x{}, base is {}x{}",
                terms[bad].rows(),
                terms[bad].cols(),
                shape.0,
                shape.1
            )));
        }
        Ok(TruncatedDeformation { terms })
    }

    /// `[T, frak_t]`.
    pub fn linear(o: &RelRbo, frak_t: Matrix) -> Result<Self> {
        Self::new(vec![o.matrix().clone(), frak_t])
    }

    pub fn constant(o: &RelRbo) -> Self {
        TruncatedDeformation {
            terms: vec![o.matrix().clone()],
        }
    }

    pub fn order(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn terms(&self) -> &[Matrix] {
        &self.terms
    }

    pub fn term(&self, i: usize) -> Option<&Matrix> {
        self.terms.get(i)
    }

    /// `T_1`, or `None` for order 0.
    pub fn infinitesimal(&self) -> Option<&Matrix> {
        self.terms.get(1)
    }

    /// Evaluates `sum T_i t^i` at a number.
    pub fn evaluate(&self, t: &Rational) -> Matrix {
        let mut out = Matrix::zeros(self.terms[0].rows(), self.terms[0].cols());
        let mut power = Rational::one();
        for term in &self.terms {
            out.add_scaled(term, &power);
            power = &power * t;
        }
        out
    }

    pub fn extended(&self, next: Matrix) -> Result<Self> {
        let mut terms = self.terms.clone();
        terms.push(next);
        Self::new(terms)
    }
}

fn check_operator_shape(o: &RelRbo, f: &Matrix) -> Result<()> {
    let (m, v) = (o.algebra().dim(), o.rep().dim_v());
    if f.rows() != m || f.cols() != v {
        return Err(Error::Dimension(format!(
            "deformation term is {}x{}, expected {m}x{v}",
            f.rows(),
            f.cols()
        )));
    }
    Ok(())
}

/// `D(Ju,Kv)w + mu(Jv,Kw)u - mu(Ju,Kw)v` on basis vectors.
fn kappa(r: &Representation, j: &Matrix, k: &Matrix, u: usize, v: usize, w: usize) -> Vec<Rational> {
    let n = r.dim_v();
    let (ju, jv) = (j.column(u), j.column(v));
    let (kv, kw) = (k.column(v), k.column(w));
    let mut out = r.d_of(&ju, &kv).apply(&unit_vector(n, w));
    add_scaled(&mut out, &r.mu_of(&jv, &kw).apply(&unit_vector(n, u)), &Rational::one());
    add_scaled(&mut out, &r.mu_of(&ju, &kw).apply(&unit_vector(n, v)), &-Rational::one());
    out
}

/// `rho(Ju)v - rho(Jv)u` on basis vectors.
fn beta(r: &Representation, j: &Matrix, u: usize, v: usize) -> Vec<Rational> {
    let n = r.dim_v();
    vec_sub(
        &r.rho_of(&j.column(u)).apply(&unit_vector(n, v)),
        &r.rho_of(&j.column(v)).apply(&unit_vector(n, u)),
    )
}

/// The five identities equivalent to `T + tF` being an operator for every
/// `t`: the `t` and `t²` coefficients of the binary condition and the `t`,
/// `t²`, `t³` coefficients of the ternary one. `K(J,K)` abbreviates
/// `D(Ju,Kv)w + mu(Jv,Kw)u - mu(Ju,Kw)v`.
pub fn linear_deformation_check(o: &RelRbo, f: &Matrix) -> Result<AxiomReport> {
    o.require_verified()?;
    check_operator_shape(o, f)?;
    let (r, t) = (o.rep(), o.matrix());
    let a = r.algebra();
    let n = r.dim_v();
    let minus = -Rational::one();
    let mut report = AxiomReport::new();
    for u in 0..n {
        for v in 0..n {
            let (tu, tv, fu, fv) = (t.column(u), t.column(v), f.column(u), f.column(v));
            let mut lin = a.bracket(&fu, &tv);
            add_scaled(&mut lin, &a.bracket(&tu, &fv), &Rational::one());
            add_scaled(&mut lin, &t.apply(&beta(r, f, u, v)), &minus);
            add_scaled(&mut lin, &f.apply(&beta(r, t, u, v)), &minus);
            report.record(LIN_BINARY_LINEAR, &[u, v], lin);

            let quad = vec_sub(&a.bracket(&fu, &fv), &f.apply(&beta(r, f, u, v)));
            report.record(LIN_BINARY_QUADRATIC, &[u, v], quad);
        }
    }
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let (tu, tv, tw) = (t.column(u), t.column(v), t.column(w));
                let (fu, fv, fw) = (f.column(u), f.column(v), f.column(w));
                let mut mixed = kappa(r, t, f, u, v, w);
                add_scaled(&mut mixed, &kappa(r, f, t, u, v, w), &Rational::one());

                let mut lin = a.ternary(&tu, &tv, &fw);
                add_scaled(&mut lin, &a.ternary(&tu, &fv, &tw), &Rational::one());
                add_scaled(&mut lin, &a.ternary(&fu, &tv, &tw), &Rational::one());
                add_scaled(&mut lin, &f.apply(&kappa(r, t, t, u, v, w)), &minus);
                add_scaled(&mut lin, &t.apply(&mixed), &minus);
                report.record(LIN_TERNARY_LINEAR, &[u, v, w], lin);

                let mut quad = a.ternary(&fu, &fv, &tw);
                add_scaled(&mut quad, &a.ternary(&tu, &fv, &fw), &Rational::one());
                add_scaled(&mut quad, &a.ternary(&fu, &tv, &fw), &Rational::one());
                add_scaled(&mut quad, &t.apply(&kappa(r, f, f, u, v, w)), &minus);
                add_scaled(&mut quad, &f.apply(&mixed), &minus);
                report.record(LIN_TERNARY_QUADRATIC, &[u, v, w], quad);

                let cubic = vec_sub(&a.ternary(&fu, &fv, &fw), &f.apply(&kappa(r, f, f, u, v, w)));
                report.record(LIN_TERNARY_CUBIC, &[u, v, w], cubic);
            }
        }
    }
    Ok(report)
}

/// Checks `T + tF` directly with [`check_rbo`] at each sampled `t`; failures
/// are labelled with the sample.
pub fn sampled_linear_check(o: &RelRbo, f: &Matrix, samples: &[Rational]) -> Result<AxiomReport> {
    check_operator_shape(o, f)?;
    let mut report = AxiomReport::new();
    for t in samples {
        let mut m = o.matrix().clone();
        m.add_scaled(f, t);
        for w in check_rbo(o.rep(), &m)?.violations {
            report.record(&format!("{} at t = {t}", w.identity), &w.args, w.residual);
        }
    }
    Ok(report)
}

/// Pass/fail of one Nijenhuis-element condition, with every witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionOutcome {
    pub label: &'static str,
    pub report: AxiomReport,
}

impl ConditionOutcome {
    pub fn passed(&self) -> bool {
        self.report.valid()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisReport {
    pub element: Wedge2,
    /// The three bracket conditions, the two `mu` conditions and the closing
    /// condition, in that order. These decide the verdict.
    pub conditions: Vec<ConditionOutcome>,
    /// `rho(<X,x>)D(X) = 0`, the `t²` part of `rho`-intertwining. Reported
    /// only; it is not part of the definition.
    pub rho_condition: ConditionOutcome,
    /// For operators over the adjoint representation, the verdict of the
    /// reduced set (bracket conditions plus closing condition).
    pub reduced: Option<bool>,
}

impl NijenhuisReport {
    pub fn is_nijenhuis(&self) -> bool {
        self.conditions.iter().all(ConditionOutcome::passed)
    }

    pub fn first_failure(&self) -> Option<&ConditionOutcome> {
        self.conditions.iter().find(|c| !c.passed())
    }
}

pub fn nijenhuis_element_check(o: &RelRbo, x: &Wedge2) -> Result<NijenhuisReport> {
    o.require_verified()?;
    let r = o.rep();
    let a = r.algebra();
    if x.dim() != a.dim() {
        return Err(Error::Dimension(format!(
            "wedge element over dimension {}, algebra has dimension {}",
            x.dim(),
            a.dim()
        )));
    }
    let m = a.dim();
    let l = x.left_ternary(a);
    let dx = x.d_map(r);
    let lx: Vec<Vec<Rational>> = (0..m).map(|i| l.column(i)).collect();
    let e: Vec<Vec<Rational>> = (0..m).map(|i| a.basis(i)).collect();

    let mut bracket = AxiomReport::new();
    for i in 0..m {
        for j in 0..m {
            bracket.record(NIJ_BRACKET, &[i, j], a.bracket(&lx[i], &lx[j]));
        }
    }
    let mut quad = AxiomReport::new();
    let mut cubic = AxiomReport::new();
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                let mut q = a.ternary(&lx[i], &lx[j], &e[k]);
                add_scaled(&mut q, &a.ternary(&lx[i], &e[j], &lx[k]), &Rational::one());
                add_scaled(&mut q, &a.ternary(&e[i], &lx[j], &lx[k]), &Rational::one());
                quad.record(NIJ_TERNARY_QUADRATIC, &[i, j, k], q);
                cubic.record(NIJ_TERNARY_CUBIC, &[i, j, k], a.ternary(&lx[i], &lx[j], &lx[k]));
            }
        }
    }
    let mut mu_quad = AxiomReport::new();
    let mut mu_cubic = AxiomReport::new();
    for z in 0..m {
        for w in 0..m {
            let both = r.mu_of(&lx[z], &lx[w]);
            let mut q = r.mu_of(&e[z], &lx[w]).plus(&r.mu_of(&lx[z], &e[w])).matmul(&dx);
            q.add_scaled(&both, &Rational::one());
            mu_quad.record(NIJ_MU_QUADRATIC, &[z, w], q.entries().to_vec());
            mu_cubic.record(NIJ_MU_CUBIC, &[z, w], both.matmul(&dx).entries().to_vec());
        }
    }
    let closing_map = l.matmul(&delta0_map(o, x)?);
    let mut closing = AxiomReport::new();
    for v in 0..r.dim_v() {
        closing.record(NIJ_CLOSING, &[v], closing_map.column(v));
    }
    let mut rho = AxiomReport::new();
    for i in 0..m {
        rho.record(NIJ_RHO, &[i], r.rho_of(&lx[i]).matmul(&dx).entries().to_vec());
    }

    let outcome = |label, report| ConditionOutcome { label, report };
    let conditions = vec![
        outcome(NIJ_BRACKET, bracket),
        outcome(NIJ_TERNARY_QUADRATIC, quad),
        outcome(NIJ_TERNARY_CUBIC, cubic),
        outcome(NIJ_MU_QUADRATIC, mu_quad),
        outcome(NIJ_MU_CUBIC, mu_cubic),
        outcome(NIJ_CLOSING, closing),
    ];
    let reduced = is_adjoint(r).then(|| {
        [0, 1, 2, 5].iter().all(|&i| conditions[i].passed())
    });
    Ok(NijenhuisReport {
        element: x.clone(),
        conditions,
        rho_condition: outcome(NIJ_RHO, rho),
        reduced,
    })
}

/// `[T, δ(X)]` for a Nijenhuis element `X`.
pub fn trivial_deformation_from(o: &RelRbo, x: &Wedge2) -> Result<TruncatedDeformation> {
    let report = nijenhuis_element_check(o, x)?;
    if let Some(failed) = report.first_failure() {
        return Err(Error::NotNijenhuisElement {
            condition: failed.label.to_string(),
            report: Box::new(failed.report.clone()),
        });
    }
    TruncatedDeformation::linear(o, delta0_map(o, x)?)
}

/// `(Id + t L_X, Id + t D(X))` at a number `t`.
pub fn trivializing_pair(o: &RelRbo, x: &Wedge2, t: &Rational) -> (Matrix, Matrix) {
    let a = o.algebra();
    let phi = Matrix::identity(a.dim()).plus(&x.left_ternary(a).scale(t));
    let psi = Matrix::identity(o.rep().dim_v()).plus(&x.d_map(o.rep()).scale(t));
    (phi, psi)
}

/// Checks at a number `t` that `(Id + t L_X, Id + t D(X))` is a homomorphism
/// from `d` evaluated at `t` to the base operator.
pub fn trivial_homomorphism_at(
    o: &RelRbo,
    d: &TruncatedDeformation,
    x: &Wedge2,
    t: &Rational,
) -> Result<AxiomReport> {
    let source = RelRbo::unverified(o.rep_arc().clone(), d.evaluate(t))?;
    let (phi, psi) = trivializing_pair(o, x, t);
    rbo_homomorphism_check(&source, o, &phi, &psi)
}

fn coefficient_label(label: &str, k: usize) -> String {
    format!("{label} [t^{k}]")
}

fn poly_get<'a>(p: &'a [Matrix], i: usize) -> Option<&'a Matrix> {
    p.get(i)
}

/// Checks, coefficient by coefficient in `t`, that the polynomial pair
/// `(phi_t, psi_t)` is a homomorphism from `d2` to `d1`: `phi_t` preserves
/// both brackets, `psi_t` intertwines `rho` and `mu` through `phi_t`, and
/// `d1 psi_t = phi_t d2`. With `truncate = Some(n)` only coefficients up to
/// `t^n` are compared; otherwise every coefficient is.
pub fn polynomial_homomorphism_check(
    o: &RelRbo,
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
    phi: &[Matrix],
    psi: &[Matrix],
    truncate: Option<usize>,
) -> Result<AxiomReport> {
    let r = o.rep();
    let a = r.algebra();
    let (m, n) = (a.dim(), r.dim_v());
    if phi.is_empty() || psi.is_empty() {
        return Err(Error::Invariant("phi_t and psi_t need a constant term".into()));
    }
    if phi.iter().any(|p| p.rows() != m || p.cols() != m) || psi.iter().any(|p| p.rows() != n || p.cols() != n) {
        return Err(Error::Dimension(format!("phi_t terms must be {m}x{m}, psi_t terms {n}x{n}")));
    }
    for d in [d1, d2] {
        for term in d.terms() {
            check_operator_shape(o, term)?;
        }
    }
    let (dp, ds) = (phi.len() - 1, psi.len() - 1);
    let cap = |k: usize| truncate.map_or(k, |t| t.min(k));
    let minus = -Rational::one();
    let mut report = AxiomReport::new();

    let img: Vec<Vec<Vec<Rational>>> = phi.iter().map(|p| (0..m).map(|i| p.column(i)).collect()).collect();
    for k in 0..=cap(2 * dp) {
        let label = coefficient_label(EQ_BRACKET, k);
        for x in 0..m {
            for y in 0..m {
                let mut res = vec![Rational::zero(); m];
                for i in 0..=k.min(dp) {
                    if k - i <= dp {
                        add_scaled(&mut res, &a.bracket(&img[i][x], &img[k - i][y]), &Rational::one());
                    }
                }
                if let Some(p) = poly_get(phi, k) {
                    add_scaled(&mut res, &p.apply(a.bracket_basis(x, y)), &minus);
                }
                report.record(&label, &[x, y], res);
            }
        }
    }
    for k in 0..=cap(3 * dp) {
        let label = coefficient_label(EQ_TERNARY, k);
        for x in 0..m {
            for y in 0..m {
                for z in 0..m {
                    let mut res = vec![Rational::zero(); m];
                    for i in 0..=k.min(dp) {
                        for j in 0..=(k - i).min(dp) {
                            let l = k - i - j;
                            if l <= dp {
                                let t = a.ternary(&img[i][x], &img[j][y], &img[l][z]);
                                add_scaled(&mut res, &t, &Rational::one());
                            }
                        }
                    }
                    if let Some(p) = poly_get(phi, k) {
                        add_scaled(&mut res, &p.apply(a.ternary_basis(x, y, z)), &minus);
                    }
                    report.record(&label, &[x, y, z], res);
                }
            }
        }
    }
    for k in 0..=cap(dp.max(ds) + ds) {
        let label = coefficient_label(EQ_RHO, k);
        for x in 0..m {
            let mut res = match poly_get(psi, k) {
                Some(p) => p.matmul(r.rho(x)),
                None => Matrix::zeros(n, n),
            };
            for i in 0..=k.min(dp) {
                if let Some(p) = poly_get(psi, k - i) {
                    res.add_scaled(&r.rho_of(&img[i][x]).matmul(p), &minus);
                }
            }
            report.record(&label, &[x], res.entries().to_vec());
        }
    }
    for k in 0..=cap((2 * dp).max(ds) + ds) {
        let label = coefficient_label(EQ_MU, k);
        for x in 0..m {
            for y in 0..m {
                let mut res = match poly_get(psi, k) {
                    Some(p) => p.matmul(r.mu(x, y)),
                    None => Matrix::zeros(n, n),
                };
                for i in 0..=k.min(dp) {
                    for j in 0..=(k - i).min(dp) {
                        if let Some(p) = poly_get(psi, k - i - j) {
                            res.add_scaled(&r.mu_of(&img[i][x], &img[j][y]).matmul(p), &minus);
                        }
                    }
                }
                report.record(&label, &[x, y], res.entries().to_vec());
            }
        }
    }
    let top = (d1.order() + ds).max(dp + d2.order());
    for k in 0..=cap(top) {
        let mut res = Matrix::zeros(m, n);
        for i in 0..=k {
            if let (Some(t1), Some(p)) = (d1.term(i), poly_get(psi, k - i)) {
                res.add_scaled(&t1.matmul(p), &Rational::one());
            }
            if let (Some(p), Some(t2)) = (poly_get(phi, i), d2.term(k - i)) {
                res.add_scaled(&p.matmul(t2), &minus);
            }
        }
        let label = if k == 1 {
            format!("{} [t^1], i.e. {EQ_DIFFERENCE}", EQ_OPERATOR)
        } else {
            coefficient_label(EQ_OPERATOR, k)
        };
        for v in 0..n {
            report.record(&label, &[v], res.column(v));
        }
    }
    Ok(report)
}

/// Whether `(Id + t L_X, Id + t D(X))` is a homomorphism from `d2` to `d1`
/// for every `t`, checked coefficient by coefficient. The `t¹` coefficient of
/// the operator condition is `T2 - T1 = δ(X)`.
pub fn equivalence_check_linear(
    o: &RelRbo,
    d1: &TruncatedDeformation,
    d2: &TruncatedDeformation,
    x: &Wedge2,
) -> Result<AxiomReport> {
    o.require_verified()?;
    for d in [d1, d2] {
        if d.order() != 1 {
            return Err(Error::Degree(format!(
                "linear equivalence compares order-1 deformations, got order {}",
                d.order()
            )));
        }
        if d.terms()[0] != *o.matrix() {
            return Err(Error::Invariant("deformation does not start at the base operator".into()));
        }
    }
    let a = o.algebra();
    let phi = [Matrix::identity(a.dim()), x.left_ternary(a)];
    let psi = [Matrix::identity(o.rep().dim_v()), x.d_map(o.rep())];
    polynomial_homomorphism_check(o, d1, d2, &phi, &psi, None)
}

/// Coefficient of `t^s` in the binary condition for `sum T_i t^i`, keeping
/// only the index pairs accepted by `keep`.
fn binary_coefficient(
    r: &Representation,
    terms: &[Matrix],
    s: usize,
    u: usize,
    v: usize,
    keep: impl Fn(usize, usize) -> bool,
) -> Vec<Rational> {
    let a = r.algebra();
    let mut out = vec![Rational::zero(); a.dim()];
    for i in 0..=s {
        let j = s - i;
        if i >= terms.len() || j >= terms.len() || !keep(i, j) {
            continue;
        }
        add_scaled(&mut out, &a.bracket(&terms[i].column(u), &terms[j].column(v)), &Rational::one());
        add_scaled(&mut out, &terms[i].apply(&beta(r, &terms[j], u, v)), &-Rational::one());
    }
    out
}

/// Coefficient of `t^s` in the ternary condition for `sum T_i t^i`.
#[allow(clippy::too_many_arguments)]
fn ternary_coefficient(
    r: &Representation,
    terms: &[Matrix],
    s: usize,
    u: usize,
    v: usize,
    w: usize,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> Vec<Rational> {
    let a = r.algebra();
    let len = terms.len();
    let mut out = vec![Rational::zero(); a.dim()];
    for i in 0..=s.min(len - 1) {
        for j in 0..=(s - i).min(len - 1) {
            let k = s - i - j;
            if k >= len || !keep(i, j, k) {
                continue;
            }
            let t = a.ternary(&terms[i].column(u), &terms[j].column(v), &terms[k].column(w));
            add_scaled(&mut out, &t, &Rational::one());
            add_scaled(&mut out, &terms[i].apply(&kappa(r, &terms[j], &terms[k], u, v, w)), &-Rational::one());
        }
    }
    out
}

/// Both coefficient identities for `t^0, ..., t^n`.
pub fn order_n_check(o: &RelRbo, d: &TruncatedDeformation) -> Result<AxiomReport> {
    for term in d.terms() {
        check_operator_shape(o, term)?;
    }
    if d.terms()[0] != *o.matrix() {
        return Err(Error::Invariant("deformation does not start at the base operator".into()));
    }
    let r = o.rep();
    let n = r.dim_v();
    let mut report = AxiomReport::new();
    for s in 0..=d.order() {
        let bl = coefficient_label(ORDER_BINARY, s);
        let tl = coefficient_label(ORDER_TERNARY, s);
        for u in 0..n {
            for v in 0..n {
                report.record(&bl, &[u, v], binary_coefficient(r, d.terms(), s, u, v, |_, _| true));
            }
        }
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let c = ternary_coefficient(r, d.terms(), s, u, v, w, |_, _, _| true);
                    report.record(&tl, &[u, v, w], c);
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionResult {
    /// `(Ob_I, Ob_II)` as a degree-2 cochain of the operator's complex.
    pub ob: Cochain,
    pub is_cocycle: bool,
    pub trivial: bool,
    /// A `T_{n+1}` with `δ(T_{n+1}) = -Ob`, present iff `trivial`.
    pub witness: Option<Matrix>,
    /// `Ob` reduced modulo the degree-2 coboundaries; zero iff `trivial`.
    pub class_residual: Vec<Rational>,
}

/// `Ob_I(u,v) = sum_{i+j=n+1, i,j ≥ 1} (...)` and
/// `Ob_II(u,v,w) = sum_{i+j+k=n+1, 0 ≤ i,j,k ≤ n} (...)`, the part of the
/// `t^{n+1}` coefficient not involving `T_{n+1}`; then solves
/// `δ(T_{n+1}) = -Ob`.
pub fn obstruction(o: &RelRbo, d: &TruncatedDeformation) -> Result<ObstructionResult> {
    let report = order_n_check(o, d)?;
    report.into_result(Error::NotOrderN)?;
    let c = RboComplex::new(o.clone())?;
    let r = o.rep();
    let n = d.order();
    let dim_v = r.dim_v();
    let mut data = Vec::with_capacity(c.cochain_dim(2)?);
    let wedges = c.ctx().wedge_basis().to_vec();
    for &(u, v) in &wedges {
        data.extend(binary_coefficient(r, d.terms(), n + 1, u, v, |i, j| i >= 1 && j >= 1));
    }
    for &(u, v) in &wedges {
        for w in 0..dim_v {
            data.extend(ternary_coefficient(r, d.terms(), n + 1, u, v, w, |i, j, k| {
                i <= n && j <= n && k <= n
            }));
        }
    }
    let ob = Cochain::from_flat(c.ctx(), 2, data)?;
    let is_cocycle = c.ctx().coboundary(&ob)?.is_zero();
    let d1 = c.ctx().coboundary_matrix(1)?;
    let neg: Vec<Rational> = ob.data().iter().map(|x| -x).collect();
    let witness = match solve_linear(&d1, &neg)? {
        Some(sol) => Some(Cochain::from_flat(c.ctx(), 1, sol)?.to_map(c.ctx())?),
        None => None,
    };
    let class_residual = reduce_modulo_columns(&d1, ob.data());
    Ok(ObstructionResult {
        ob,
        is_cocycle,
        trivial: witness.is_some(),
        witness,
        class_residual,
    })
}

/// `d + T_{n+1} t^{n+1}` when the obstruction class vanishes.
pub fn extend_deformation(o: &RelRbo, d: &TruncatedDeformation) -> Result<Option<TruncatedDeformation>> {
    let ob = obstruction(o, d)?;
    let Some(next) = ob.witness else {
        return Ok(None);
    };
    let extended = d.extended(next)?;
    let check = order_n_check(o, &extended)?;
    if !check.valid() {
        return Err(Error::Invariant(format!(
            "extension by the solved term fails {}",
            check.failed_identities().join("; ")
        )));
    }
    Ok(Some(extended))
}

/// `phi(u,v) = rho(Fu)v`, `omega1(u,v,w) = mu(Tv,Fw)u + mu(Fv,Tw)u`,
/// `omega2(u,v,w) = mu(Fv,Fw)u`, tabulated on basis tuples like
/// [`crate::rbo::PreLyProducts`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PreLyDeformation {
    pub dim: usize,
    pub phi: Vec<Vec<Rational>>,
    pub omega1: Vec<Vec<Rational>>,
    pub omega2: Vec<Vec<Rational>>,
}

impl PreLyDeformation {
    pub fn phi(&self, u: usize, v: usize) -> &[Rational] {
        &self.phi[u * self.dim + v]
    }

    pub fn omega1(&self, u: usize, v: usize, w: usize) -> &[Rational] {
        &self.omega1[(u * self.dim + v) * self.dim + w]
    }

    pub fn omega2(&self, u: usize, v: usize, w: usize) -> &[Rational] {
        &self.omega2[(u * self.dim + v) * self.dim + w]
    }
}

pub fn pre_ly_deformation_terms(o: &RelRbo, f: &Matrix) -> Result<PreLyDeformation> {
    linear_deformation_check(o, f)?.into_result(Error::NotLinearDeformation)?;
    let (r, t) = (o.rep(), o.matrix());
    let n = r.dim_v();
    let e = |i| unit_vector(n, i);
    let mut phi = Vec::with_capacity(n * n);
    for u in 0..n {
        let rho = r.rho_of(&f.column(u));
        for v in 0..n {
            phi.push(rho.apply(&e(v)));
        }
    }
    let (mut omega1, mut omega2) = (Vec::new(), Vec::new());
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let (tv, tw, fv, fw) = (t.column(v), t.column(w), f.column(v), f.column(w));
                let mut o1 = r.mu_of(&tv, &fw).apply(&e(u));
                add_scaled(&mut o1, &r.mu_of(&fv, &tw).apply(&e(u)), &Rational::one());
                omega1.push(o1);
                omega2.push(r.mu_of(&fv, &fw).apply(&e(u)));
            }
        }
    }
    Ok(PreLyDeformation {
        dim: n,
        phi,
        omega1,
        omega2,
    })
}

/// Compares the products induced by `T + tF` with the base products plus the
/// deformation terms at a number `t`.
pub fn pre_ly_consistency_at(o: &RelRbo, f: &Matrix, t: &Rational) -> Result<AxiomReport> {
    let terms = pre_ly_deformation_terms(o, f)?;
    let r = o.rep();
    let base = pre_ly_unchecked(r, o.matrix());
    let mut m = o.matrix().clone();
    m.add_scaled(f, t);
    let deformed = pre_ly_unchecked(r, &m);
    let t2 = t * t;
    let n = r.dim_v();
    let mut report = AxiomReport::new();
    for u in 0..n {
        for v in 0..n {
            let mut expect = base.binary(u, v).to_vec();
            add_scaled(&mut expect, terms.phi(u, v), t);
            report.record(PRE_LY_BINARY, &[u, v], vec_sub(deformed.binary(u, v), &expect));
            for w in 0..n {
                let mut expect = base.ternary(u, v, w).to_vec();
                add_scaled(&mut expect, terms.omega1(u, v, w), t);
                add_scaled(&mut expect, terms.omega2(u, v, w), &t2);
                report.record(PRE_LY_TERNARY, &[u, v, w], vec_sub(deformed.ternary(u, v, w), &expect));
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RigidityProbe {
    pub dim_z1: usize,
    pub rank_delta0: usize,
    /// Every cocycle of a kernel basis lies in `δ(∧²g)`. Necessary for
    /// `Z¹ = δ(Nij(T))`, not sufficient.
    pub nijenhuis_image_contained: bool,
}

pub fn rigidity_probe(o: &RelRbo) -> Result<RigidityProbe> {
    let c = RboComplex::new(o.clone())?;
    let (_, kernel) = rank_kernel(&c.ctx().coboundary_matrix(1)?);
    let d0 = delta0_matrix(o)?;
    let mut contained = true;
    for z in &kernel {
        if solve_linear(&d0, z)?.is_none() {
            contained = false;
            break;
        }
    }
    Ok(RigidityProbe {
        dim_z1: kernel.len(),
        rank_delta0: d0.rank(),
        nijenhuis_image_contained: contained,
    })
}
