use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

use super::algebra::{check_lya, LyAlgebra};
use super::report::AxiomReport;

pub const REP_MU_BRACKET_LEFT: &str = "mu([x,y],z) - mu(x,z)rho(y) + mu(y,z)rho(x) = 0";
pub const REP_MU_BRACKET_RIGHT: &str = "mu(x,[y,z]) - rho(y)mu(x,z) + rho(z)mu(x,y) = 0";
pub const REP_RHO_TERNARY: &str = "rho(<x,y,z>) = [D(x,y), rho(z)]";
pub const REP_MU_MU: &str = "mu(z,w)mu(x,y) - mu(y,w)mu(x,z) - mu(x,<y,z,w>) + D(y,z)mu(x,w) = 0";
pub const REP_MU_TERNARY: &str = "mu(<x,y,z>,w) + mu(z,<x,y,w>) = [D(x,y), mu(z,w)]";
pub const REP_D_CYCLIC: &str = "D([x,y],z) + cyclic = 0";
pub const REP_D_TERNARY: &str = "D(<x,y,z>,w) + D(z,<x,y,w>) = [D(x,y), D(z,w)]";
pub const REP_MU_EXPANDED: &str = "mu(<x,y,z>,w) = mu(x,w)mu(z,y) - mu(y,w)mu(z,x) - mu(z,w)D(x,y)";

/// The five defining identities, in the order they are checked.
pub const REP_DEFINING: [&str; 5] = [
    REP_MU_BRACKET_LEFT,
    REP_MU_BRACKET_RIGHT,
    REP_RHO_TERNARY,
    REP_MU_MU,
    REP_MU_TERNARY,
];

/// Identities that follow from the defining ones; checked as a redundancy.
pub const REP_DERIVED: [&str; 3] = [REP_D_CYCLIC, REP_D_TERNARY, REP_MU_EXPANDED];

/// A module `V` over a Lie-Yamaguti algebra given by `rho(e_i)` and
/// `mu(e_i, e_j)`. The derived map `D` is computed once on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: Arc<LyAlgebra>,
    names: Vec<String>,
    rho: Vec<Matrix>,
    mu: Vec<Matrix>,
    d: Vec<Matrix>,
}

impl Representation {
    /// `mu` is indexed row-major: `mu[i * dim + j]` is `mu(e_i, e_j)`.
    pub fn new(algebra: impl Into<Arc<LyAlgebra>>, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Result<Self> {
        let algebra = algebra.into();
        let m = algebra.dim();
        if rho.len() != m || mu.len() != m * m {
            return Err(Error::Dimension(format!(
                "expected {m} rho matrices and {} mu matrices, got {} and {}",
                m * m,
                rho.len(),
                mu.len()
            )));
        }
        let v = match rho.first().or(mu.first()) {
            Some(x) => x.rows(),
            None => 0,
        };
        for x in rho.iter().chain(mu.iter()) {
            if x.rows() != v || x.cols() != v {
                return Err(Error::Dimension(format!(
                    "action matrix is {}x{}, expected {v}x{v}",
                    x.rows(),
                    x.cols()
                )));
            }
        }
        Ok(Self::assemble(algebra, (1..=v).map(|i| format!("v{i}")).collect(), rho, mu))
    }

    fn assemble(algebra: Arc<LyAlgebra>, names: Vec<String>, rho: Vec<Matrix>, mu: Vec<Matrix>) -> Self {
        let m = algebra.dim();
        let v = names.len();
        let mut d = vec![Matrix::zeros(v, v); m * m];
        for i in 0..m {
            for j in 0..m {
                if i == j {
                    continue;
                }
                let mut x = mu[j * m + i].minus(&mu[i * m + j]);
                x = x.plus(&rho[i].commutator(&rho[j]));
                let br = algebra.bracket_basis(i, j);
                for (k, c) in br.iter().enumerate() {
                    if !c.is_zero() {
                        x.add_scaled(&rho[k], &-c);
                    }
                }
                d[i * m + j] = x;
            }
        }
        Representation {
            algebra,
            names,
            rho,
            mu,
            d,
        }
    }

    /// Module dimension `dim_v` with all actions zero.
    pub fn zero(algebra: impl Into<Arc<LyAlgebra>>, dim_v: usize) -> Self {
        let algebra = algebra.into();
        let m = algebra.dim();
        let z = Matrix::zeros(dim_v, dim_v);
        Self::assemble(
            algebra,
            (1..=dim_v).map(|i| format!("v{i}")).collect(),
            vec![z.clone(); m],
            vec![z; m * m],
        )
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim_v() {
            return Err(Error::Dimension(format!(
                "{} module basis names for dimension {}",
                names.len(),
                self.dim_v()
            )));
        }
        self.names = names;
        Ok(self)
    }

    pub fn algebra(&self) -> &LyAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LyAlgebra> {
        &self.algebra
    }

    pub fn dim_v(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn mu(&self, i: usize, j: usize) -> &Matrix {
        &self.mu[i * self.algebra.dim() + j]
    }

    /// `D(e_i, e_j)`.
    pub fn d(&self, i: usize, j: usize) -> &Matrix {
        &self.d[i * self.algebra.dim() + j]
    }

    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.dim_v(), self.dim_v());
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out.add_scaled(&self.rho[i], c);
            }
        }
        out
    }

    fn bilinear(&self, table: &[Matrix], x: &[Rational], y: &[Rational]) -> Matrix {
        let m = self.algebra.dim();
        let mut out = Matrix::zeros(self.dim_v(), self.dim_v());
        for (i, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out.add_scaled(&table[i * m + j], &(a * b));
            }
        }
        out
    }

    pub fn mu_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.bilinear(&self.mu, x, y)
    }

    pub fn d_of(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        self.bilinear(&self.d, x, y)
    }

    /// Copy with `mu(e_i, e_j)` replaced.
    pub fn with_mu(&self, i: usize, j: usize, value: Matrix) -> Result<Self> {
        let mut mu = self.mu.clone();
        mu[i * self.algebra.dim() + j] = value;
        Ok(Self::new(self.algebra.clone(), self.rho.clone(), mu)?.renamed(&self.names))
    }

    /// Copy with `rho(e_i)` replaced.
    pub fn with_rho(&self, i: usize, value: Matrix) -> Result<Self> {
        let mut rho = self.rho.clone();
        rho[i] = value;
        Ok(Self::new(self.algebra.clone(), rho, self.mu.clone())?.renamed(&self.names))
    }

    fn renamed(mut self, names: &[String]) -> Self {
        if names.len() == self.names.len() {
            self.names = names.to_vec();
        }
        self
    }

    /// Same actions expressed in the module basis given by the columns of `p`.
    pub fn change_module_basis(&self, p: &Matrix) -> Option<Self> {
        let inv = p.inverse()?;
        let conj = |x: &Matrix| inv.matmul(x).matmul(p);
        Some(Self::assemble(
            self.algebra.clone(),
            self.names.clone(),
            self.rho.iter().map(conj).collect(),
            self.mu.iter().map(conj).collect(),
        ))
    }

    /// Transports the representation along an algebra isomorphism: `phi`
    /// has as columns the images of the new algebra's basis in `self.algebra()`,
    /// and `target` must be that new algebra.
    pub fn pull_back(&self, target: impl Into<Arc<LyAlgebra>>, phi: &Matrix) -> Result<Self> {
        let target = target.into();
        let m = target.dim();
        let cols: Vec<Vec<Rational>> = (0..m).map(|i| phi.column(i)).collect();
        let rho = cols.iter().map(|c| self.rho_of(c)).collect();
        let mut mu = Vec::with_capacity(m * m);
        for a in &cols {
            for b in &cols {
                mu.push(self.mu_of(a, b));
            }
        }
        Ok(Self::new(target, rho, mu)?.renamed(&self.names))
    }

    /// Direct sum of two modules over the same algebra.
    pub fn direct_sum(&self, other: &Representation) -> Result<Self> {
        if self.algebra != other.algebra {
            return Err(Error::Invariant("direct sum over different algebras".into()));
        }
        let block = |a: &Matrix, b: &Matrix| {
            let n = a.rows() + b.rows();
            let mut out = Matrix::zeros(n, n);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    out[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    out[(a.rows() + i, a.cols() + j)] = b[(i, j)].clone();
                }
            }
            out
        };
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| block(a, b)).collect();
        let mu = self.mu.iter().zip(&other.mu).map(|(a, b)| block(a, b)).collect();
        let names = self.names.iter().chain(&other.names).cloned().collect();
        Ok(Self::assemble(self.algebra.clone(), names, rho, mu))
    }
}

/// `D(e_i, e_j)` as an owned matrix.
pub fn d_map(r: &Representation, i: usize, j: usize) -> Matrix {
    r.d(i, j).clone()
}

/// The adjoint representation `rho(x) = ad_x`, `mu(x,y) z = <z,x,y>`.
pub fn adjoint_rep(a: impl Into<Arc<LyAlgebra>>) -> Result<Representation> {
    let a = a.into();
    let report = check_lya(&a);
    if !report.valid() {
        return Err(Error::InvalidAlgebra(Box::new(report)));
    }
    Ok(adjoint_unchecked(a))
}

pub(crate) fn adjoint_unchecked(a: Arc<LyAlgebra>) -> Representation {
    let m = a.dim();
    let e: Vec<Vec<Rational>> = (0..m).map(|i| a.basis(i)).collect();
    let rho = e.iter().map(|x| a.ad(x)).collect();
    let mut mu = Vec::with_capacity(m * m);
    for x in &e {
        for y in &e {
            mu.push(a.right_ternary(x, y));
        }
    }
    let names = a.names().to_vec();
    Representation::assemble(a, names, rho, mu)
}

/// True when `r` is literally the adjoint representation of its algebra.
pub fn is_adjoint(r: &Representation) -> bool {
    r.dim_v() == r.algebra().dim() && {
        let ad = adjoint_unchecked(r.algebra.clone());
        ad.rho == r.rho && ad.mu == r.mu
    }
}

fn flat(m: Matrix) -> Vec<Rational> {
    m.entries().to_vec()
}

/// Evaluates the five defining identities and the three derived ones on all
/// basis tuples. Residuals are the offending matrices flattened row-major.
pub fn check_representation(r: &Representation) -> AxiomReport {
    let a = r.algebra();
    let m = a.dim();
    let mut report = AxiomReport::new();
    let br = |i: usize, j: usize| a.bracket_basis(i, j);
    let tr = |i: usize, j: usize, k: usize| a.ternary_basis(i, j, k);

    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                let lhs = r
                    .mu_of(br(x, y), &a.basis(z))
                    .minus(&r.mu(x, z).matmul(r.rho(y)))
                    .plus(&r.mu(y, z).matmul(r.rho(x)));
                report.record(REP_MU_BRACKET_LEFT, &[x, y, z], flat(lhs));

                let lhs = r
                    .mu_of(&a.basis(x), br(y, z))
                    .minus(&r.rho(y).matmul(r.mu(x, z)))
                    .plus(&r.rho(z).matmul(r.mu(x, y)));
                report.record(REP_MU_BRACKET_RIGHT, &[x, y, z], flat(lhs));

                let lhs = r.rho_of(tr(x, y, z)).minus(&r.d(x, y).commutator(r.rho(z)));
                report.record(REP_RHO_TERNARY, &[x, y, z], flat(lhs));

                let lhs = r.d_of(br(x, y), &a.basis(z))
                    .plus(&r.d_of(br(y, z), &a.basis(x)))
                    .plus(&r.d_of(br(z, x), &a.basis(y)));
                report.record(REP_D_CYCLIC, &[x, y, z], flat(lhs));
            }
        }
    }
    for x in 0..m {
        for y in 0..m {
            for z in 0..m {
                for w in 0..m {
                    let lhs = r
                        .mu(z, w)
                        .matmul(r.mu(x, y))
                        .minus(&r.mu(y, w).matmul(r.mu(x, z)))
                        .minus(&r.mu_of(&a.basis(x), tr(y, z, w)))
                        .plus(&r.d(y, z).matmul(r.mu(x, w)));
                    report.record(REP_MU_MU, &[x, y, z, w], flat(lhs));

                    let lhs = r
                        .mu_of(tr(x, y, z), &a.basis(w))
                        .plus(&r.mu_of(&a.basis(z), tr(x, y, w)))
                        .minus(&r.d(x, y).commutator(r.mu(z, w)));
                    report.record(REP_MU_TERNARY, &[x, y, z, w], flat(lhs));

                    let lhs = r
                        .d_of(tr(x, y, z), &a.basis(w))
                        .plus(&r.d_of(&a.basis(z), tr(x, y, w)))
                        .minus(&r.d(x, y).commutator(r.d(z, w)));
                    report.record(REP_D_TERNARY, &[x, y, z, w], flat(lhs));

                    let lhs = r
                        .mu_of(tr(x, y, z), &a.basis(w))
                        .minus(&r.mu(x, w).matmul(r.mu(z, y)))
                        .plus(&r.mu(y, w).matmul(r.mu(z, x)))
                        .plus(&r.mu(z, w).matmul(r.d(x, y)));
                    report.record(REP_MU_EXPANDED, &[x, y, z, w], flat(lhs));
                }
            }
        }
    }
    report
}

/// Only the five defining identities.
pub fn check_representation_defining(r: &Representation) -> AxiomReport {
    let mut report = check_representation(r);
    report.violations.retain(|v| REP_DEFINING.contains(&v.identity.as_str()));
    report
}

/// The semidirect product algebra on `g ⊕ V`, basis `e_1..e_m, v_1..v_k`.
pub fn semidirect(r: &Representation) -> LyAlgebra {
    let a = r.algebra();
    let m = a.dim();
    let n = m + r.dim_v();
    let split = |x: &[Rational]| (x[..m].to_vec(), x[m..].to_vec());
    let join = |g: Vec<Rational>, v: Vec<Rational>| {
        let mut out = g;
        out.extend(v);
        out
    };
    let basis = |i: usize| crate::linalg::unit_vector(n, i);
    let bracket = |i: usize, j: usize| {
        let (x, u) = split(&basis(i));
        let (y, v) = split(&basis(j));
        let g = a.bracket(&x, &y);
        let vv = crate::linalg::vec_sub(&r.rho_of(&x).apply(&v), &r.rho_of(&y).apply(&u));
        join(g, vv)
    };
    let ternary = |i: usize, j: usize, k: usize| {
        let (x, u) = split(&basis(i));
        let (y, v) = split(&basis(j));
        let (z, w) = split(&basis(k));
        let g = a.ternary(&x, &y, &z);
        let mut vv = r.d_of(&x, &y).apply(&w);
        crate::linalg::add_scaled(&mut vv, &r.mu_of(&y, &z).apply(&u), &Rational::one());
        crate::linalg::add_scaled(&mut vv, &r.mu_of(&x, &z).apply(&v), &-Rational::one());
        join(g, vv)
    };
    let names = a.names().iter().chain(r.names()).cloned().collect();
    LyAlgebra::from_fn_named(names, bracket, ternary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;
    use crate::structures::algebra::check_lya;

    fn two_dim() -> Arc<LyAlgebra> {
        Arc::new(
            LyAlgebra::builder(2)
                .bracket(0, 1, vec![qi(1), qi(0)])
                .ternary(0, 1, 1, vec![qi(1), qi(0)])
                .build()
                .unwrap(),
        )
    }

    #[test]
    fn adjoint_of_two_dim() {
        let r = adjoint_rep(two_dim()).unwrap();
        assert_eq!(r.rho(0), &Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(r.mu(1, 1), &Matrix::from_i64(&[&[1, 0], &[0, 0]]));
        assert_eq!(r.d(0, 1), &Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert!(r.d(0, 0).is_zero());
        assert!(check_representation(&r).valid());
        assert!(is_adjoint(&r));
    }

    #[test]
    fn corrupted_mu_is_caught_and_breaks_semidirect() {
        let r = adjoint_rep(two_dim()).unwrap();
        let bad = r.with_mu(1, 1, Matrix::identity(2)).unwrap();
        assert!(!check_representation(&bad).valid());
        assert!(check_lya(&semidirect(&r)).valid());
        assert!(!check_lya(&semidirect(&bad)).valid());
    }

    #[test]
    fn zero_rep_and_rho_free_d() {
        let r = Representation::zero(two_dim(), 3);
        assert!(check_representation(&r).valid());
        let semi = semidirect(&Representation::zero(Arc::new(LyAlgebra::abelian(2)), 2));
        assert!(semi.is_abelian());

        let z = Matrix::zeros(1, 1);
        let mu = vec![z.clone(), Matrix::from_i64(&[&[3]]), Matrix::from_i64(&[&[5]]), z.clone()];
        let r = Representation::new(LyAlgebra::abelian(2), vec![z.clone(), z], mu).unwrap();
        assert_eq!(r.d(0, 1), &Matrix::from_i64(&[&[2]]));
        assert_eq!(r.d(1, 0), &Matrix::from_i64(&[&[-2]]));
    }

    #[test]
    fn adjoint_rejects_invalid_algebra() {
        let bad = LyAlgebra::builder(2)
            .bracket(0, 1, vec![qi(1), qi(0)])
            .ternary(0, 1, 1, vec![qi(0), qi(1)])
            .build()
            .unwrap();
        assert!(matches!(adjoint_rep(bad), Err(Error::InvalidAlgebra(_))));
    }
}
