use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::{add_scaled, unit_vector, Matrix, Rational};

use super::report::AxiomReport;

pub const LY1: &str = "[[x,y],z] + <x,y,z> + cyclic = 0";
pub const LY2: &str = "<[x,y],z,w> + cyclic(x,y,z) = 0";
pub const LY3: &str = "<x,y,[z,w]> = [<x,y,z>,w] + [z,<x,y,w>]";
pub const LY4: &str = "<x,y,<z,w,t>> = <<x,y,z>,w,t> + <z,<x,y,w>,t> + <z,w,<x,y,t>>";

pub const HOM_BINARY: &str = "phi[x,y] = [phi x, phi y]";
pub const HOM_TERNARY: &str = "phi<x,y,z> = <phi x, phi y, phi z>";

/// A finite-dimensional algebra with a skew bilinear bracket and a trilinear
/// bracket skew in its first two slots, stored by structure constants.
///
/// Both skew halves are stored so lookups never branch on orientation; the
/// builder only ever fills them as a matched pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyAlgebra {
    names: Vec<String>,
    binary: Vec<Vec<Rational>>,
    ternary: Vec<Vec<Rational>>,
}

/// Collects structure constants for the upper-triangular index pairs and
/// validates them in [`AlgebraBuilder::build`].
#[derive(Debug, Clone)]
pub struct AlgebraBuilder {
    names: Vec<String>,
    binary: Vec<((usize, usize), Vec<Rational>)>,
    ternary: Vec<((usize, usize, usize), Vec<Rational>)>,
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

impl AlgebraBuilder {
    pub fn new(dim: usize) -> Self {
        Self::with_names(default_names(dim))
    }

    pub fn with_names(names: Vec<String>) -> Self {
        AlgebraBuilder {
            names,
            binary: Vec::new(),
            ternary: Vec::new(),
        }
    }

    /// Sets `[e_i, e_j]` for `i < j` (0-based).
    pub fn bracket(mut self, i: usize, j: usize, value: Vec<Rational>) -> Self {
        self.binary.push(((i, j), value));
        self
    }

    /// Sets `<e_i, e_j, e_k>` for `i < j` (0-based).
    pub fn ternary(mut self, i: usize, j: usize, k: usize, value: Vec<Rational>) -> Self {
        self.ternary.push(((i, j, k), value));
        self
    }

    pub fn build(self) -> Result<LyAlgebra> {
        let dim = self.names.len();
        let mut seen_b = BTreeMap::new();
        let mut seen_t = BTreeMap::new();
        let check_pair = |i: usize, j: usize| -> Result<()> {
            if i >= dim || j >= dim {
                return Err(Error::Invariant(format!(
                    "index ({}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1
                )));
            }
            if i == j {
                return Err(Error::Invariant(format!(
                    "diagonal wedge entry ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
            if i > j {
                return Err(Error::Invariant(format!(
                    "entry ({}, {}) must be given with increasing indices",
                    i + 1,
                    j + 1
                )));
            }
            Ok(())
        };
        let check_len = |v: &[Rational]| -> Result<()> {
            if v.len() != dim {
                return Err(Error::Dimension(format!(
                    "structure constant of length {} in dimension {dim}",
                    v.len()
                )));
            }
            Ok(())
        };
        for ((i, j), v) in self.binary {
            check_pair(i, j)?;
            check_len(&v)?;
            if seen_b.insert((i, j), v).is_some() {
                return Err(Error::Invariant(format!(
                    "duplicate bracket entry ({}, {})",
                    i + 1,
                    j + 1
                )));
            }
        }
        for ((i, j, k), v) in self.ternary {
            check_pair(i, j)?;
            if k >= dim {
                return Err(Error::Invariant(format!(
                    "third index {} out of range for dimension {dim}",
                    k + 1
                )));
            }
            check_len(&v)?;
            if seen_t.insert((i, j, k), v).is_some() {
                return Err(Error::Invariant(format!(
                    "duplicate ternary entry ({}, {}, {})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
        }
        let zero = vec![Rational::zero(); dim];
        Ok(LyAlgebra::from_fn_named(
            self.names,
            |i, j| seen_b.get(&(i, j)).cloned().unwrap_or_else(|| zero.clone()),
            |i, j, k| seen_t.get(&(i, j, k)).cloned().unwrap_or_else(|| zero.clone()),
        ))
    }
}

impl LyAlgebra {
    pub fn builder(dim: usize) -> AlgebraBuilder {
        AlgebraBuilder::new(dim)
    }

    /// The algebra with all brackets zero.
    pub fn abelian(dim: usize) -> Self {
        let zero = vec![Rational::zero(); dim];
        Self::from_fn(dim, |_, _| zero.clone(), |_, _, _| zero.clone())
    }

    /// Builds an algebra from closures that are queried only for `i < j`;
    /// the remaining constants are filled in by skew-symmetry.
    pub fn from_fn(
        dim: usize,
        bracket: impl Fn(usize, usize) -> Vec<Rational>,
        ternary: impl Fn(usize, usize, usize) -> Vec<Rational>,
    ) -> Self {
        Self::from_fn_named(default_names(dim), bracket, ternary)
    }

    pub fn from_fn_named(
        names: Vec<String>,
        bracket: impl Fn(usize, usize) -> Vec<Rational>,
        ternary: impl Fn(usize, usize, usize) -> Vec<Rational>,
    ) -> Self {
        let dim = names.len();
        let zero = vec![Rational::zero(); dim];
        let mut binary = vec![zero.clone(); dim * dim];
        let mut tern = vec![zero; dim * dim * dim];
        for i in 0..dim {
            for j in i + 1..dim {
                let v = bracket(i, j);
                assert_eq!(v.len(), dim, "bracket value has wrong length");
                binary[j * dim + i] = v.iter().map(|c| -c).collect();
                binary[i * dim + j] = v;
                for k in 0..dim {
                    let v = ternary(i, j, k);
                    assert_eq!(v.len(), dim, "ternary value has wrong length");
                    tern[(j * dim + i) * dim + k] = v.iter().map(|c| -c).collect();
                    tern[(i * dim + j) * dim + k] = v;
                }
            }
        }
        LyAlgebra {
            names,
            binary,
            ternary: tern,
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim() {
            return Err(Error::Dimension(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim()
            )));
        }
        self.names = names;
        Ok(self)
    }

    /// `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.binary[i * self.dim() + j]
    }

    /// `<e_i, e_j, e_k>`.
    pub fn ternary_basis(&self, i: usize, j: usize, k: usize) -> &[Rational] {
        let n = self.dim();
        &self.ternary[(i * n + j) * n + k]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if i != j {
                    add_scaled(&mut out, self.bracket_basis(i, j), &(xi * yj));
                }
            }
        }
        out
    }

    pub fn ternary(&self, x: &[Rational], y: &[Rational], z: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if i == j {
                    continue;
                }
                let xy = xi * yj;
                for (k, zk) in z.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                    add_scaled(&mut out, self.ternary_basis(i, j, k), &(&xy * zk));
                }
            }
        }
        out
    }

    pub fn basis(&self, i: usize) -> Vec<Rational> {
        unit_vector(self.dim(), i)
    }

    /// Matrix of `z ↦ [x, z]`.
    pub fn ad(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> = (0..n).map(|k| self.bracket(x, &self.basis(k))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `z ↦ <x, y, z>`.
    pub fn left_ternary(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> =
            (0..n).map(|k| self.ternary(x, y, &self.basis(k))).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Matrix of `z ↦ <z, x, y>`.
    pub fn right_ternary(&self, x: &[Rational], y: &[Rational]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vec<Rational>> =
            (0..n).map(|k| self.ternary(&self.basis(k), x, y)).collect();
        Matrix::from_columns(n, &cols)
    }

    /// Image of the algebra under the change of basis `p` (columns are the
    /// new basis vectors in old coordinates). Returns `None` if `p` is singular.
    pub fn change_basis(&self, p: &Matrix) -> Option<LyAlgebra> {
        let inv = p.inverse()?;
        let cols: Vec<Vec<Rational>> = (0..self.dim()).map(|i| p.column(i)).collect();
        Some(LyAlgebra::from_fn(
            self.dim(),
            |i, j| inv.apply(&self.bracket(&cols[i], &cols[j])),
            |i, j, k| inv.apply(&self.ternary(&cols[i], &cols[j], &cols[k])),
        ))
    }

    /// True when every structure constant is zero.
    pub fn is_abelian(&self) -> bool {
        self.binary.iter().chain(&self.ternary).all(|v| v.iter().all(Rational::is_zero))
    }
}

fn sum(parts: &[&[Rational]]) -> Vec<Rational> {
    let mut out = parts[0].to_vec();
    for p in &parts[1..] {
        for (o, c) in out.iter_mut().zip(p.iter()) {
            *o += c;
        }
    }
    out
}

fn diff(a: &[Rational], parts: &[&[Rational]]) -> Vec<Rational> {
    let mut out = a.to_vec();
    for p in parts {
        for (o, c) in out.iter_mut().zip(p.iter()) {
            *o -= c;
        }
    }
    out
}

/// Evaluates the four Lie-Yamaguti identities on every basis tuple and
/// collects all violations.
pub fn check_lya(a: &LyAlgebra) -> AxiomReport {
    let n = a.dim();
    let e: Vec<Vec<Rational>> = (0..n).map(|i| a.basis(i)).collect();
    let br = |x: &[Rational], y: &[Rational]| a.bracket(x, y);
    let tr = |x: &[Rational], y: &[Rational], z: &[Rational]| a.ternary(x, y, z);
    let mut report = AxiomReport::new();

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (&e[x], &e[y], &e[z]);
                let r = sum(&[
                    &br(a.bracket_basis(x, y), ez),
                    &br(a.bracket_basis(y, z), ex),
                    &br(a.bracket_basis(z, x), ey),
                    a.ternary_basis(x, y, z),
                    a.ternary_basis(y, z, x),
                    a.ternary_basis(z, x, y),
                ]);
                report.record(LY1, &[x, y, z], r);
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    let (ex, ey, ez, ew) = (&e[x], &e[y], &e[z], &e[w]);
                    let r = sum(&[
                        &tr(a.bracket_basis(x, y), ez, ew),
                        &tr(a.bracket_basis(y, z), ex, ew),
                        &tr(a.bracket_basis(z, x), ey, ew),
                    ]);
                    report.record(LY2, &[x, y, z, w], r);

                    let r = diff(
                        &tr(ex, ey, a.bracket_basis(z, w)),
                        &[
                            &br(a.ternary_basis(x, y, z), ew),
                            &br(ez, a.ternary_basis(x, y, w)),
                        ],
                    );
                    report.record(LY3, &[x, y, z, w], r);
                }
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            for z in 0..n {
                for w in 0..n {
                    for t in 0..n {
                        let (ez, ew, et) = (&e[z], &e[w], &e[t]);
                        let r = diff(
                            &tr(&e[x], &e[y], a.ternary_basis(z, w, t)),
                            &[
                                &tr(a.ternary_basis(x, y, z), ew, et),
                                &tr(ez, a.ternary_basis(x, y, w), et),
                                &tr(ez, ew, a.ternary_basis(x, y, t)),
                            ],
                        );
                        report.record(LY4, &[x, y, z, w, t], r);
                    }
                }
            }
        }
    }
    report
}

/// Builds the algebra with the given bracket and `<x,y,z> = [[x,y],z]`.
/// Only the binary constants of `lie` are read.
pub fn lya_from_lie(lie: &LyAlgebra) -> Result<LyAlgebra> {
    let n = lie.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (ei, ej, ek) = (lie.basis(i), lie.basis(j), lie.basis(k));
                let r = sum(&[
                    &lie.bracket(lie.bracket_basis(i, j), &ek),
                    &lie.bracket(lie.bracket_basis(j, k), &ei),
                    &lie.bracket(lie.bracket_basis(k, i), &ej),
                ]);
                if r.iter().any(|c| !c.is_zero()) {
                    return Err(Error::JacobiViolation {
                        witness: (i, j, k),
                        residual: r,
                    });
                }
            }
        }
    }
    Ok(LyAlgebra::from_fn_named(
        lie.names().to_vec(),
        |i, j| lie.bracket_basis(i, j).to_vec(),
        |i, j, k| lie.bracket(lie.bracket_basis(i, j), &lie.basis(k)),
    ))
}

/// Checks that `phi: source → target` preserves both brackets on basis tuples.
pub fn homomorphism_check(source: &LyAlgebra, target: &LyAlgebra, phi: &Matrix) -> Result<AxiomReport> {
    if phi.rows() != target.dim() || phi.cols() != source.dim() {
        return Err(Error::Dimension(format!(
            "map is {}x{}, expected {}x{}",
            phi.rows(),
            phi.cols(),
            target.dim(),
            source.dim()
        )));
    }
    let n = source.dim();
    let img: Vec<Vec<Rational>> = (0..n).map(|i| phi.column(i)).collect();
    let mut report = AxiomReport::new();
    for i in 0..n {
        for j in 0..n {
            let r = vec_diff(
                &phi.apply(source.bracket_basis(i, j)),
                &target.bracket(&img[i], &img[j]),
            );
            report.record(HOM_BINARY, &[i, j], r);
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let r = vec_diff(
                    &phi.apply(source.ternary_basis(i, j, k)),
                    &target.ternary(&img[i], &img[j], &img[k]),
                );
                report.record(HOM_TERNARY, &[i, j, k], r);
            }
        }
    }
    Ok(report)
}

fn vec_diff(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{q, qi};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| qi(x)).collect()
    }

    fn two_dim() -> LyAlgebra {
        LyAlgebra::builder(2)
            .bracket(0, 1, v(&[1, 0]))
            .ternary(0, 1, 1, v(&[1, 0]))
            .build()
            .unwrap()
    }

    #[test]
    fn builder_fills_skew_halves() {
        let a = two_dim();
        assert_eq!(a.bracket_basis(1, 0), &v(&[-1, 0])[..]);
        assert_eq!(a.ternary_basis(1, 0, 1), &v(&[-1, 0])[..]);
        assert_eq!(a.ternary_basis(0, 0, 1), &v(&[0, 0])[..]);
    }

    #[test]
    fn builder_rejects_bad_orientation() {
        let diag = LyAlgebra::builder(2).bracket(1, 1, v(&[1, 0])).build();
        assert!(matches!(diag, Err(Error::Invariant(_))));
        let rev = LyAlgebra::builder(2).bracket(1, 0, v(&[1, 0])).build();
        assert!(matches!(rev, Err(Error::Invariant(_))));
        let dup = LyAlgebra::builder(2)
            .ternary(0, 1, 0, v(&[1, 0]))
            .ternary(0, 1, 0, v(&[1, 0]))
            .build();
        assert!(matches!(dup, Err(Error::Invariant(_))));
        let short = LyAlgebra::builder(2).bracket(0, 1, v(&[1])).build();
        assert!(matches!(short, Err(Error::Dimension(_))));
    }

    #[test]
    fn two_dim_example_is_ly() {
        assert!(check_lya(&two_dim()).valid());
        assert!(check_lya(&LyAlgebra::abelian(3)).valid());
    }

    #[test]
    fn wrong_ternary_breaks_ly3() {
        let bad = LyAlgebra::builder(2)
            .bracket(0, 1, v(&[1, 0]))
            .ternary(0, 1, 1, v(&[0, 1]))
            .build()
            .unwrap();
        let report = check_lya(&bad);
        assert!(!report.valid());
        let w = report
            .violations
            .iter()
            .find(|w| w.identity == LY3 && w.args == vec![0, 1, 0, 1])
            .expect("LY3 witness at (e1,e2,e1,e2)");
        assert_eq!(w.residual, v(&[-1, 0]));
    }

    #[test]
    fn lie_lift() {
        let r2 = LyAlgebra::builder(2).bracket(0, 1, v(&[1, 0])).build().unwrap();
        let a = lya_from_lie(&r2).unwrap();
        assert_eq!(a, two_dim());

        let cross = LyAlgebra::builder(3)
            .bracket(0, 1, v(&[0, 0, 1]))
            .bracket(0, 2, v(&[0, -1, 0]))
            .bracket(1, 2, v(&[1, 0, 0]))
            .build()
            .unwrap();
        let a = lya_from_lie(&cross).unwrap();
        assert_eq!(a.ternary_basis(0, 1, 0), &v(&[0, 1, 0])[..]);
        assert!(check_lya(&a).valid());
    }

    #[test]
    fn jacobi_failure_is_reported() {
        // [e1,e2]=e3, [e1,e3]=e1 breaks Jacobi
        let bad = LyAlgebra::builder(3)
            .bracket(0, 1, v(&[0, 0, 1]))
            .bracket(0, 2, v(&[1, 0, 0]))
            .build()
            .unwrap();
        match lya_from_lie(&bad) {
            Err(Error::JacobiViolation { witness, .. }) => assert_eq!(witness, (0, 1, 2)),
            other => panic!("expected Jacobi failure, got {other:?}"),
        }
    }

    #[test]
    fn change_basis_preserves_axioms() {
        let p = Matrix::from_rows(vec![vec![qi(1), q(1, 2)], vec![qi(2), qi(3)]]).unwrap();
        let b = two_dim().change_basis(&p).unwrap();
        assert!(check_lya(&b).valid());
        let report = homomorphism_check(&b, &two_dim(), &p).unwrap();
        assert!(report.valid(), "{report}");
    }
}
