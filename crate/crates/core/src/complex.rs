//! The Yamaguti cochain complex of a Lie-Yamaguti algebra with coefficients
//! in a representation.
//!
//! A cochain of degree 1 is a map `g → V`, stored as `data[a * v + c]`. A
//! cochain of degree `n + 1 ≥ 2` is a pair `(f, g)` with `f` on `n` wedge
//! slots and `g` on `n` wedge slots plus one algebra slot. The flat layout is
//! the `f` block followed by the `g` block, each row-major over the wedge
//! tuple (lexicographic in the wedge basis), then the algebra index, then the
//! value coordinate.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{rank_kernel, Matrix, Rational};
use crate::structures::{check_representation, LyAlgebra, Representation};

/// Scalars a cochain can carry. Plain rationals give concrete cochains;
/// [`LinearForm`] gives symbolic ones, used to read off coboundary matrices.
pub trait Coefficient: Clone + fmt::Debug {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_scaled(&mut self, other: &Self, c: &Rational);
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Rational::zero()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if !other.is_zero() && !c.is_zero() {
            *self += other * c;
        }
    }
}

/// A sparse linear form in the coordinates of some cochain space.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LinearForm(BTreeMap<usize, Rational>);

impl LinearForm {
    pub fn coordinate(i: usize) -> Self {
        LinearForm(BTreeMap::from([(i, Rational::one())]))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.0.iter().map(|(k, v)| (*k, v))
    }
}

impl Coefficient for LinearForm {
    fn zero() -> Self {
        LinearForm::default()
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.0 {
            let entry = self.0.entry(*k).or_insert_with(Rational::zero);
            *entry += v * c;
            if entry.is_zero() {
                self.0.remove(k);
            }
        }
    }
}

/// A sparse element of the wedge square: `(wedge index, coefficient)` pairs.
pub type WedgeCombination = Vec<(usize, Rational)>;

/// Algebra, coefficient module and the fixed ordering of the wedge basis.
#[derive(Debug, Clone)]
pub struct ComplexContext {
    rep: Arc<Representation>,
    wedges: Vec<(usize, usize)>,
    wedge_lookup: Vec<Option<usize>>,
    circ: Vec<WedgeCombination>,
}

/// Dimensions of cochains, cocycles, coboundaries and cohomology in one degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CohomologySummary {
    pub degree: usize,
    pub dim_cochains: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub dim_h: usize,
}

/// A cochain together with its degree. The flat layout is described in the
/// module docs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain<E = Rational> {
    degree: usize,
    data: Vec<E>,
}

impl<E> Cochain<E> {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn into_data(self) -> Vec<E> {
        self.data
    }
}

impl<E: Coefficient> Cochain<E> {
    pub fn zero(ctx: &ComplexContext, degree: usize) -> Result<Self> {
        Ok(Cochain {
            degree,
            data: vec![E::zero(); ctx.cochain_dim(degree)?],
        })
    }

    pub fn from_flat(ctx: &ComplexContext, degree: usize, data: Vec<E>) -> Result<Self> {
        let want = ctx.cochain_dim(degree)?;
        if data.len() != want {
            return Err(Error::Dimension(format!(
                "degree-{degree} cochain needs {want} coefficients, got {}",
                data.len()
            )));
        }
        Ok(Cochain { degree, data })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(E::is_zero)
    }
}

impl Cochain<Rational> {
    /// Degree-1 cochain from an `m × v`-shaped map given as a `v × m` matrix
    /// (columns are images of the algebra basis).
    pub fn from_map(ctx: &ComplexContext, map: &Matrix) -> Result<Self> {
        let (m, v) = (ctx.algebra().dim(), ctx.rep().dim_v());
        if map.rows() != v || map.cols() != m {
            return Err(Error::Dimension(format!(
                "degree-1 cochain needs a {v}x{m} matrix, got {}x{}",
                map.rows(),
                map.cols()
            )));
        }
        let mut data = Vec::with_capacity(m * v);
        for a in 0..m {
            data.extend(map.column(a));
        }
        Ok(Cochain { degree: 1, data })
    }

    /// Degree-1 cochain from a `v × m` matrix without a context.
    pub(crate) fn from_map_shape(v: usize, m: usize, map: &Matrix) -> Self {
        debug_assert_eq!((map.rows(), map.cols()), (v, m));
        let mut data = Vec::with_capacity(m * v);
        for a in 0..m {
            data.extend(map.column(a));
        }
        Cochain { degree: 1, data }
    }

    /// Inverse of [`Cochain::from_map`] for degree 1.
    pub fn to_map(&self, ctx: &ComplexContext) -> Result<Matrix> {
        if self.degree != 1 {
            return Err(Error::Degree(format!("expected degree 1, got {}", self.degree)));
        }
        let (m, v) = (ctx.algebra().dim(), ctx.rep().dim_v());
        let cols: Vec<Vec<Rational>> = (0..m).map(|a| self.data[a * v..(a + 1) * v].to_vec()).collect();
        Ok(Matrix::from_columns(v, &cols))
    }
}

fn wedge_of(lookup: &[Option<usize>], m: usize, s: usize, t: usize) -> Option<(usize, Rational)> {
    if s == t {
        None
    } else if s < t {
        Some((lookup[s * m + t].unwrap(), Rational::one()))
    } else {
        Some((lookup[t * m + s].unwrap(), -Rational::one()))
    }
}

fn push_term(out: &mut WedgeCombination, idx: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    if let Some(e) = out.iter_mut().find(|(i, _)| *i == idx) {
        e.1 += c;
    } else {
        out.push((idx, c));
    }
}

fn apply_acc<E: Coefficient>(out: &mut [E], m: &Matrix, val: &[E], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for r in 0..m.rows() {
        for (s, x) in val.iter().enumerate() {
            let entry = &m[(r, s)];
            if !entry.is_zero() && !x.is_zero() {
                out[r].add_scaled(x, &(entry * c));
            }
        }
    }
}

fn add_acc<E: Coefficient>(out: &mut [E], val: &[E], c: &Rational) {
    if c.is_zero() {
        return;
    }
    for (o, x) in out.iter_mut().zip(val) {
        o.add_scaled(x, c);
    }
}

impl ComplexContext {
    /// Context for `rep` over its algebra. Fails if `rep` is not a
    /// representation.
    pub fn new(rep: impl Into<Arc<Representation>>) -> Result<Self> {
        let rep = rep.into();
        let report = check_representation(&rep);
        if !report.valid() {
            return Err(Error::InvalidRepresentation(Box::new(report)));
        }
        Ok(Self::new_unchecked(rep))
    }

    /// Context without validating the representation. The coboundary is
    /// still well defined as a linear map, but it need not square to zero.
    pub fn new_unchecked(rep: impl Into<Arc<Representation>>) -> Self {
        let rep = rep.into();
        let a = rep.algebra();
        let m = a.dim();
        let mut wedges = Vec::new();
        let mut lookup = vec![None; m * m];
        for i in 0..m {
            for j in i + 1..m {
                lookup[i * m + j] = Some(wedges.len());
                wedges.push((i, j));
            }
        }
        let w = wedges.len();
        let mut circ = Vec::with_capacity(w * w);
        for &(xk, yk) in &wedges {
            for &(xl, yl) in &wedges {
                let mut out = WedgeCombination::new();
                for (s, c) in a.ternary_basis(xk, yk, xl).iter().enumerate() {
                    if let Some((idx, sg)) = wedge_of(&lookup, m, s, yl) {
                        push_term(&mut out, idx, c * &sg);
                    }
                }
                for (s, c) in a.ternary_basis(xk, yk, yl).iter().enumerate() {
                    if let Some((idx, sg)) = wedge_of(&lookup, m, xl, s) {
                        push_term(&mut out, idx, c * &sg);
                    }
                }
                out.retain(|(_, c)| !c.is_zero());
                circ.push(out);
            }
        }
        ComplexContext {
            rep,
            wedges,
            wedge_lookup: lookup,
            circ,
        }
    }

    pub fn algebra(&self) -> &LyAlgebra {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn rep_arc(&self) -> &Arc<Representation> {
        &self.rep
    }

    /// Wedge basis `e_i ∧ e_j`, `i < j`, in lexicographic order.
    pub fn wedge_basis(&self) -> &[(usize, usize)] {
        &self.wedges
    }

    /// Index of `e_i ∧ e_j` in the wedge basis together with the sign of the
    /// reordering, or `None` when `i == j`.
    pub fn wedge_index(&self, i: usize, j: usize) -> Option<(usize, Rational)> {
        wedge_of(&self.wedge_lookup, self.algebra().dim(), i, j)
    }

    /// Expands `x ∧ y` over the wedge basis.
    pub fn wedge(&self, x: &[Rational], y: &[Rational]) -> WedgeCombination {
        let mut out = WedgeCombination::new();
        for (s, a) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, b) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some((idx, sg)) = self.wedge_index(s, t) {
                    push_term(&mut out, idx, a * b * sg);
                }
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        out
    }

    /// `X_k ∘ X_l = <x_k,y_k,x_l> ∧ y_l + x_l ∧ <x_k,y_k,y_l>` on wedge basis elements.
    pub fn circ(&self, k: usize, l: usize) -> &WedgeCombination {
        &self.circ[k * self.wedges.len() + l]
    }

    pub fn cochain_dim(&self, p: usize) -> Result<usize> {
        let (m, v, w) = (self.algebra().dim(), self.rep.dim_v(), self.wedges.len());
        match p {
            0 => Err(Error::Degree(
                "the Yamaguti complex starts in degree 1".into(),
            )),
            1 => Ok(m * v),
            _ => {
                let wn = w.pow((p - 1) as u32);
                Ok(wn * v + wn * m * v)
            }
        }
    }

    fn f_block_len(&self, p: usize) -> usize {
        self.wedges.len().pow((p - 1) as u32) * self.rep.dim_v()
    }

    fn tuple_index(&self, tuple: &[usize]) -> usize {
        tuple.iter().fold(0, |acc, &t| acc * self.wedges.len() + t)
    }

    fn f_slice<'a, E>(&self, p: usize, data: &'a [E], tuple: &[usize]) -> &'a [E] {
        let v = self.rep.dim_v();
        debug_assert_eq!(tuple.len(), p - 1);
        let start = self.tuple_index(tuple) * v;
        &data[start..start + v]
    }

    fn g_slice<'a, E>(&self, p: usize, data: &'a [E], tuple: &[usize], a: usize) -> &'a [E] {
        let (m, v) = (self.algebra().dim(), self.rep.dim_v());
        let start = self.f_block_len(p) + (self.tuple_index(tuple) * m + a) * v;
        &data[start..start + v]
    }

    /// Evaluates the `f` part of a degree `p ≥ 2` cochain on arbitrary wedge
    /// arguments `x_k ∧ y_k`.
    pub fn eval_f(&self, c: &Cochain, args: &[(Vec<Rational>, Vec<Rational>)]) -> Result<Vec<Rational>> {
        if c.degree < 2 || args.len() != c.degree - 1 {
            return Err(Error::Degree(format!(
                "f part of a degree-{} cochain takes {} wedge arguments",
                c.degree,
                c.degree.saturating_sub(1)
            )));
        }
        let slots: Vec<WedgeCombination> = args.iter().map(|(x, y)| self.wedge(x, y)).collect();
        let mut out = vec![Rational::zero(); self.rep.dim_v()];
        self.expand(&slots, &mut Vec::new(), Rational::one(), &mut |t, coef| {
            add_acc(&mut out, self.f_slice(c.degree, &c.data, t), &coef)
        });
        Ok(out)
    }

    /// Evaluates the `g` part of a degree `p ≥ 2` cochain.
    pub fn eval_g(
        &self,
        c: &Cochain,
        args: &[(Vec<Rational>, Vec<Rational>)],
        z: &[Rational],
    ) -> Result<Vec<Rational>> {
        if c.degree < 2 || args.len() != c.degree - 1 {
            return Err(Error::Degree(format!(
                "g part of a degree-{} cochain takes {} wedge arguments",
                c.degree,
                c.degree.saturating_sub(1)
            )));
        }
        let slots: Vec<WedgeCombination> = args.iter().map(|(x, y)| self.wedge(x, y)).collect();
        let mut out = vec![Rational::zero(); self.rep.dim_v()];
        self.expand(&slots, &mut Vec::new(), Rational::one(), &mut |t, coef| {
            for (a, za) in z.iter().enumerate() {
                if !za.is_zero() {
                    add_acc(&mut out, self.g_slice(c.degree, &c.data, t, a), &(&coef * za));
                }
            }
        });
        Ok(out)
    }

    /// Evaluates a degree-1 cochain at `x`.
    pub fn eval_map(&self, c: &Cochain, x: &[Rational]) -> Result<Vec<Rational>> {
        if c.degree != 1 {
            return Err(Error::Degree(format!("expected degree 1, got {}", c.degree)));
        }
        let v = self.rep.dim_v();
        let mut out = vec![Rational::zero(); v];
        for (a, xa) in x.iter().enumerate() {
            add_acc(&mut out, &c.data[a * v..(a + 1) * v], xa);
        }
        Ok(out)
    }

    fn expand(
        &self,
        slots: &[WedgeCombination],
        prefix: &mut Vec<usize>,
        coef: Rational,
        visit: &mut dyn FnMut(&[usize], Rational),
    ) {
        if prefix.len() == slots.len() {
            visit(prefix, coef);
            return;
        }
        for (idx, c) in &slots[prefix.len()] {
            prefix.push(*idx);
            self.expand(slots, prefix, &coef * c, visit);
            prefix.pop();
        }
    }

    /// Applies the coboundary to a cochain of degree `p ≥ 1`.
    pub fn coboundary(&self, c: &Cochain) -> Result<Cochain> {
        let want = self.cochain_dim(c.degree)?;
        if c.data.len() != want {
            return Err(Error::Dimension(format!(
                "degree-{} cochain needs {want} coefficients, got {}",
                c.degree,
                c.data.len()
            )));
        }
        Ok(Cochain {
            degree: c.degree + 1,
            data: self.coboundary_generic(c.degree, &c.data),
        })
    }

    /// The coboundary on cochains with arbitrary coefficients.
    pub fn coboundary_generic<E: Coefficient>(&self, p: usize, data: &[E]) -> Vec<E> {
        if p == 1 {
            self.coboundary_first(data)
        } else {
            self.coboundary_higher(p - 1, data)
        }
    }

    fn coboundary_first<E: Coefficient>(&self, data: &[E]) -> Vec<E> {
        let a = self.algebra();
        let r = &*self.rep;
        let (m, v) = (a.dim(), r.dim_v());
        let one = Rational::one();
        let f = |i: usize| &data[i * v..(i + 1) * v];
        let f_vec = |out: &mut [E], x: &[Rational], c: &Rational| {
            for (i, xi) in x.iter().enumerate() {
                add_acc(out, f(i), &(xi * c));
            }
        };
        let mut out = vec![E::zero(); self.cochain_dim(2).unwrap()];
        let (f_part, g_part) = out.split_at_mut(self.f_block_len(2));
        for (wi, &(x, y)) in self.wedges.iter().enumerate() {
            let slot = &mut f_part[wi * v..(wi + 1) * v];
            apply_acc(slot, r.rho(x), f(y), &one);
            apply_acc(slot, r.rho(y), f(x), &-&one);
            f_vec(slot, a.bracket_basis(x, y), &-&one);
            for z in 0..m {
                let slot = &mut g_part[(wi * m + z) * v..(wi * m + z + 1) * v];
                apply_acc(slot, r.d(x, y), f(z), &one);
                apply_acc(slot, r.mu(y, z), f(x), &one);
                apply_acc(slot, r.mu(x, z), f(y), &-&one);
                f_vec(slot, a.ternary_basis(x, y, z), &-&one);
            }
        }
        out
    }

    fn coboundary_higher<E: Coefficient>(&self, n: usize, data: &[E]) -> Vec<E> {
        let a = self.algebra();
        let r = &*self.rep;
        let (m, v, w) = (a.dim(), r.dim_v(), self.wedges.len());
        let p = n + 1;
        let sign_n = Rational::sign(n);
        let f = |t: &[usize]| self.f_slice(p, data, t);
        let g = |t: &[usize], z: usize| self.g_slice(p, data, t, z);
        let g_vec = |out: &mut [E], t: &[usize], z: &[Rational], c: &Rational| {
            for (i, zi) in z.iter().enumerate() {
                if !zi.is_zero() {
                    add_acc(out, g(t, i), &(zi * c));
                }
            }
        };

        let out_len = self.cochain_dim(p + 1).unwrap();
        let f_len = self.f_block_len(p + 1);
        let mut out = vec![E::zero(); out_len];
        let count = w.pow((n + 1) as u32);
        let mut tuple = vec![0usize; n + 1];
        let mut reduced = vec![0usize; n];
        for ti in 0..count {
            let mut rem = ti;
            for slot in (0..=n).rev() {
                tuple[slot] = rem % w;
                rem /= w;
            }
            let (xl, yl) = self.wedges[tuple[n]];
            let head = &tuple[..n];

            // f-part of the output
            {
                let slot = &mut out[ti * v..(ti + 1) * v];
                apply_acc(slot, r.rho(xl), g(head, yl), &sign_n);
                apply_acc(slot, r.rho(yl), g(head, xl), &-&sign_n);
                g_vec(slot, head, a.bracket_basis(xl, yl), &-&sign_n);
                for k in 0..n {
                    remove_into(&tuple, k, &mut reduced);
                    let (xk, yk) = self.wedges[tuple[k]];
                    apply_acc(slot, r.d(xk, yk), f(&reduced), &Rational::sign(k));
                }
                for k in 0..=n {
                    for l in k + 1..=n {
                        remove_into(&tuple, k, &mut reduced);
                        let sg = Rational::sign(k + 1);
                        for (idx, c) in self.circ(tuple[k], tuple[l]) {
                            reduced[l - 1] = *idx;
                            add_acc(slot, f(&reduced), &(c * &sg));
                        }
                    }
                }
            }

            // g-part of the output
            for z in 0..m {
                let start = f_len + (ti * m + z) * v;
                let slot = &mut out[start..start + v];
                apply_acc(slot, r.mu(yl, z), g(head, xl), &sign_n);
                apply_acc(slot, r.mu(xl, z), g(head, yl), &-&sign_n);
                for k in 0..=n {
                    remove_into(&tuple, k, &mut reduced);
                    let (xk, yk) = self.wedges[tuple[k]];
                    apply_acc(slot, r.d(xk, yk), g(&reduced, z), &Rational::sign(k));
                    g_vec(slot, &reduced, a.ternary_basis(xk, yk, z), &Rational::sign(k + 1));
                }
                for k in 0..=n {
                    for l in k + 1..=n {
                        remove_into(&tuple, k, &mut reduced);
                        let sg = Rational::sign(k + 1);
                        for (idx, c) in self.circ(tuple[k], tuple[l]) {
                            reduced[l - 1] = *idx;
                            add_acc(slot, g(&reduced, z), &(c * &sg));
                        }
                    }
                }
            }
        }
        out
    }

    /// Matrix of the coboundary from degree `p` to degree `p + 1` in the
    /// flattened cochain bases.
    pub fn coboundary_matrix(&self, p: usize) -> Result<Matrix> {
        let cols = self.cochain_dim(p)?;
        let rows = self.cochain_dim(p + 1)?;
        let input: Vec<LinearForm> = (0..cols).map(LinearForm::coordinate).collect();
        let forms = self.coboundary_generic(p, &input);
        Ok(forms_to_matrix(rows, cols, &forms))
    }
}

pub(crate) fn forms_to_matrix(rows: usize, cols: usize, forms: &[LinearForm]) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for (i, form) in forms.iter().enumerate() {
        for (j, c) in form.terms() {
            out[(i, j)] = c.clone();
        }
    }
    out
}

fn remove_into(tuple: &[usize], k: usize, out: &mut [usize]) {
    let mut o = 0;
    for (i, &t) in tuple.iter().enumerate() {
        if i != k {
            out[o] = t;
            o += 1;
        }
    }
}

pub fn cochain_dim(ctx: &ComplexContext, p: usize) -> Result<usize> {
    ctx.cochain_dim(p)
}

pub fn coboundary(ctx: &ComplexContext, c: &Cochain) -> Result<Cochain> {
    ctx.coboundary(c)
}

pub fn coboundary_matrix(ctx: &ComplexContext, p: usize) -> Result<Matrix> {
    ctx.coboundary_matrix(p)
}

/// Cohomology dimensions in degree `p`. Coboundaries from degree `p - 1` are
/// counted only when `include_coboundaries` is set and `p ≥ 2`; with the flag
/// off, degree 1 reports `H^1 = Z^1`.
pub fn cohomology_dims(ctx: &ComplexContext, p: usize, include_coboundaries: bool) -> Result<CohomologySummary> {
    let dim_cochains = ctx.cochain_dim(p)?;
    let (rank, _) = rank_kernel(&ctx.coboundary_matrix(p)?);
    let dim_cocycles = dim_cochains - rank;
    let dim_coboundaries = if include_coboundaries && p >= 2 {
        ctx.coboundary_matrix(p - 1)?.rank()
    } else {
        0
    };
    summary(p, dim_cochains, dim_cocycles, dim_coboundaries)
}

pub(crate) fn summary(
    degree: usize,
    dim_cochains: usize,
    dim_cocycles: usize,
    dim_coboundaries: usize,
) -> Result<CohomologySummary> {
    if dim_coboundaries > dim_cocycles {
        return Err(Error::Invariant(format!(
            "degree {degree}: {dim_coboundaries} independent coboundaries exceed {dim_cocycles} cocycles"
        )));
    }
    Ok(CohomologySummary {
        degree,
        dim_cochains,
        dim_cocycles,
        dim_coboundaries,
        dim_h: dim_cocycles - dim_coboundaries,
    })
}
