//! Lie algebras given by structure constants.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElem};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("bracket index out of range: ({0}, {1}) -> {2} in dimension {3}")]
    IndexOutOfRange(usize, usize, usize, usize),
    #[error("bracket indices must satisfy i < j, got ({0}, {1})")]
    BadPair(usize, usize),
    #[error("algebras are over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("map does not preserve brackets at basis pair ({0}, {1})")]
    NotAHomomorphism(usize, usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A failing Jacobi triple (0-based basis indices).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub value: Vector,
}

impl fmt::Display for JacobiViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        let v: Vec<String> = self.value.iter().map(|x| x.to_string()).collect();
        write!(f, "Jacobi identity fails on (x{}, x{}, x{}): sum = ({})", i + 1, j + 1, k + 1, v.join(", "))
    }
}

/// Index of the pair `(i, j)`, `i < j`, in lexicographic order.
pub fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j < n`, lexicographically.
pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// A Lie algebra `[x_i, x_j] = sum_k c_ij^k x_k`, stored for `i < j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LieAlgebra {
    field: Field,
    dim: usize,
    consts: Vec<Vector>,
}

impl LieAlgebra {
    pub fn abelian(field: Field, dim: usize) -> Self {
        let np = dim * dim.saturating_sub(1) / 2;
        LieAlgebra { field, dim, consts: vec![vec![field.zero(); dim]; np] }
    }

    /// Builds an algebra from 1-based entries `(i, j, k, c)` meaning that
    /// `[x_i, x_j]` has `c` as its `x_k` coefficient. Repeated entries add up.
    pub fn from_sparse(field: Field, dim: usize, entries: &[(usize, usize, usize, i64)]) -> Result<Self, LieError> {
        let elems: Vec<_> = entries.iter().map(|&(i, j, k, c)| (i, j, k, field.from_i64(c))).collect();
        Self::from_entries(field, dim, &elems)
    }

    pub fn from_entries(field: Field, dim: usize, entries: &[(usize, usize, usize, FieldElem)]) -> Result<Self, LieError> {
        let mut l = Self::abelian(field, dim);
        for (i, j, k, c) in entries {
            let (i, j, k) = (*i, *j, *k);
            if i == 0 || j == 0 || k == 0 || i > dim || j > dim || k > dim {
                return Err(LieError::IndexOutOfRange(i, j, k, dim));
            }
            if i >= j {
                return Err(LieError::BadPair(i, j));
            }
            if c.field() != field {
                return Err(LieError::FieldMismatch);
            }
            let p = pair_index(dim, i - 1, j - 1);
            l.consts[p][k - 1] += c;
        }
        Ok(l)
    }

    /// Builds an algebra from the bracket vectors of all pairs `i < j` in
    /// lexicographic order.
    pub fn from_pair_vectors(field: Field, dim: usize, consts: Vec<Vector>) -> Result<Self, LieError> {
        if consts.len() != dim * dim.saturating_sub(1) / 2 || consts.iter().any(|v| v.len() != dim) {
            return Err(LieError::DimensionMismatch("structure constant table has the wrong shape".into()));
        }
        Ok(LieAlgebra { field, dim, consts })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Nonzero structure constants as 1-based `(i, j, [(k, c)])`, `i < j`.
    pub fn sparse(&self) -> Vec<(usize, usize, Vec<(usize, FieldElem)>)> {
        pairs(self.dim)
            .into_iter()
            .filter_map(|(i, j)| {
                let v = &self.consts[pair_index(self.dim, i, j)];
                let terms: Vec<_> = v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| (k + 1, c.clone())).collect();
                (!terms.is_empty()).then_some((i + 1, j + 1, terms))
            })
            .collect()
    }

    /// `[x_i, x_j]` for 0-based indices.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.consts[pair_index(self.dim, i, j)].clone(),
            Greater => self.consts[pair_index(self.dim, j, i)].iter().map(|c| -c).collect(),
            Equal => vec![self.field.zero(); self.dim],
        }
    }

    pub fn bracket(&self, x: &[FieldElem], y: &[FieldElem]) -> Vector {
        let mut out = vec![self.field.zero(); self.dim];
        for (i, j) in pairs(self.dim) {
            let c = &(&x[i] * &y[j]) - &(&x[j] * &y[i]);
            if c.is_zero() {
                continue;
            }
            for (o, s) in out.iter_mut().zip(&self.consts[pair_index(self.dim, i, j)]) {
                if !s.is_zero() {
                    *o += &(&c * s);
                }
            }
        }
        out
    }

    /// Matrix of `ad x = [x, -]`.
    pub fn ad(&self, x: &[FieldElem]) -> Matrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.bracket(x, &self.unit(j))).collect();
        Matrix::from_cols(self.field, self.dim, &cols)
    }

    pub fn unit(&self, i: usize) -> Vector {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn is_abelian(&self) -> bool {
        self.consts.iter().all(|v| v.iter().all(FieldElem::is_zero))
    }

    /// Checks the Jacobi identity on every basis triple.
    pub fn validate(&self) -> Result<(), JacobiViolation> {
        let n = self.dim;
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let a = self.bracket(&self.bracket_basis(i, j), &self.unit(k));
                    let b = self.bracket(&self.bracket_basis(j, k), &self.unit(i));
                    let c = self.bracket(&self.bracket_basis(k, i), &self.unit(j));
                    let s: Vector = a.iter().zip(&b).zip(&c).map(|((a, b), c)| &(a + b) + c).collect();
                    if !s.iter().all(FieldElem::is_zero) {
                        return Err(JacobiViolation { triple: (i, j, k), value: s });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn center(&self) -> Subspace {
        // x central iff sum_i x_i c_ij^k = 0 for all j, k.
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for j in 0..n {
            let brs: Vec<Vector> = (0..n).map(|i| self.bracket_basis(i, j)).collect();
            for k in 0..n {
                rows.push((0..n).map(|i| brs[i][k].clone()).collect::<Vector>());
            }
        }
        Subspace::span(self.field, n, &Matrix::from_rows(self.field, n, &rows).kernel())
    }

    /// `[A, B]` as a subspace.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for u in a.basis() {
            for w in b.basis() {
                vs.push(self.bracket(u, w));
            }
        }
        Subspace::span(self.field, self.dim, &vs)
    }

    pub fn derived_algebra(&self) -> Subspace {
        let full = Subspace::full(self.field, self.dim);
        self.bracket_span(&full, &full)
    }

    /// `L = L^1 ⊇ L^2 = [L, L] ⊇ ...` until the chain stabilizes; the last
    /// term is repeated only once.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.field, self.dim);
        let mut out = vec![full.clone()];
        loop {
            let next = self.bracket_span(&full, out.last().unwrap());
            if next.dim() == out.last().unwrap().dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut out = vec![Subspace::full(self.field, self.dim)];
        loop {
            let last = out.last().unwrap();
            let next = self.bracket_span(last, last);
            if next.dim() == last.dim() {
                break;
            }
            out.push(next);
        }
        out
    }

    pub fn lcs_dims(&self) -> Vec<usize> {
        self.lower_central_series().iter().map(Subspace::dim).collect()
    }

    pub fn derived_dims(&self) -> Vec<usize> {
        self.derived_series().iter().map(Subspace::dim).collect()
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().unwrap().dim() == 0
    }

    pub fn is_ideal(&self, ideal: &Subspace) -> bool {
        (0..self.dim).all(|i| ideal.basis().iter().all(|b| ideal.contains(&self.bracket(&self.unit(i), b))))
    }

    /// `L / I` with the projection and the coordinate section.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient, LieError> {
        if ideal.ambient() != self.dim {
            return Err(LieError::DimensionMismatch("ideal lives in another space".into()));
        }
        if !self.is_ideal(ideal) {
            return Err(LieError::NotAnIdeal);
        }
        let comp = ideal.complement_units();
        let q = comp.len();
        let mut proj = Matrix::zeros(self.field, q, self.dim);
        for (t, &c) in comp.iter().enumerate() {
            proj.set(t, c, self.field.one());
            for (b, &p) in ideal.basis().iter().zip(ideal.pivots()) {
                if !b[c].is_zero() {
                    let v = proj.get(t, p) - &b[c];
                    proj.set(t, p, v);
                }
            }
        }
        let mut section = Matrix::zeros(self.field, self.dim, q);
        for (t, &c) in comp.iter().enumerate() {
            section.set(c, t, self.field.one());
        }
        let mut consts = Vec::with_capacity(q * q.saturating_sub(1) / 2);
        for (s, t) in pairs(q) {
            consts.push(proj.mul_vec(&self.bracket_basis(comp[s], comp[t])));
        }
        let algebra = LieAlgebra { field: self.field, dim: q, consts };
        Ok(Quotient { algebra, proj, section })
    }

    /// `A ⊕ B` with the basis of `A` first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> Result<LieAlgebra, LieError> {
        if self.field != other.field {
            return Err(LieError::FieldMismatch);
        }
        let n = self.dim + other.dim;
        let mut out = Self::abelian(self.field, n);
        for (i, j) in pairs(self.dim) {
            let mut v = self.bracket_basis(i, j);
            v.resize(n, self.field.zero());
            out.consts[pair_index(n, i, j)] = v;
        }
        for (i, j) in pairs(other.dim) {
            let mut v = vec![self.field.zero(); self.dim];
            v.extend(other.bracket_basis(i, j));
            out.consts[pair_index(n, self.dim + i, self.dim + j)] = v;
        }
        Ok(out)
    }

    /// The same algebra in the basis `y_j = sum_i P_ij x_i`. The identity map
    /// of the underlying space becomes `P^-1` in the new coordinates.
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        if p.rows() != self.dim || p.cols() != self.dim {
            return Err(LieError::DimensionMismatch("basis change must be square of the algebra's dimension".into()));
        }
        let pinv = p.inverse()?;
        let cols = p.col_vectors();
        let consts = pairs(self.dim).into_iter().map(|(a, b)| pinv.mul_vec(&self.bracket(&cols[a], &cols[b]))).collect();
        Ok(LieAlgebra { field: self.field, dim: self.dim, consts })
    }

    /// Checks `M[x_i, x_j] = [M x_i, M x_j]` for all basis pairs, where `M`
    /// is `target.dim x self.dim` in the column convention.
    pub fn check_homomorphism(&self, target: &LieAlgebra, m: &Matrix) -> Result<(), LieError> {
        if self.field != target.field {
            return Err(LieError::FieldMismatch);
        }
        if m.rows() != target.dim || m.cols() != self.dim {
            return Err(LieError::DimensionMismatch(format!(
                "map is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                target.dim,
                self.dim
            )));
        }
        let imgs = m.col_vectors();
        for (i, j) in pairs(self.dim) {
            if m.mul_vec(&self.bracket_basis(i, j)) != target.bracket(&imgs[i], &imgs[j]) {
                return Err(LieError::NotAHomomorphism(i, j));
            }
        }
        Ok(())
    }

    /// Splits off the largest abelian direct summand.
    pub fn strip_central_component(&self) -> Result<Stripped, LieError> {
        let f = self.field;
        let n = self.dim;
        let c = self.center();
        let d = self.derived_algebra();
        let z = c.intersect(&d);
        let mut w_basis: Vec<Vector> = Vec::new();
        let mut acc = z.clone();
        for v in c.basis() {
            if !acc.contains(v) {
                acc = acc.sum(&Subspace::span(f, n, &[v.clone()]));
                w_basis.push(v.clone());
            }
        }
        let mut i_basis: Vec<Vector> = Vec::new();
        let mut acc = d.sum(&Subspace::span(f, n, &w_basis));
        for k in 0..n {
            let e = self.unit(k);
            if !acc.contains(&e) {
                acc = acc.sum(&Subspace::span(f, n, &[e.clone()]));
                i_basis.push(e);
            }
        }
        i_basis.extend(d.basis().iter().cloned());
        let core_dim = i_basis.len();
        let abelian_dim = w_basis.len();
        let mut cols = i_basis;
        cols.extend(w_basis);
        let p = Matrix::from_cols(f, n, &cols);
        let split = self.change_basis(&p)?;
        let core_consts = pairs(core_dim)
            .into_iter()
            .map(|(a, b)| split.bracket_basis(a, b)[..core_dim].to_vec())
            .collect();
        let core = LieAlgebra { field: f, dim: core_dim, consts: core_consts };
        let target = core.direct_sum(&LieAlgebra::abelian(f, abelian_dim))?;
        debug_assert_eq!(target, split);
        let iso = Isomorphism::new(self.clone(), target, p.inverse()?)?;
        Ok(Stripped { core, abelian_dim, iso })
    }
}

impl fmt::Display for LieAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sparse()
            .into_iter()
            .map(|(i, j, terms)| {
                let rhs: Vec<String> = terms
                    .iter()
                    .map(|(k, c)| if c.is_one() { format!("x{k}") } else { format!("({c})x{k}") })
                    .collect();
                format!("[x{i},x{j}]={}", rhs.join("+"))
            })
            .collect();
        if parts.is_empty() {
            write!(f, "abelian({}) over {}", self.dim, self.field)
        } else {
            write!(f, "{} over {}", parts.join(", "), self.field)
        }
    }
}

/// Result of [`LieAlgebra::quotient`]. `proj` is `q x n`, `section` is `n x q`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    pub proj: Matrix,
    pub section: Matrix,
}

/// Result of [`LieAlgebra::strip_central_component`]; `iso` maps the input
/// onto `core ⊕ F^abelian_dim`.
#[derive(Debug, Clone)]
pub struct Stripped {
    pub core: LieAlgebra,
    pub abelian_dim: usize,
    pub iso: Isomorphism,
}

/// A linear map in the column convention: column `i` is the image of `x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub matrix: Matrix,
}

/// A verified Lie algebra isomorphism.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isomorphism {
    source: LieAlgebra,
    target: LieAlgebra,
    matrix: Matrix,
}

impl Isomorphism {
    pub fn new(source: LieAlgebra, target: LieAlgebra, matrix: Matrix) -> Result<Self, LieError> {
        if source.dim != target.dim {
            return Err(LieError::DimensionMismatch("source and target dimensions differ".into()));
        }
        source.check_homomorphism(&target, &matrix)?;
        if !matrix.is_invertible() {
            return Err(LieError::Linalg(LinalgError::Singular));
        }
        Ok(Isomorphism { source, target, matrix })
    }

    pub fn identity(l: &LieAlgebra) -> Self {
        Isomorphism { source: l.clone(), target: l.clone(), matrix: Matrix::identity(l.field, l.dim) }
    }

    pub fn source(&self) -> &LieAlgebra {
        &self.source
    }

    pub fn target(&self) -> &LieAlgebra {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Isomorphism) -> Result<Isomorphism, LieError> {
        if self.target != other.source {
            return Err(LieError::DimensionMismatch("composition of non-matching isomorphisms".into()));
        }
        Isomorphism::new(self.source.clone(), other.target.clone(), other.matrix.mul(&self.matrix)?)
    }

    pub fn inverse(&self) -> Isomorphism {
        Isomorphism {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix: self.matrix.inverse().expect("isomorphisms are invertible"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn l(dim: usize, e: &[(usize, usize, usize, i64)]) -> LieAlgebra {
        LieAlgebra::from_sparse(q(), dim, e).unwrap()
    }

    fn l618() -> LieAlgebra {
        l(6, &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1), (1, 5, 6, 1)])
    }

    #[test]
    fn pair_indexing() {
        for n in 0..7 {
            for (t, (i, j)) in pairs(n).into_iter().enumerate() {
                assert_eq!(pair_index(n, i, j), t);
            }
        }
    }

    #[test]
    fn jacobi_checks() {
        assert!(l618().validate().is_ok());
        assert!(LieAlgebra::abelian(q(), 4).validate().is_ok());
        let bad = l(3, &[(1, 2, 3, 1), (1, 3, 1, 1)]);
        assert_eq!(bad.validate().unwrap_err().triple, (0, 1, 2));
    }

    #[test]
    fn centers_and_series() {
        let l54 = l(5, &[(1, 2, 5, 1), (3, 4, 5, 1)]);
        assert_eq!(l54.center(), Subspace::span(q(), 5, &[l54.unit(4)]));
        assert_eq!(LieAlgebra::abelian(q(), 3).center().dim(), 3);
        assert_eq!(l618().lcs_dims(), vec![6, 4, 3, 2, 1, 0]);
        assert_eq!(LieAlgebra::abelian(q(), 3).lcs_dims(), vec![3, 0]);
        assert_eq!(l(3, &[(1, 2, 3, 1)]).lcs_dims(), vec![3, 1, 0]);
        assert!(l618().is_nilpotent());
        let sl2ish = l(3, &[(1, 2, 3, 1), (1, 3, 1, 1), (2, 3, 2, -1)]);
        assert!(!sl2ish.is_nilpotent());
    }

    #[test]
    fn quotients() {
        let l43 = l(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
        let qt = l43.quotient(&Subspace::span(q(), 4, &[l43.unit(3)])).unwrap();
        assert_eq!(qt.algebra, l(3, &[(1, 2, 3, 1)]));
        assert!(qt.proj.mul(&qt.section).unwrap().is_identity());
        assert_eq!(l43.quotient(&Subspace::full(q(), 4)).unwrap().algebra.dim(), 0);
        let l57 = l(5, &[(1, 2, 3, 1), (1, 3, 4, 1), (1, 4, 5, 1)]);
        assert_eq!(l618().quotient(&l618().center()).unwrap().algebra, l57);
        assert_eq!(l43.quotient(&Subspace::span(q(), 4, &[l43.unit(0)])).unwrap_err(), LieError::NotAnIdeal);
    }

    #[test]
    fn change_basis_is_isomorphic() {
        let a = l618();
        let p = Matrix::from_i64(
            q(),
            &[
                &[1, 1, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 2],
                &[0, 0, 1, 0, 0, 0],
                &[3, 0, 0, 1, 0, 0],
                &[0, 0, 0, 0, 1, 0],
                &[0, 0, 0, 1, 0, 1],
            ],
        );
        let b = a.change_basis(&p).unwrap();
        assert!(b.validate().is_ok());
        Isomorphism::new(a.clone(), b.clone(), p.inverse().unwrap()).unwrap();
        assert_eq!(b.center(), a.center().image(&p.inverse().unwrap()));
    }

    #[test]
    fn stripping() {
        let l43 = l(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
        let l53 = l43.direct_sum(&LieAlgebra::abelian(q(), 1)).unwrap();
        let s = l53.strip_central_component().unwrap();
        assert_eq!((s.core.clone(), s.abelian_dim), (l43, 1));
        let l52 = l(5, &[(1, 2, 3, 1)]);
        let s = l52.strip_central_component().unwrap();
        assert_eq!((s.core.clone(), s.abelian_dim), (l(3, &[(1, 2, 3, 1)]), 2));
        let s = l618().strip_central_component().unwrap();
        assert_eq!(s.abelian_dim, 0);
        let s = LieAlgebra::abelian(q(), 3).strip_central_component().unwrap();
        assert_eq!((s.core.dim(), s.abelian_dim), (0, 3));
        let mixed = l(4, &[(1, 2, 3, 1), (1, 2, 4, 1)]);
        let s = mixed.strip_central_component().unwrap();
        assert_eq!((s.core.dim(), s.abelian_dim), (3, 1));
    }
}
