//! Skew forms, second cohomology with trivial coefficients, and central
//! extensions.
//!
//! A skew form on an `n`-dimensional algebra is stored by its coefficients on
//! the basis `Δ_ij` (`i < j`, lexicographic), where `Δ_ij(x_i, x_j) = 1`,
//! `Δ_ij(x_j, x_i) = -1` and all other basis pairs go to zero.

use std::fmt;

use thiserror::Error;

use crate::field::{Field, FieldElem};
use crate::liealg::{pair_index, pairs, Isomorphism, LieAlgebra, LieError, Quotient};
use crate::linalg::{Matrix, Subspace, Vector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("form {0} is not a cocycle")]
    NotACocycle(usize),
    #[error("map is not an automorphism of the base algebra")]
    NotAnAutomorphism,
    #[error("compatibility equation fails for component {l} on basis pair ({i}, {j})")]
    AssemblyMismatch { l: usize, i: usize, j: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("subspace is not central")]
    NotCentral,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A skew-symmetric bilinear form in the `Δ_ij` basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SkewForm {
    field: Field,
    n: usize,
    coeffs: Vector,
}

impl SkewForm {
    pub fn zero(field: Field, n: usize) -> Self {
        SkewForm { field, n, coeffs: vec![field.zero(); n * n.saturating_sub(1) / 2] }
    }

    pub fn from_coeffs(field: Field, n: usize, coeffs: Vector) -> Result<Self, CohomologyError> {
        if coeffs.len() != n * n.saturating_sub(1) / 2 {
            return Err(CohomologyError::DimensionMismatch(format!(
                "{} coefficients given, {} expected",
                coeffs.len(),
                n * n.saturating_sub(1) / 2
            )));
        }
        Ok(SkewForm { field, n, coeffs })
    }

    /// `sum c Δ_ij` from 1-based `(i, j, c)` with `i < j`.
    pub fn from_deltas(field: Field, n: usize, terms: &[(usize, usize, i64)]) -> Self {
        let mut f = Self::zero(field, n);
        for &(i, j, c) in terms {
            assert!(1 <= i && i < j && j <= n, "bad Δ index ({i}, {j})");
            f.coeffs[pair_index(n, i - 1, j - 1)] += &field.from_i64(c);
        }
        f
    }

    /// Form with Gram matrix `g`; `g` must be skew.
    pub fn from_gram(g: &Matrix) -> Self {
        let n = g.rows();
        let coeffs = pairs(n).into_iter().map(|(i, j)| g.get(i, j).clone()).collect();
        SkewForm { field: g.field(), n, coeffs }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    /// Coefficient of `Δ_ij`, 0-based, any order.
    pub fn coeff(&self, i: usize, j: usize) -> FieldElem {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Less => self.coeffs[pair_index(self.n, i, j)].clone(),
            Greater => -&self.coeffs[pair_index(self.n, j, i)],
            Equal => self.field.zero(),
        }
    }

    /// Coefficient of `Δ_ij` with 1-based indices `i < j`.
    pub fn delta(&self, i: usize, j: usize) -> FieldElem {
        self.coeff(i - 1, j - 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FieldElem::is_zero)
    }

    pub fn eval(&self, x: &[FieldElem], y: &[FieldElem]) -> FieldElem {
        let mut acc = self.field.zero();
        for ((i, j), c) in pairs(self.n).into_iter().zip(&self.coeffs) {
            if !c.is_zero() {
                acc += &(c * &(&(&x[i] * &y[j]) - &(&x[j] * &y[i])));
            }
        }
        acc
    }

    pub fn gram(&self) -> Matrix {
        let mut g = Matrix::zeros(self.field, self.n, self.n);
        for ((i, j), c) in pairs(self.n).into_iter().zip(&self.coeffs) {
            g.set(i, j, c.clone());
            g.set(j, i, -c);
        }
        g
    }

    /// `(x, y) ↦ θ(φx, φy)`.
    pub fn pullback(&self, phi: &Matrix) -> SkewForm {
        let g = phi.transpose().mul(&self.gram()).and_then(|m| m.mul(phi)).expect("square map of matching size");
        SkewForm::from_gram(&g)
    }

    pub fn add(&self, other: &SkewForm) -> SkewForm {
        SkewForm { field: self.field, n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn scale(&self, c: &FieldElem) -> SkewForm {
        SkewForm { field: self.field, n: self.n, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// `sum_k w_k forms_k`.
    pub fn combination(field: Field, n: usize, weights: &[FieldElem], forms: &[SkewForm]) -> SkewForm {
        let mut acc = SkewForm::zero(field, n);
        for (w, f) in weights.iter().zip(forms) {
            if !w.is_zero() {
                acc = acc.add(&f.scale(w));
            }
        }
        acc
    }

    /// The radical `{x : θ(x, y) = 0 for all y}`.
    pub fn radical(&self) -> Subspace {
        radical_of(self.field, self.n, std::slice::from_ref(self))
    }
}

impl fmt::Display for SkewForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j), c) in pairs(self.n).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let neg = s.starts_with('-');
            let body = if c.is_one() || (neg && (-c).is_one()) { String::new() } else { s.trim_start_matches('-').to_string() };
            if first {
                write!(f, "{}{}Δ{}{}", if neg { "-" } else { "" }, body, i + 1, j + 1)?;
            } else {
                write!(f, "{}{}Δ{}{}", if neg { "-" } else { "+" }, body, i + 1, j + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SkewForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Intersection of the radicals of the given forms.
pub fn radical_of(field: Field, n: usize, forms: &[SkewForm]) -> Subspace {
    if forms.is_empty() {
        return Subspace::full(field, n);
    }
    let mut m = forms[0].gram();
    for f in &forms[1..] {
        m = m.vstack(&f.gram());
    }
    Subspace::span(field, n, &m.kernel())
}

fn add_term(row: &mut [FieldElem], n: usize, u: &[FieldElem], k: usize) {
    // row += θ(u, x_k) as a linear functional of θ.
    for (m, c) in u.iter().enumerate() {
        if c.is_zero() || m == k {
            continue;
        }
        if m < k {
            row[pair_index(n, m, k)] += c;
        } else {
            row[pair_index(n, k, m)] -= c;
        }
    }
}

/// Linear system whose kernel is `Z²(L, F)`.
fn cocycle_system(l: &LieAlgebra) -> Matrix {
    let n = l.dim();
    let np = n * n.saturating_sub(1) / 2;
    let f = l.field();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut row = vec![f.zero(); np];
                add_term(&mut row, n, &l.bracket_basis(i, j), k);
                add_term(&mut row, n, &l.bracket_basis(k, i), j);
                add_term(&mut row, n, &l.bracket_basis(j, k), i);
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Matrix::zeros(f, 0, np);
    }
    Matrix::from_rows(f, np, &rows)
}

pub fn is_cocycle(l: &LieAlgebra, theta: &SkewForm) -> bool {
    theta.n == l.dim() && cocycle_system(l).mul_vec(&theta.coeffs).iter().all(FieldElem::is_zero)
}

/// `ν∘[-,-]` for a functional `ν` given by its values on the basis.
pub fn coboundary(l: &LieAlgebra, nu: &[FieldElem]) -> SkewForm {
    let f = l.field();
    let coeffs = pairs(l.dim())
        .into_iter()
        .map(|(i, j)| {
            let b = l.bracket_basis(i, j);
            let mut acc = f.zero();
            for (x, y) in b.iter().zip(nu) {
                if !x.is_zero() {
                    acc += &(x * y);
                }
            }
            acc
        })
        .collect();
    SkewForm { field: f, n: l.dim(), coeffs }
}

/// `Z²`, `B²` and a canonical basis of a complement of `B²` in `Z²`.
#[derive(Debug, Clone)]
pub struct CohomologySpaces {
    pub z2: Subspace,
    pub b2: Subspace,
    pub h2_reps: Vec<SkewForm>,
}

impl CohomologySpaces {
    pub fn h2_dim(&self) -> usize {
        self.h2_reps.len()
    }
}

pub fn compute_spaces(l: &LieAlgebra) -> CohomologySpaces {
    let n = l.dim();
    let f = l.field();
    let np = n * n.saturating_sub(1) / 2;
    let z2 = Subspace::span(f, np, &cocycle_system(l).kernel());
    let cobs: Vec<Vector> = (0..n).map(|k| coboundary(l, &l.unit(k)).coeffs).collect();
    let b2 = Subspace::span(f, np, &cobs);
    let mut acc = b2.clone();
    let mut h2_reps = Vec::new();
    for v in z2.basis() {
        if !acc.contains(v) {
            acc = acc.sum(&Subspace::span(f, np, &[v.clone()]));
            h2_reps.push(SkewForm { field: f, n, coeffs: v.clone() });
        }
    }
    CohomologySpaces { z2, b2, h2_reps }
}

/// Writes `θ = sum_k c_k reps_k + ν∘[-,-]`, returning `(c, ν)`.
pub fn decompose(l: &LieAlgebra, theta: &SkewForm, reps: &[SkewForm]) -> Option<(Vector, Vector)> {
    let n = l.dim();
    let np = n * n.saturating_sub(1) / 2;
    let mut cols: Vec<Vector> = reps.iter().map(|r| r.coeffs.clone()).collect();
    cols.extend((0..n).map(|k| coboundary(l, &l.unit(k)).coeffs));
    if cols.is_empty() {
        return theta.is_zero().then(|| (Vec::new(), Vec::new()));
    }
    let m = Matrix::from_cols(l.field(), np, &cols);
    let x = m.solve(&theta.coeffs)?;
    let (c, nu) = x.split_at(reps.len());
    Some((c.to_vec(), nu.to_vec()))
}

/// `L_θ = L ⊕ F^s` with `[x + v, y + w] = [x, y] + sum_l θ_l(x, y) e_l`.
#[derive(Debug, Clone)]
pub struct CentralExtension {
    pub algebra: LieAlgebra,
    /// `(n + s) x s`, the inclusion of `F^s`.
    pub center_embedding: Matrix,
}

pub fn central_extension(l: &LieAlgebra, thetas: &[SkewForm]) -> Result<CentralExtension, CohomologyError> {
    let n = l.dim();
    let s = thetas.len();
    let f = l.field();
    for (k, t) in thetas.iter().enumerate() {
        if t.n != n || t.field != f {
            return Err(CohomologyError::DimensionMismatch(format!("form {k} lives on another algebra")));
        }
        if !is_cocycle(l, t) {
            return Err(CohomologyError::NotACocycle(k));
        }
    }
    let m = n + s;
    let mut consts = vec![vec![f.zero(); m]; m * m.saturating_sub(1) / 2];
    for (i, j) in pairs(n) {
        let mut v = l.bracket_basis(i, j);
        v.extend(thetas.iter().map(|t| t.coeffs[pair_index(n, i, j)].clone()));
        consts[pair_index(m, i, j)] = v;
    }
    let algebra = LieAlgebra::from_pair_vectors(f, m, consts)?;
    let mut emb = Matrix::zeros(f, m, s);
    for l in 0..s {
        emb.set(n + l, l, f.one());
    }
    Ok(CentralExtension { algebra, center_embedding: emb })
}

/// `C(L_θ) = F^s` iff `θ^⊥ ∩ C(L) = 0`.
pub fn extension_center_ok(l: &LieAlgebra, thetas: &[SkewForm]) -> bool {
    radical_of(l.field(), l.dim(), thetas).intersect(&l.center()).dim() == 0
}

/// True iff the forms are linearly independent modulo `B²`, which holds iff
/// `L_θ` has no central component (given the center condition).
pub fn no_central_component(l: &LieAlgebra, thetas: &[SkewForm]) -> bool {
    let spaces = compute_spaces(l);
    let vs: Vec<Vector> = thetas.iter().map(|t| t.coeffs.clone()).collect();
    let np = l.dim() * l.dim().saturating_sub(1) / 2;
    spaces.b2.sum(&Subspace::span(l.field(), np, &vs)).dim() == spaces.b2.dim() + thetas.len()
}

pub fn check_automorphism(l: &LieAlgebra, phi: &Matrix) -> Result<(), CohomologyError> {
    if !phi.is_invertible() || l.check_homomorphism(l, phi).is_err() {
        return Err(CohomologyError::NotAnAutomorphism);
    }
    Ok(())
}

/// `(φθ)(x, y) = θ(φx, φy)` for an automorphism `φ`.
pub fn aut_action(l: &LieAlgebra, phi: &Matrix, theta: &SkewForm) -> Result<SkewForm, CohomologyError> {
    check_automorphism(l, phi)?;
    Ok(theta.pullback(phi))
}

/// The isomorphism `L_θ → L_{θ + ν∘[-,-]}`, `x ↦ x + ν(x)`, `v ↦ v`.
/// `nus[l]` is the functional added to the `l`-th component.
pub fn coboundary_shift_iso(l: &LieAlgebra, thetas: &[SkewForm], nus: &[Vector]) -> Result<Isomorphism, CohomologyError> {
    let n = l.dim();
    let s = thetas.len();
    let f = l.field();
    if nus.len() != s || nus.iter().any(|v| v.len() != n) {
        return Err(CohomologyError::DimensionMismatch("one functional per component required".into()));
    }
    let shifted: Vec<SkewForm> = thetas.iter().zip(nus).map(|(t, nu)| t.add(&coboundary(l, nu))).collect();
    let src = central_extension(l, thetas)?.algebra;
    let dst = central_extension(l, &shifted)?.algebra;
    let mut m = Matrix::identity(f, n + s);
    for (k, nu) in nus.iter().enumerate() {
        for (i, x) in nu.iter().enumerate() {
            m.set(n + k, i, x.clone());
        }
    }
    Ok(Isomorphism::new(src, dst, m)?)
}

/// Builds `σ : L_θ → L_η` from `φ ∈ Aut(L)`, an invertible `s x s` matrix
/// `a` and an `n x s` matrix `beta`:
/// `σ(x_i) = φ(x_i) + sum_l β_il e_l`, `σ(e_i) = sum_j a_ji e_j`.
/// Requires `η_l(φx_i, φx_j) = sum_k a_lk θ_k(x_i, x_j) + sum_k c_ij^k β_kl`.
pub fn assemble_iso(
    l: &LieAlgebra,
    thetas: &[SkewForm],
    etas: &[SkewForm],
    phi: &Matrix,
    a: &Matrix,
    beta: &Matrix,
) -> Result<Isomorphism, CohomologyError> {
    check_automorphism(l, phi)?;
    assemble_between(l, thetas, l, etas, phi, a, beta)
}

/// [`assemble_iso`] for an isomorphism `φ : L → M` between different bases,
/// giving `L_θ → M_η`.
pub fn assemble_between(
    l: &LieAlgebra,
    thetas: &[SkewForm],
    m: &LieAlgebra,
    etas: &[SkewForm],
    phi: &Matrix,
    a: &Matrix,
    beta: &Matrix,
) -> Result<Isomorphism, CohomologyError> {
    let n = l.dim();
    let s = thetas.len();
    let f = l.field();
    if m.dim() != n || etas.len() != s || a.rows() != s || a.cols() != s || beta.rows() != n || beta.cols() != s {
        return Err(CohomologyError::DimensionMismatch("assembly data has the wrong shape".into()));
    }
    if !phi.is_invertible() || l.check_homomorphism(m, phi).is_err() {
        return Err(CohomologyError::NotAnAutomorphism);
    }
    let imgs = phi.col_vectors();
    for (i, j) in pairs(n) {
        let br = l.bracket_basis(i, j);
        for li in 0..s {
            let lhs = etas[li].eval(&imgs[i], &imgs[j]);
            let mut rhs = f.zero();
            for k in 0..s {
                rhs += &(a.get(li, k) * &thetas[k].coeffs[pair_index(n, i, j)]);
            }
            for (k, c) in br.iter().enumerate() {
                if !c.is_zero() {
                    rhs += &(c * beta.get(k, li));
                }
            }
            if lhs != rhs {
                return Err(CohomologyError::AssemblyMismatch { l: li, i, j });
            }
        }
    }
    let mut mat = Matrix::zeros(f, n + s, n + s);
    for i in 0..n {
        for r in 0..n {
            mat.set(r, i, phi.get(r, i).clone());
        }
        for li in 0..s {
            mat.set(n + li, i, beta.get(i, li).clone());
        }
    }
    for i in 0..s {
        for j in 0..s {
            mat.set(n + j, n + i, a.get(j, i).clone());
        }
    }
    let src = central_extension(l, thetas)?.algebra;
    let dst = central_extension(m, etas)?.algebra;
    Ok(Isomorphism::new(src, dst, mat)?)
}

/// A presentation of `K` as a central extension of `K / V` for a central
/// subspace `V`.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub quotient: Quotient,
    pub thetas: Vec<SkewForm>,
    /// `K → L_θ`.
    pub iso: Isomorphism,
}

/// Cocycles `θ(x, y) = [σx, σy] − σ[x, y]` in the echelon basis of `V`.
pub fn split_central(k: &LieAlgebra, v: &Subspace) -> Result<Splitting, CohomologyError> {
    if !k.center().contains_subspace(v) {
        return Err(CohomologyError::NotCentral);
    }
    let quotient = k.quotient(v)?;
    let l = &quotient.algebra;
    let q = l.dim();
    let sec = quotient.section.col_vectors();
    let mut vals: Vec<Vec<FieldElem>> = vec![Vec::new(); v.dim()];
    for (i, j) in pairs(q) {
        let lhs = k.bracket(&sec[i], &sec[j]);
        let rhs = quotient.section.mul_vec(&l.bracket_basis(i, j));
        let diff: Vector = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
        let coords = v.coordinates(&diff).ok_or(CohomologyError::NotCentral)?;
        for (t, c) in coords.into_iter().enumerate() {
            vals[t].push(c);
        }
    }
    let thetas: Vec<SkewForm> = vals.into_iter().map(|c| SkewForm { field: k.field(), n: q, coeffs: c }).collect();
    let ext = central_extension(l, &thetas)?;
    let mut cols = sec;
    cols.extend(v.basis().iter().cloned());
    let m = Matrix::from_cols(k.field(), k.dim(), &cols);
    let iso = Isomorphism::new(ext.algebra, k.clone(), m)?.inverse();
    Ok(Splitting { quotient, thetas, iso })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn alg(dim: usize, e: &[(usize, usize, usize, i64)]) -> LieAlgebra {
        LieAlgebra::from_sparse(q(), dim, e).unwrap()
    }

    fn d(n: usize, t: &[(usize, usize, i64)]) -> SkewForm {
        SkewForm::from_deltas(q(), n, t)
    }

    #[test]
    fn spaces_of_small_algebras() {
        let l32 = alg(3, &[(1, 2, 3, 1)]);
        let sp = compute_spaces(&l32);
        assert_eq!((sp.z2.dim(), sp.b2.dim(), sp.h2_dim()), (3, 1, 2));
        assert_eq!(sp.h2_reps, vec![d(3, &[(1, 3, 1)]), d(3, &[(2, 3, 1)])]);
        let sp = compute_spaces(&LieAlgebra::abelian(q(), 4));
        assert_eq!((sp.z2.dim(), sp.b2.dim()), (6, 0));
        let l43 = alg(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
        assert_eq!(compute_spaces(&l43).h2_reps, vec![d(4, &[(1, 4, 1)]), d(4, &[(2, 3, 1)])]);
    }

    #[test]
    fn radicals() {
        let t = d(3, &[(1, 2, 2), (1, 3, 3), (2, 3, 5)]);
        let v: Vector = [5, -3, 2].iter().map(|&x| q().from_i64(x)).collect();
        assert_eq!(t.radical(), Subspace::span(q(), 3, &[v]));
        assert_eq!(SkewForm::zero(q(), 3).radical().dim(), 3);
        let l43 = alg(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
        assert!(extension_center_ok(&l43, &[d(4, &[(1, 4, 1), (2, 3, 7)])]));
        assert!(!extension_center_ok(&l43, &[d(4, &[(2, 3, 1)])]));
    }

    #[test]
    fn extensions() {
        let l31 = LieAlgebra::abelian(q(), 3);
        let k = central_extension(&l31, &[d(3, &[(1, 2, 1)]), d(3, &[(1, 3, 1)]), d(3, &[(2, 3, 1)])]).unwrap();
        assert_eq!(k.algebra, alg(6, &[(1, 2, 4, 1), (1, 3, 5, 1), (2, 3, 6, 1)]));
        let l32 = alg(3, &[(1, 2, 3, 1)]);
        let k = central_extension(&l32, &[d(3, &[(1, 3, 1)]), d(3, &[(2, 3, 1)])]).unwrap();
        assert_eq!(k.algebra, alg(5, &[(1, 2, 3, 1), (1, 3, 4, 1), (2, 3, 5, 1)]));
        let k = central_extension(&l32, &[SkewForm::zero(q(), 3)]).unwrap();
        assert_eq!(k.algebra, l32.direct_sum(&LieAlgebra::abelian(q(), 1)).unwrap());
        let l43 = alg(4, &[(1, 2, 3, 1), (1, 3, 4, 1)]);
        assert_eq!(central_extension(&l43, &[d(4, &[(2, 4, 1)])]).unwrap_err(), CohomologyError::NotACocycle(0));
    }

    #[test]
    fn splitting_recovers_cocycles() {
        let l42 = alg(4, &[(1, 2, 3, 1)]);
        let th = vec![d(4, &[(1, 3, 1), (1, 4, 1), (2, 4, 2)]), d(4, &[(1, 2, 1), (1, 3, 1), (2, 3, 1), (2, 4, 1)])];
        let k = central_extension(&l42, &th).unwrap().algebra;
        let sp = split_central(&k, &k.center()).unwrap();
        assert_eq!(sp.quotient.algebra, l42);
        assert_eq!(sp.thetas, th);
    }

    #[test]
    fn assembly_and_shift() {
        let l32 = alg(3, &[(1, 2, 3, 1)]);
        let th = vec![d(3, &[(1, 3, 1)])];
        let nu = vec![vec![q().from_i64(2), q().zero(), q().from_i64(1)]];
        let iso = coboundary_shift_iso(&l32, &th, &nu).unwrap();
        assert_eq!(iso.target(), &central_extension(&l32, &[d(3, &[(1, 2, 1), (1, 3, 1)])]).unwrap().algebra);
        let phi = Matrix::diagonal(q(), &[q().from_i64(2), q().one(), q().from_i64(2)]);
        let eta = vec![th[0].pullback(&phi.inverse().unwrap())];
        let a = Matrix::identity(q(), 1);
        let b = Matrix::zeros(q(), 3, 1);
        assemble_iso(&l32, &th, &eta, &phi, &a, &b).unwrap();
        let err = assemble_iso(&l32, &th, &th, &phi, &a, &b).unwrap_err();
        assert!(matches!(err, CohomologyError::AssemblyMismatch { .. }));
    }

    #[test]
    fn decomposition() {
        let l32 = alg(3, &[(1, 2, 3, 1)]);
        let reps = compute_spaces(&l32).h2_reps;
        let t = d(3, &[(1, 2, 4), (1, 3, 2), (2, 3, -1)]);
        let (c, nu) = decompose(&l32, &t, &reps).unwrap();
        assert_eq!(c, vec![q().from_i64(2), q().from_i64(-1)]);
        assert_eq!(nu[2], q().from_i64(4));
        assert!(no_central_component(&l32, &reps));
        assert!(!no_central_component(&l32, &[d(3, &[(1, 2, 1)])]));
    }
}
