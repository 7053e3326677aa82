//! The classification lists of nilpotent Lie algebras of dimension at most 6.
//!
//! Entries `L_{n,k}` with `k` at most the number of classes in dimension
//! `n - 1` are the direct sums `L_{n-1,k} ⊕ F`; the remaining entries have no
//! central component and are described as central extensions of their
//! quotient by the centre. The four families `L_{6,19}`, `L_{6,21}`,
//! `L_{6,22}` and `L_{6,24}` carry a parameter that only matters up to
//! multiplication by nonzero squares.

use std::fmt;

use thiserror::Error;

use crate::cohomology::{central_extension, SkewForm};
use crate::field::{Field, FieldElem, FieldError};
use crate::liealg::{Isomorphism, LieAlgebra, LieError};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("no catalog entry {0}")]
    BadId(String),
    #[error("fields of characteristic 2 are not supported")]
    Char2Field,
    #[error("the catalog covers dimensions 1 to 6, got {0}")]
    BadDimension(usize),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Lie(#[from] LieError),
}

pub const MAX_DIM: usize = 6;

/// Number of indices `k` in dimension `n` (parametric families count once).
pub fn family_count(dim: usize) -> usize {
    [0, 1, 1, 2, 3, 9, 26][dim]
}

pub fn is_parametric(dim: usize, index: usize) -> bool {
    dim == 6 && matches!(index, 19 | 21 | 22 | 24)
}

/// Identifier of a catalog entry. The parameter is stored as its canonical
/// square-class representative (or 0).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CatalogId {
    field: Field,
    dim: usize,
    index: usize,
    param: Option<FieldElem>,
}

impl CatalogId {
    pub fn new(field: Field, dim: usize, index: usize, param: Option<FieldElem>) -> Result<Self, CatalogError> {
        let bad = || CatalogError::BadId(format!("L{dim}_{index}"));
        if !(1..=MAX_DIM).contains(&dim) || index == 0 || index > family_count(dim) {
            return Err(bad());
        }
        let param = match (is_parametric(dim, index), param) {
            (true, Some(p)) => {
                if p.field() != field {
                    return Err(CatalogError::Field(FieldError::MixedFields));
                }
                Some(if p.is_zero() { p } else { p.square_class_rep()? })
            }
            (false, None) => None,
            _ => return Err(bad()),
        };
        Ok(CatalogId { field, dim, index, param })
    }

    pub fn plain(field: Field, dim: usize, index: usize) -> Result<Self, CatalogError> {
        Self::new(field, dim, index, None)
    }

    pub fn with_param(field: Field, dim: usize, index: usize, param: FieldElem) -> Result<Self, CatalogError> {
        Self::new(field, dim, index, Some(param))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn param(&self) -> Option<&FieldElem> {
        self.param.as_ref()
    }

    /// Parses `L6_24(eps=-1)` or `L5_7`.
    pub fn parse(s: &str, field: Field) -> Result<Self, CatalogError> {
        let bad = || CatalogError::BadId(s.to_string());
        let rest = s.trim().strip_prefix('L').ok_or_else(bad)?;
        let (head, param) = match rest.split_once('(') {
            Some((h, p)) => {
                let p = p.strip_suffix(')').and_then(|p| p.strip_prefix("eps=")).ok_or_else(bad)?;
                (h, Some(field.parse_elem(p)?))
            }
            None => (rest, None),
        };
        let (d, k) = head.split_once('_').ok_or_else(bad)?;
        let dim: usize = d.parse().map_err(|_| bad())?;
        let index: usize = k.parse().map_err(|_| bad())?;
        Self::new(field, dim, index, param)
    }
}

impl fmt::Display for CatalogId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}_{}", self.dim, self.index)?;
        if let Some(p) = &self.param {
            write!(f, "(eps={p})")?;
        }
        Ok(())
    }
}

/// Equality of classes: same family and, for parametric families, the same
/// square class (0 only matching 0).
pub fn same_id(a: &CatalogId, b: &CatalogId) -> bool {
    if (a.field, a.dim, a.index) != (b.field, b.dim, b.index) {
        return false;
    }
    match (&a.param, &b.param) {
        (None, None) => true,
        (Some(x), Some(y)) if x.is_zero() || y.is_zero() => x.is_zero() && y.is_zero(),
        (Some(x), Some(y)) => x.same_square_class(y).unwrap_or(false),
        _ => false,
    }
}

/// How an entry arises.
#[derive(Debug, Clone)]
pub enum Definition {
    /// `L_{1,1}`.
    Line,
    /// `core ⊕ F^abelian_dim`; `core` is `None` for abelian algebras.
    DirectSum { core: Option<CatalogId>, abelian_dim: usize },
    /// A central extension of `quotient` by the given cocycles. When
    /// `presentation` is present it maps `quotient_θ` onto the listed table.
    Extension { quotient: CatalogId, cocycles: Vec<SkewForm>, presentation: Option<Matrix> },
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: CatalogId,
    pub algebra: LieAlgebra,
    pub definition: Definition,
}

type Deltas = &'static [(usize, usize, i64)];

/// Cocycles of the non-parametric extension entries.
fn fixed_extension(dim: usize, index: usize) -> Option<((usize, usize), &'static [Deltas])> {
    Some(match (dim, index) {
        (3, 2) => ((2, 1), &[&[(1, 2, 1)]]),
        (4, 3) => ((3, 2), &[&[(1, 3, 1)]]),
        (5, 4) => ((4, 1), &[&[(1, 2, 1), (3, 4, 1)]]),
        (5, 5) => ((4, 2), &[&[(1, 3, 1), (2, 4, 1)]]),
        (5, 6) => ((4, 3), &[&[(1, 4, 1), (2, 3, 1)]]),
        (5, 7) => ((4, 3), &[&[(1, 4, 1)]]),
        (5, 8) => ((3, 1), &[&[(1, 2, 1)], &[(1, 3, 1)]]),
        (5, 9) => ((3, 2), &[&[(1, 3, 1)], &[(2, 3, 1)]]),
        (6, 10) => ((5, 2), &[&[(1, 3, 1), (4, 5, 1)]]),
        (6, 11) => ((5, 3), &[&[(1, 4, 1), (2, 3, 1), (2, 5, 1)]]),
        (6, 12) => ((5, 3), &[&[(1, 4, 1), (2, 5, 1)]]),
        (6, 13) => ((5, 5), &[&[(1, 5, 1), (3, 4, 1)]]),
        (6, 14) => ((5, 6), &[&[(2, 5, 1), (3, 4, -1)]]),
        (6, 15) => ((5, 6), &[&[(1, 5, 1), (2, 4, 1)]]),
        (6, 16) => ((5, 7), &[&[(2, 5, 1), (3, 4, -1)]]),
        (6, 17) => ((5, 7), &[&[(1, 5, 1), (2, 3, 1)]]),
        (6, 18) => ((5, 7), &[&[(1, 5, 1)]]),
        (6, 20) => ((5, 8), &[&[(1, 5, 1), (2, 4, 1)]]),
        (6, 23) => ((4, 2), &[&[(1, 3, 1), (2, 4, 1)], &[(1, 4, 1)]]),
        (6, 25) => ((4, 2), &[&[(1, 3, 1)], &[(1, 4, 1)]]),
        (6, 26) => ((3, 1), &[&[(1, 2, 1)], &[(1, 3, 1)], &[(2, 3, 1)]]),
        _ => return None,
    })
}

fn forms(field: Field, n: usize, ds: &[Deltas]) -> Vec<SkewForm> {
    ds.iter().map(|d| SkewForm::from_deltas(field, n, d)).collect()
}

/// `sum c Δ_ij` with field-element coefficients.
fn form_with(field: Field, n: usize, terms: &[(usize, usize, FieldElem)]) -> SkewForm {
    let mut f = SkewForm::zero(field, n);
    for (i, j, c) in terms {
        let mut single = SkewForm::from_deltas(field, n, &[(*i, *j, 1)]);
        single = single.scale(c);
        f = f.add(&single);
    }
    f
}

/// Quotient, cocycles and optional presentation of a parametric family
/// member for an arbitrary (not necessarily canonical) parameter.
pub fn family_extension(field: Field, index: usize, eps: &FieldElem) -> (CatalogId, Vec<SkewForm>, Option<Matrix>) {
    let one = field.one();
    let id = |d, k| CatalogId::plain(field, d, k).unwrap();
    match index {
        19 if eps.is_zero() => {
            let pres = Matrix::from_i64(
                field,
                &[
                    &[0, 1, 0, 0, 0, 0],
                    &[1, 0, 0, 0, 0, 0],
                    &[0, 0, 0, 1, 0, 0],
                    &[0, 0, -1, 0, 0, 0],
                    &[0, 0, 0, 0, 0, 1],
                    &[0, 0, 0, 0, -1, 0],
                ],
            );
            (id(4, 2), forms(field, 4, &[&[(1, 3, 1)], &[(2, 4, 1)]]), Some(pres))
        }
        19 => (id(5, 8), vec![form_with(field, 5, &[(2, 4, one), (3, 5, eps.clone())])], None),
        21 if eps.is_zero() => (id(4, 3), forms(field, 4, &[&[(2, 3, 1)], &[(1, 4, 1)]]), None),
        21 => (id(5, 9), vec![form_with(field, 5, &[(1, 4, one), (2, 5, eps.clone())])], None),
        22 => (
            id(4, 1),
            vec![
                SkewForm::from_deltas(field, 4, &[(1, 2, 1), (3, 4, 1)]),
                form_with(field, 4, &[(1, 3, one), (2, 4, eps.clone())]),
            ],
            None,
        ),
        24 => (
            id(4, 2),
            vec![
                SkewForm::from_deltas(field, 4, &[(1, 3, 1), (2, 4, 1)]),
                form_with(field, 4, &[(1, 4, eps.clone()), (2, 3, one)]),
            ],
            None,
        ),
        _ => unreachable!("not a parametric family"),
    }
}

/// Table of a parametric family member for an arbitrary parameter value.
pub fn family_algebra(field: Field, index: usize, eps: &FieldElem) -> Result<LieAlgebra, CatalogError> {
    if !is_parametric(6, index) {
        return Err(CatalogError::BadId(format!("L6_{index}")));
    }
    let (q, cocycles, pres) = family_extension(field, index, eps);
    let ext = central_extension(&instantiate(&q)?, &cocycles).expect("catalog cocycles are cocycles").algebra;
    Ok(match pres {
        Some(p) => ext.change_basis(&p.inverse().expect("invertible presentation"))?,
        None => ext,
    })
}

fn check_field(field: Field) -> Result<(), CatalogError> {
    if field.characteristic() == 2 {
        return Err(CatalogError::Char2Field);
    }
    Ok(())
}

pub fn entry(id: &CatalogId) -> Result<CatalogEntry, CatalogError> {
    let field = id.field;
    check_field(field)?;
    let (n, k) = (id.dim, id.index);
    if n == 1 {
        return Ok(CatalogEntry { id: id.clone(), algebra: LieAlgebra::abelian(field, 1), definition: Definition::Line });
    }
    if k <= family_count(n - 1) {
        let inner = entry(&CatalogId::plain(field, n - 1, k)?)?;
        let (core, abelian_dim) = match inner.definition {
            Definition::Line => (None, 2),
            Definition::DirectSum { core, abelian_dim } => (core, abelian_dim + 1),
            Definition::Extension { .. } => (Some(inner.id.clone()), 1),
        };
        let algebra = inner.algebra.direct_sum(&LieAlgebra::abelian(field, 1))?;
        return Ok(CatalogEntry { id: id.clone(), algebra, definition: Definition::DirectSum { core, abelian_dim } });
    }
    let (quotient, cocycles, presentation) = if let Some(eps) = &id.param {
        family_extension(field, k, eps)
    } else {
        let ((qd, qk), ds) = fixed_extension(n, k).ok_or_else(|| CatalogError::BadId(id.to_string()))?;
        (CatalogId::plain(field, qd, qk)?, forms(field, qd, ds), None)
    };
    let ext = central_extension(&instantiate(&quotient)?, &cocycles).expect("catalog cocycles are cocycles").algebra;
    let algebra = match &presentation {
        Some(p) => ext.change_basis(&p.inverse().expect("invertible presentation"))?,
        None => ext,
    };
    Ok(CatalogEntry { id: id.clone(), algebra, definition: Definition::Extension { quotient, cocycles, presentation } })
}

pub fn instantiate(id: &CatalogId) -> Result<LieAlgebra, CatalogError> {
    Ok(entry(id)?.algebra)
}

/// Class representatives of the parameter: `0` followed by the square-class
/// representatives (for the rationals, squarefree integers up to `bound` in
/// absolute value).
pub fn param_reps(field: Field, bound: u64) -> Vec<FieldElem> {
    let mut v = vec![field.zero()];
    v.extend(field.square_class_reps(bound));
    v
}

/// All ids of dimension `dim`; over the rationals the parametric families are
/// truncated by `bound` (see [`param_reps`]).
pub fn ids_over(field: Field, dim: usize, bound: u64) -> Result<Vec<CatalogId>, CatalogError> {
    check_field(field)?;
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(CatalogError::BadDimension(dim));
    }
    let mut out = Vec::new();
    for k in 1..=family_count(dim) {
        if is_parametric(dim, k) {
            for p in param_reps(field, bound) {
                out.push(CatalogId::with_param(field, dim, k, p)?);
            }
        } else {
            out.push(CatalogId::plain(field, dim, k)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Count {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

/// Number of isomorphism classes; in dimension 6 this is `26 + 4s` with `s`
/// the number of square classes.
pub fn count(field: Field, dim: usize) -> Result<Count, CatalogError> {
    check_field(field)?;
    if !(1..=MAX_DIM).contains(&dim) {
        return Err(CatalogError::BadDimension(dim));
    }
    if dim < 6 {
        return Ok(Count::Finite(family_count(dim)));
    }
    Ok(match field.square_class_count() {
        Some(s) => Count::Finite(26 + 4 * s),
        None => Count::Infinite,
    })
}

/// Multipliers `c` with `y_i = c_i x_i` turning the table of parameter `ε`
/// into the table of parameter `α²ε`.
fn scaling_multipliers(index: usize, alpha: &FieldElem) -> Option<Vec<FieldElem>> {
    let one = alpha.one_like();
    let a = alpha.clone();
    let a2 = alpha * alpha;
    let ai = alpha.inv().ok()?;
    Some(match index {
        19 => vec![one.clone(), one.clone(), a.clone(), one.clone(), a, one],
        21 => vec![one, a.clone(), a.clone(), a.clone(), a2, a],
        22 => vec![ai.clone(), one.clone(), ai.clone(), one, ai.clone(), &ai * &ai],
        24 => vec![a.clone(), one, a.clone(), a2.clone(), a2, a],
        _ => return None,
    })
}

/// The isomorphism `L_{6,k}(ε) → L_{6,k}(α²ε)` for raw parameter values.
pub fn scaling_iso(index: usize, eps: &FieldElem, alpha: &FieldElem) -> Result<Isomorphism, CatalogError> {
    let field = eps.field();
    let c = scaling_multipliers(index, alpha).ok_or_else(|| CatalogError::BadId(format!("L6_{index}")))?;
    let inv: Vec<FieldElem> = c.iter().map(|x| x.inv()).collect::<Result<_, _>>()?;
    let src = family_algebra(field, index, eps)?;
    let dst = family_algebra(field, index, &(&(alpha * alpha) * eps))?;
    Ok(Isomorphism::new(src, dst, Matrix::diagonal(field, &inv))?)
}

/// The isomorphism from a raw family member onto its canonical catalog
/// representative, together with that representative's id.
pub fn canonicalize_param(index: usize, eps: &FieldElem) -> Result<(CatalogId, Isomorphism), CatalogError> {
    let field = eps.field();
    let id = CatalogId::with_param(field, 6, index, eps.clone())?;
    let rep = id.param().unwrap().clone();
    let alpha = if eps.is_zero() {
        field.one()
    } else {
        (&rep / eps).sqrt().ok_or_else(|| CatalogError::BadId(format!("no square root for {rep}/{eps}")))?
    };
    Ok((id, scaling_iso(index, eps, &alpha)?))
}
