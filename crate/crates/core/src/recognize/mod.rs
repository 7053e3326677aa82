//! Recognition: identifies a nilpotent Lie algebra of dimension at most 6 with
//! a catalog member and returns an explicit isomorphism.
//!
//! The algebra is stripped of its abelian direct summand, split as a central
//! extension of `K / C(K)`, the quotient is recognized recursively, the
//! cocycles are transported to the catalog quotient and then normalized
//! case by case.

mod cases;
mod templates;

use std::fmt;

use thiserror::Error;

use crate::catalog::{canonicalize_param, entry, family_extension, instantiate, CatalogError, CatalogId, Definition, MAX_DIM};
use crate::cohomology::{
    assemble_between, assemble_iso, central_extension, coboundary_shift_iso, decompose, split_central, CohomologyError,
    SkewForm,
};
use crate::field::{Field, FieldElem, FieldError};
use crate::liealg::{Isomorphism, LieAlgebra, LieError};
use crate::linalg::{LinalgError, Matrix, Vector};

pub use templates::{aut_template, AutTemplate};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognizeError {
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("dimension {0} exceeds the supported maximum of {MAX_DIM}")]
    DimTooLarge(usize),
    #[error("characteristic 2 is not supported")]
    Char2Field,
    #[error("zero-dimensional algebra")]
    ZeroDimensional,
    #[error("bracket table is not a Lie algebra: {0}")]
    NotALieAlgebra(String),
    #[error("both arguments are zero")]
    BothZero,
    #[error("determinant must be nonzero")]
    ZeroDeterminant,
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolated(String),
}

macro_rules! internal_from {
    ($($t:ty),*) => {$(
        impl From<$t> for RecognizeError {
            fn from(e: $t) -> Self {
                RecognizeError::InternalInvariantViolated(e.to_string())
            }
        }
    )*};
}

internal_from!(LieError, CohomologyError, CatalogError, LinalgError, FieldError);

fn bug(msg: impl Into<String>) -> RecognizeError {
    RecognizeError::InternalInvariantViolated(msg.into())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Splitting off the abelian direct summand.
    StripCentralComponent,
    /// `K → L_θ` for `L = K / C(K)`.
    CentralSplit,
    /// Transport along the isomorphism of the quotient onto its catalog form.
    QuotientRecognize,
    /// Automorphism of the quotient bringing a form to `Δ12 + Δ34 + ...`.
    SkewCanonical,
    /// Automorphism of the quotient acting on the cocycles.
    AutApply,
    /// Linear change of basis of the centre.
    CenterBaseChange,
    /// `x ↦ x + ν(x)`.
    CoboundaryShift,
    /// An explicit isomorphism between two extensions of the same quotient.
    LiteralIso,
    /// Passage from the defining extension to the listed table.
    Presentation,
    /// Rescaling a family parameter into its square-class representative.
    ScaleParam,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One verified map of the recognition chain. `data` holds the map's defining
/// matrix: the automorphism `(a_ij)`, the centre matrix `(a_lk)`, the
/// functionals `(β_kl)` as columns, or the full map otherwise.
#[derive(Debug, Clone)]
pub struct NormalizationStep {
    pub kind: StepKind,
    pub note: String,
    pub data: Matrix,
    pub iso: Isomorphism,
}

#[derive(Debug, Clone)]
pub struct RecognitionResult {
    pub id: CatalogId,
    /// Input algebra → `instantiate(id)`.
    pub iso: Isomorphism,
    pub trace: Vec<NormalizationStep>,
}

/// Returns `(P, r)` with `P` invertible and the pullback of `θ` through `P`
/// equal to `Δ12 + Δ34 + ... + Δ_{r-1,r}`.
pub fn skew_canonical_basis(theta: &SkewForm) -> (Matrix, usize) {
    let f = theta.field();
    let n = theta.n();
    let mut pool: Vec<Vector> = (0..n).map(|k| unit(f, n, k)).collect();
    let mut out: Vec<Vector> = Vec::new();
    loop {
        let found = (0..pool.len()).find_map(|i| {
            (0..pool.len()).find(|&j| j != i && !theta.eval(&pool[i], &pool[j]).is_zero()).map(|j| (i, j))
        });
        let Some((i, j)) = found else { break };
        let val = theta.eval(&pool[i], &pool[j]);
        let inv = val.inv().expect("nonzero");
        let u: Vector = pool[i].iter().map(|x| x * &inv).collect();
        let v = pool[j].clone();
        let rest: Vec<Vector> = pool
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i && k != j)
            .map(|(_, w)| {
                let tv = theta.eval(w, &v);
                let tu = theta.eval(w, &u);
                w.iter().zip(u.iter().zip(&v)).map(|(wk, (uk, vk))| &(wk - &(&tv * uk)) + &(&tu * vk)).collect()
            })
            .collect();
        out.push(u);
        out.push(v);
        pool = rest;
    }
    let r = out.len();
    out.extend(pool);
    (Matrix::from_cols(f, n, &out), r)
}

/// `(a, b, c, d)` with `ad - bc = δ` and `(a b; c d)(x; y) = (1; 0)`.
pub fn clear_second_coordinate(
    x: &FieldElem,
    y: &FieldElem,
    delta: &FieldElem,
) -> Result<(FieldElem, FieldElem, FieldElem, FieldElem), RecognizeError> {
    if delta.is_zero() {
        return Err(RecognizeError::ZeroDeterminant);
    }
    if y.is_zero() {
        if x.is_zero() {
            return Err(RecognizeError::BothZero);
        }
        return Ok((x.inv()?, x.zero_like(), x.zero_like(), x * delta));
    }
    let a = -&(y * delta);
    let b = &(&x.one_like() + &(&(x * y) * delta)) / y;
    Ok((a.clone(), b, a, x * delta))
}

fn unit(f: Field, n: usize, k: usize) -> Vector {
    let mut v = vec![f.zero(); n];
    v[k] = f.one();
    v
}

/// The map with `x_i ↦ sum c y_k` given as 1-based `(k, c)` lists.
pub(crate) fn map_from(f: Field, images: &[Vec<(usize, FieldElem)>]) -> Matrix {
    let n = images.len();
    let cols: Vec<Vector> = images
        .iter()
        .map(|terms| {
            let mut v = vec![f.zero(); n];
            for (k, c) in terms {
                v[k - 1] += c;
            }
            v
        })
        .collect();
    Matrix::from_cols(f, n, &cols)
}

/// What a normalizer ends at.
pub(crate) enum Target {
    Fixed(usize, usize),
    Family(usize, FieldElem),
}

/// Cocycles on a catalog quotient together with the steps applied so far.
pub(crate) struct State {
    pub(crate) quotient: CatalogId,
    pub(crate) base: LieAlgebra,
    pub(crate) reps: Vec<SkewForm>,
    pub(crate) thetas: Vec<SkewForm>,
    pub(crate) steps: Vec<NormalizationStep>,
}

impl State {
    pub(crate) fn field(&self) -> Field {
        self.base.field()
    }

    fn ext(&self) -> Result<LieAlgebra, RecognizeError> {
        Ok(central_extension(&self.base, &self.thetas)?.algebra)
    }

    /// Coordinates of `θ_i` in the case representatives, modulo coboundaries.
    pub(crate) fn co(&self, i: usize) -> Result<Vector, RecognizeError> {
        decompose(&self.base, &self.thetas[i], &self.reps)
            .map(|(c, _)| c)
            .ok_or_else(|| bug(format!("cocycle {} outside the span of the representatives", self.thetas[i])))
    }

    fn push(&mut self, kind: StepKind, note: String, data: Matrix, iso: Isomorphism, thetas: Vec<SkewForm>) {
        self.thetas = thetas;
        self.steps.push(NormalizationStep { kind, note, data, iso });
    }

    fn act(&mut self, kind: StepKind, phi: Matrix, note: String) -> Result<(), RecognizeError> {
        if phi.is_identity() {
            return Ok(());
        }
        let f = self.field();
        let s = self.thetas.len();
        let new: Vec<SkewForm> = self.thetas.iter().map(|t| t.pullback(&phi)).collect();
        let iso = assemble_iso(
            &self.base,
            &self.thetas,
            &new,
            &phi.inverse()?,
            &Matrix::identity(f, s),
            &Matrix::zeros(f, self.base.dim(), s),
        )?;
        self.push(kind, note, phi, iso, new);
        Ok(())
    }

    /// Applies the automorphism of the template with the given entries.
    pub(crate) fn aut(&mut self, values: &[((usize, usize), FieldElem)]) -> Result<(), RecognizeError> {
        let t = aut_template(&self.quotient)?;
        let phi = t.element(values)?;
        let note = values.iter().map(|((i, j), v)| format!("a{i}{j}={v}")).collect::<Vec<_>>().join(", ");
        self.act(StepKind::AutApply, phi, note)
    }

    pub(crate) fn aut_matrix(&mut self, phi: Matrix, note: &str) -> Result<(), RecognizeError> {
        self.act(StepKind::AutApply, phi, note.to_string())
    }

    /// Brings `θ_i` to `Δ12 + Δ34 + ...`; the quotient must be abelian.
    pub(crate) fn skew_canonical(&mut self, i: usize) -> Result<usize, RecognizeError> {
        let (p, r) = skew_canonical_basis(&self.thetas[i]);
        self.act(StepKind::SkewCanonical, p, format!("θ{} in canonical form", i + 1))?;
        Ok(r)
    }

    /// `θ'_i = sum_j a_ij θ_j`.
    pub(crate) fn combine(&mut self, a: Matrix, note: String) -> Result<(), RecognizeError> {
        if a.is_identity() {
            return Ok(());
        }
        let f = self.field();
        let n = self.base.dim();
        let s = self.thetas.len();
        let new: Vec<SkewForm> = (0..s).map(|i| SkewForm::combination(f, n, &a.row(i), &self.thetas)).collect();
        let iso = assemble_iso(&self.base, &self.thetas, &new, &Matrix::identity(f, n), &a, &Matrix::zeros(f, n, s))?;
        self.push(StepKind::CenterBaseChange, note, a, iso, new);
        Ok(())
    }

    pub(crate) fn scale(&mut self, i: usize, c: &FieldElem) -> Result<(), RecognizeError> {
        let f = self.field();
        let mut d = vec![f.one(); self.thetas.len()];
        d[i] = c.clone();
        self.combine(Matrix::diagonal(f, &d), format!("θ{} *= {c}", i + 1))
    }

    /// Divides `θ_i` by its `k`-th coordinate.
    pub(crate) fn normalize(&mut self, i: usize, k: usize) -> Result<(), RecognizeError> {
        let c = self.co(i)?[k].clone();
        if c.is_zero() {
            return Err(bug(format!("cannot normalize θ{} by a zero coordinate", i + 1)));
        }
        self.scale(i, &c.inv()?)
    }

    /// `θ_i += c θ_j`.
    pub(crate) fn add_multiple(&mut self, i: usize, j: usize, c: &FieldElem) -> Result<(), RecognizeError> {
        if c.is_zero() {
            return Ok(());
        }
        let f = self.field();
        let mut a = Matrix::identity(f, self.thetas.len());
        a.set(i, j, c.clone());
        self.combine(a, format!("θ{} += ({c})θ{}", i + 1, j + 1))
    }

    pub(crate) fn swap(&mut self, i: usize, j: usize) -> Result<(), RecognizeError> {
        let s = self.thetas.len();
        let perm: Vec<usize> = (0..s).map(|k| if k == i { j } else if k == j { i } else { k }).collect();
        self.combine(Matrix::permutation(self.field(), &perm), format!("swap θ{} and θ{}", i + 1, j + 1))
    }

    /// Changes the centre basis so that the coordinate matrix of the cocycles
    /// becomes the identity; needs `s` equal to `dim H²`.
    pub(crate) fn combine_to_identity(&mut self) -> Result<(), RecognizeError> {
        let f = self.field();
        let rows: Vec<Vector> = (0..self.thetas.len()).map(|i| self.co(i)).collect::<Result<_, _>>()?;
        let m = Matrix::from_rows(f, self.reps.len(), &rows);
        let a = m.inverse().map_err(|_| bug("cocycles are dependent modulo coboundaries"))?;
        self.combine(a, "centre basis matching the representatives".into())
    }

    /// Applies an explicit isomorphism `L_θ → L_η` with `η = targets`.
    pub(crate) fn literal(&mut self, m: Matrix, targets: Vec<SkewForm>, note: &str) -> Result<(), RecognizeError> {
        self.to_reps()?;
        let src = self.ext()?;
        let dst = central_extension(&self.base, &targets)?.algebra;
        let iso = Isomorphism::new(src, dst, m.clone()).map_err(|e| bug(format!("{note}: {e}")))?;
        self.push(StepKind::LiteralIso, note.to_string(), m, iso, targets);
        Ok(())
    }

    /// Coboundary shift removing the `B²` parts of the cocycles.
    fn to_reps(&mut self) -> Result<(), RecognizeError> {
        let f = self.field();
        let n = self.base.dim();
        let mut nus = Vec::new();
        let mut new = Vec::new();
        for t in &self.thetas {
            let (c, nu) =
                decompose(&self.base, t, &self.reps).ok_or_else(|| bug("cocycle outside the representative span"))?;
            new.push(SkewForm::combination(f, n, &c, &self.reps));
            nus.push(nu.iter().map(|x| -x).collect::<Vector>());
        }
        if nus.iter().all(|nu| nu.iter().all(FieldElem::is_zero)) {
            return Ok(());
        }
        let iso = coboundary_shift_iso(&self.base, &self.thetas, &nus)?;
        if iso.target() != &central_extension(&self.base, &new)?.algebra {
            return Err(bug("coboundary shift missed the representatives"));
        }
        let data = Matrix::from_cols(f, n, &nus);
        self.push(StepKind::CoboundaryShift, "cocycles onto representatives".into(), data, iso, new);
        Ok(())
    }

    pub(crate) fn form(&self, terms: &[(usize, usize, FieldElem)]) -> SkewForm {
        let f = self.field();
        let n = self.base.dim();
        let mut acc = SkewForm::zero(f, n);
        for (i, j, c) in terms {
            acc = acc.add(&SkewForm::from_deltas(f, n, &[(*i, *j, 1)]).scale(c));
        }
        acc
    }

    /// Coboundary shift onto the defining cocycles of the target, then the
    /// presentation and parameter rescaling.
    fn finish(mut self, target: Target) -> Result<(CatalogId, Vec<NormalizationStep>), RecognizeError> {
        let f = self.field();
        let (quotient, cocycles, presentation, family) = match &target {
            Target::Fixed(d, k) => {
                let e = entry(&CatalogId::plain(f, *d, *k)?)?;
                match e.definition {
                    Definition::Extension { quotient, cocycles, presentation } => (quotient, cocycles, presentation, None),
                    _ => return Err(bug(format!("{} is not an extension", e.id))),
                }
            }
            Target::Family(k, eps) => {
                let (q, c, p) = family_extension(f, *k, eps);
                (q, c, p, Some((*k, eps.clone())))
            }
        };
        if quotient != self.quotient || cocycles.len() != self.thetas.len() {
            return Err(bug(format!("normalizer ended on the wrong quotient {quotient}")));
        }
        let mut nus = Vec::new();
        for (t, c) in self.thetas.iter().zip(&cocycles) {
            let diff = c.add(&t.scale(&-f.one()));
            let (coords, nu) = decompose(&self.base, &diff, &self.reps)
                .ok_or_else(|| bug("difference to the target is not a cocycle"))?;
            if coords.iter().any(|x| !x.is_zero()) {
                return Err(bug(format!("normal form {t} differs from {c} in cohomology")));
            }
            nus.push(nu);
        }
        if nus.iter().any(|nu| nu.iter().any(|x| !x.is_zero())) {
            let iso = coboundary_shift_iso(&self.base, &self.thetas, &nus)?;
            let data = Matrix::from_cols(f, self.base.dim(), &nus);
            if iso.target() != &central_extension(&self.base, &cocycles)?.algebra {
                return Err(bug("coboundary shift missed the target"));
            }
            self.push(StepKind::CoboundaryShift, "exact defining cocycles".into(), data, iso, cocycles.clone());
        }
        let mut current = self.ext()?;
        if let Some(p) = presentation {
            let listed = current.change_basis(&p.inverse()?)?;
            let iso = Isomorphism::new(current, listed.clone(), p.clone())?;
            self.steps.push(NormalizationStep { kind: StepKind::Presentation, note: "listed table".into(), data: p, iso });
            current = listed;
        }
        let id = match family {
            None => match target {
                Target::Fixed(d, k) => CatalogId::plain(f, d, k)?,
                Target::Family(..) => unreachable!(),
            },
            Some((k, eps)) => {
                let (id, iso) = canonicalize_param(k, &eps)?;
                if iso.source() != &current {
                    return Err(bug("family table mismatch"));
                }
                if !iso.matrix().is_identity() {
                    let note = format!("ε = {eps} rescaled to {}", id.param().unwrap());
                    self.steps.push(NormalizationStep {
                        kind: StepKind::ScaleParam,
                        note,
                        data: iso.matrix().clone(),
                        iso: iso.clone(),
                    });
                }
                id
            }
        };
        Ok((id, self.steps))
    }
}

fn gate(k: &LieAlgebra) -> Result<(), RecognizeError> {
    if k.field().characteristic() == 2 {
        return Err(RecognizeError::Char2Field);
    }
    if k.dim() == 0 {
        return Err(RecognizeError::ZeroDimensional);
    }
    if k.dim() > MAX_DIM {
        return Err(RecognizeError::DimTooLarge(k.dim()));
    }
    if let Err(v) = k.validate() {
        return Err(RecognizeError::NotALieAlgebra(v.to_string()));
    }
    if !k.is_nilpotent() {
        return Err(RecognizeError::NotNilpotent);
    }
    Ok(())
}

/// Identifies `k` with a catalog member.
pub fn recognize(k: &LieAlgebra) -> Result<RecognitionResult, RecognizeError> {
    gate(k)?;
    let (id, trace) = recognize_inner(k)?;
    let mut m = Matrix::identity(k.field(), k.dim());
    for s in &trace {
        m = s.iso.matrix().mul(&m)?;
    }
    let target = instantiate(&id)?;
    let iso = Isomorphism::new(k.clone(), target, m).map_err(|e| bug(format!("composed map: {e}")))?;
    Ok(RecognitionResult { id, iso, trace })
}

fn step(kind: StepKind, note: &str, iso: Isomorphism) -> NormalizationStep {
    NormalizationStep { kind, note: note.to_string(), data: iso.matrix().clone(), iso }
}

fn recognize_inner(k: &LieAlgebra) -> Result<(CatalogId, Vec<NormalizationStep>), RecognizeError> {
    let f = k.field();
    let n = k.dim();
    let stripped = k.strip_central_component()?;
    let a = stripped.abelian_dim;
    if a == 0 {
        return recognize_core(k);
    }
    let mut trace = Vec::new();
    if !stripped.iso.matrix().is_identity() {
        trace.push(step(StepKind::StripCentralComponent, "abelian summand split off", stripped.iso.clone()));
    }
    if stripped.core.dim() == 0 {
        return Ok((CatalogId::plain(f, n, 1)?, trace));
    }
    let (core_id, core_trace) = recognize_core(&stripped.core)?;
    let line = LieAlgebra::abelian(f, a);
    for s in core_trace {
        let src = s.iso.source().direct_sum(&line)?;
        let dst = s.iso.target().direct_sum(&line)?;
        let m = Matrix::block_diag(s.iso.matrix(), &Matrix::identity(f, a));
        let iso = Isomorphism::new(src, dst, m)?;
        trace.push(NormalizationStep { kind: s.kind, note: s.note, data: s.data, iso });
    }
    Ok((CatalogId::plain(f, n, core_id.index())?, trace))
}

/// Recognition of an algebra without central component.
fn recognize_core(k: &LieAlgebra) -> Result<(CatalogId, Vec<NormalizationStep>), RecognizeError> {
    let f = k.field();
    if k.is_abelian() {
        if k.dim() != 1 {
            return Err(bug("abelian core of dimension > 1"));
        }
        return Ok((CatalogId::plain(f, 1, 1)?, Vec::new()));
    }
    let c = k.center();
    let s = c.dim();
    let split = split_central(k, &c)?;
    let l = &split.quotient.algebra;
    let sub = recognize(l)?;
    let tau = sub.iso.matrix();
    let tinv = tau.inverse()?;
    let etas: Vec<SkewForm> = split.thetas.iter().map(|t| t.pullback(&tinv)).collect();
    let base = sub.iso.target().clone();
    let transport = assemble_between(
        l,
        &split.thetas,
        &base,
        &etas,
        tau,
        &Matrix::identity(f, s),
        &Matrix::zeros(f, l.dim(), s),
    )?;
    let mut trace = Vec::new();
    if !split.iso.matrix().is_identity() {
        trace.push(step(StepKind::CentralSplit, "centre split off", split.iso.clone()));
    }
    if !tau.is_identity() {
        trace.push(NormalizationStep {
            kind: StepKind::QuotientRecognize,
            note: format!("quotient is {}", sub.id),
            data: tau.clone(),
            iso: transport,
        });
    }
    let reps = cases::representatives(&sub.id, &base);
    let mut st = State { quotient: sub.id.clone(), base, reps, thetas: etas, steps: Vec::new() };
    let target = cases::normalize(&mut st)?;
    let (id, steps) = st.finish(target)?;
    trace.extend(steps);
    Ok((id, trace))
}
