//! Verification tools independent of the recognition procedure: invariant
//! comparison, exhaustive isomorphism search over small prime fields and a
//! seeded basis-change fuzzer.
//!
//! The search picks generators of the source algebra and tries every image
//! vector of the target with the same local invariants, closing the partial
//! assignment under brackets and backtracking as soon as it stops being a
//! well-defined injective linear map.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::cohomology::compute_spaces;
use crate::field::{pow_mod, Field, FieldElem};
use crate::liealg::{Isomorphism, LieAlgebra, LieError};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("algebras live over different fields")]
    FieldMismatch,
    #[error("isomorphism search needs a prime field")]
    NotAPrimeField,
    #[error("algebras have different dimensions")]
    DimensionMismatch,
    #[error("field of order {p} is too large for exhaustive search in dimension {n}")]
    TooLarge { p: u64, n: usize },
    #[error("node budget must be positive")]
    ZeroBudget,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// Isomorphism invariants used as a cheap prefilter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InvariantVector {
    pub lcs_dims: Vec<usize>,
    pub derived_dims: Vec<usize>,
    pub center_dim: usize,
    pub center_in_derived_dim: usize,
    pub h2_dim: usize,
}

pub fn invariant_vector(l: &LieAlgebra) -> InvariantVector {
    let c = l.center();
    InvariantVector {
        lcs_dims: l.lcs_dims(),
        derived_dims: l.derived_dims(),
        center_dim: c.dim(),
        center_in_derived_dim: c.intersect(&l.derived_algebra()).dim(),
        h2_dim: compute_spaces(l).h2_dim(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoSearchConfig {
    pub max_nodes: u64,
    pub prefilter: bool,
}

impl Default for IsoSearchConfig {
    fn default() -> Self {
        IsoSearchConfig { max_nodes: 10_000_000, prefilter: true }
    }
}

/// How a search ended.
#[derive(Debug, Clone)]
pub enum IsoSearchOutcome {
    Isomorphic(Isomorphism),
    /// Proven non-isomorphic; the string names the separating argument.
    NotIsomorphic(String),
    BudgetExceeded,
}

impl IsoSearchOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoSearchOutcome::Isomorphic(_))
    }

    pub fn is_not_isomorphic(&self) -> bool {
        matches!(self, IsoSearchOutcome::NotIsomorphic(_))
    }
}

/// Largest `p^n` the search accepts.
const MAX_VECTORS: u64 = 1 << 22;

type V = Vec<u64>;

/// Structure constants reduced to machine residues.
struct Table {
    p: u64,
    n: usize,
    c: Vec<Vec<V>>,
}

impl Table {
    fn new(l: &LieAlgebra, p: u64) -> Table {
        let n = l.dim();
        let mut c = vec![vec![vec![0; n]; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            for (j, slot) in row.iter_mut().enumerate() {
                *slot = l.bracket_basis(i, j).iter().map(|x| x.residue().expect("prime field")).collect();
            }
        }
        Table { p, n, c }
    }

    fn bracket(&self, x: &[u64], y: &[u64]) -> V {
        let p = self.p;
        let mut out = vec![0; self.n];
        for (i, xi) in x.iter().enumerate() {
            if *xi == 0 {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if *yj == 0 || i == j {
                    continue;
                }
                let s = xi * yj % p;
                for (o, c) in out.iter_mut().zip(&self.c[i][j]) {
                    *o = (*o + s * c) % p;
                }
            }
        }
        out
    }

    fn decode(&self, mut idx: u64) -> V {
        let mut v = vec![0; self.n];
        for x in v.iter_mut() {
            *x = idx % self.p;
            idx /= self.p;
        }
        v
    }
}

/// Row echelon basis mod `p` with incremental insertion.
#[derive(Clone)]
struct Echelon {
    p: u64,
    rows: Vec<(V, usize)>,
}

impl Echelon {
    fn new(p: u64) -> Self {
        Echelon { p, rows: Vec::new() }
    }

    fn from(p: u64, vs: &[V]) -> Self {
        let mut e = Echelon::new(p);
        for v in vs {
            e.insert(v.clone());
        }
        e
    }

    fn reduce(&self, mut v: V) -> V {
        let p = self.p;
        for (row, piv) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * r) % p;
                }
            }
        }
        v
    }

    /// Inserts `v`; returns false if it was already in the span.
    fn insert(&mut self, v: V) -> bool {
        let v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else { return false };
        let inv = pow_mod(v[piv], self.p - 2, self.p);
        let v: V = v.iter().map(|x| x * inv % self.p).collect();
        self.rows.push((v, piv));
        true
    }

    fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }
}

fn span_dim(p: u64, vs: &[V]) -> usize {
    Echelon::from(p, vs).dim()
}

/// Characteristic subspaces and per-vector invariants of an algebra.
struct Profile {
    table: Table,
    lcs: Vec<Vec<V>>,
    ucs: Vec<Echelon>,
    lcs_ech: Vec<Echelon>,
    classes: Vec<Vec<u32>>,
    buckets: HashMap<Vec<u32>, Vec<u64>>,
}

fn basis_vectors(s: &crate::linalg::Subspace) -> Vec<V> {
    s.basis().iter().map(|v| v.iter().map(|x| x.residue().unwrap()).collect()).collect()
}

impl Profile {
    fn new(l: &LieAlgebra, p: u64) -> Profile {
        let table = Table::new(l, p);
        let lcs: Vec<Vec<V>> = l.lower_central_series().iter().map(basis_vectors).collect();
        let lcs_ech = lcs.iter().map(|b| Echelon::from(p, b)).collect();
        let ucs = upper_central_series(l).iter().map(|b| Echelon::from(p, b)).collect();
        let mut prof = Profile { table, lcs, ucs, lcs_ech, classes: Vec::new(), buckets: HashMap::new() };
        let total = p.pow(l.dim() as u32);
        let mut classes = Vec::with_capacity(total as usize);
        let mut buckets: HashMap<Vec<u32>, Vec<u64>> = HashMap::new();
        for idx in 0..total {
            let key = prof.class(&prof.table.decode(idx));
            buckets.entry(key.clone()).or_default().push(idx);
            classes.push(key);
        }
        prof.classes = classes;
        prof.buckets = buckets;
        prof
    }

    /// Invariants of `x` under automorphisms.
    fn class(&self, x: &[u64]) -> Vec<u32> {
        let p = self.table.p;
        let mut key = Vec::new();
        key.push(self.lcs_ech.iter().filter(|e| e.contains(x)).count() as u32);
        key.push(self.ucs.iter().filter(|e| e.contains(x)).count() as u32);
        let image: Vec<V> = self.lcs[0].iter().map(|y| self.table.bracket(x, y)).collect();
        let img_dim = span_dim(p, &image);
        for term in &self.lcs {
            let br: Vec<V> = term.iter().map(|y| self.table.bracket(x, y)).collect();
            key.push(span_dim(p, &br) as u32);
        }
        for (term, ech) in self.lcs.iter().zip(&self.lcs_ech).skip(1) {
            let mut both = image.clone();
            both.extend(term.iter().cloned());
            let meet = img_dim + ech.dim() - span_dim(p, &both);
            key.push(meet as u32);
        }
        for ech in &self.ucs {
            let br: Vec<V> = ech.rows.iter().map(|(y, _)| self.table.bracket(x, y)).collect();
            key.push(span_dim(p, &br) as u32);
        }
        let second: Vec<V> = image.iter().map(|y| self.table.bracket(x, y)).collect();
        key.push(span_dim(p, &second) as u32);
        key
    }

    fn histogram(&self) -> HashMap<&Vec<u32>, usize> {
        self.buckets.iter().map(|(k, v)| (k, v.len())).collect()
    }
}

/// `0 = Z_0 ⊂ Z_1 ⊂ ...` up to the whole algebra.
fn upper_central_series(l: &LieAlgebra) -> Vec<Vec<V>> {
    let f = l.field();
    let n = l.dim();
    let mut out = Vec::new();
    let mut current = crate::linalg::Subspace::zero(f, n);
    loop {
        let q = l.quotient(&current).expect("centre terms are ideals");
        let z = q.algebra.center();
        let lifted: Vec<crate::linalg::Vector> =
            z.basis().iter().map(|v| q.section.mul_vec(v)).chain(current.basis().iter().cloned()).collect();
        let next = crate::linalg::Subspace::span(f, n, &lifted);
        if next.dim() == current.dim() {
            break;
        }
        out.push(basis_vectors(&next));
        current = next;
        if current.dim() == n {
            break;
        }
    }
    out
}

/// A partial linear map `A ⊇ S → B` closed under brackets.
#[derive(Clone)]
struct Partial {
    pairs: Vec<(V, V)>,
    joint: Echelon,
    image: Echelon,
}

impl Partial {
    fn new(p: u64) -> Self {
        Partial { pairs: Vec::new(), joint: Echelon::new(p), image: Echelon::new(p) }
    }

    /// Adds `a ↦ b`; `Err` if inconsistent or not injective, `Ok(true)` if new.
    fn add(&mut self, a: &[u64], b: &[u64]) -> Result<bool, ()> {
        let n = a.len();
        let mut v = a.to_vec();
        v.extend_from_slice(b);
        let r = self.joint.reduce(v);
        let a_zero = r[..n].iter().all(|&x| x == 0);
        let b_zero = r[n..].iter().all(|&x| x == 0);
        if a_zero {
            return if b_zero { Ok(false) } else { Err(()) };
        }
        if !self.image.insert(b.to_vec()) {
            return Err(());
        }
        self.joint.insert(r);
        Ok(true)
    }

    fn extend(&mut self, ta: &Table, tb: &Table, a: V, b: V) -> bool {
        match self.add(&a, &b) {
            Err(()) => return false,
            Ok(false) => return true,
            Ok(true) => {}
        }
        let mut queue = vec![(a, b)];
        while let Some((a, b)) = queue.pop() {
            let existing = self.pairs.clone();
            self.pairs.push((a.clone(), b.clone()));
            for (x, y) in existing.iter() {
                let na = ta.bracket(&a, x);
                let nb = tb.bracket(&b, y);
                match self.add(&na, &nb) {
                    Err(()) => return false,
                    Ok(true) => queue.push((na, nb)),
                    Ok(false) => {}
                }
            }
        }
        true
    }
}

fn to_matrix(f: Field, n: usize, pairs: &[(V, V)]) -> Result<Matrix, OracleError> {
    let conv = |v: &V| -> Vec<FieldElem> { v.iter().map(|&x| f.from_i64(x as i64)).collect() };
    let a = Matrix::from_cols(f, n, &pairs.iter().map(|(x, _)| conv(x)).collect::<Vec<_>>());
    let b = Matrix::from_cols(f, n, &pairs.iter().map(|(_, y)| conv(y)).collect::<Vec<_>>());
    Ok(b.mul(&a.inverse().map_err(LieError::from)?).map_err(LieError::from)?)
}

struct Search<'a> {
    pa: &'a Profile,
    pb: &'a Profile,
    gens: Vec<V>,
    cands: Vec<&'a [u64]>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    /// `Some(Some(map))` on success, `Some(None)` when exhausted, `None` when
    /// over budget.
    fn run(&mut self, depth: usize, partial: &Partial) -> Option<Option<Partial>> {
        if depth == self.gens.len() {
            return Some((partial.pairs.len() == self.pa.table.n).then(|| partial.clone()));
        }
        for &idx in self.cands[depth] {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            let img = self.pb.table.decode(idx);
            let mut next = partial.clone();
            if !next.extend(&self.pa.table, &self.pb.table, self.gens[depth].clone(), img) {
                continue;
            }
            match self.run(depth + 1, &next) {
                None => return None,
                Some(Some(found)) => return Some(Some(found)),
                Some(None) => {}
            }
        }
        Some(None)
    }
}

/// Decides whether `a` and `b` are isomorphic by exhaustive search.
pub fn iso_search(a: &LieAlgebra, b: &LieAlgebra, cfg: &IsoSearchConfig) -> Result<IsoSearchOutcome, OracleError> {
    if cfg.max_nodes == 0 {
        return Err(OracleError::ZeroBudget);
    }
    if a.field() != b.field() {
        return Err(OracleError::FieldMismatch);
    }
    let Field::Prime(p) = a.field() else { return Err(OracleError::NotAPrimeField) };
    if a.dim() != b.dim() {
        return Err(OracleError::DimensionMismatch);
    }
    let n = a.dim();
    if p.checked_pow(n as u32).map_or(true, |t| t > MAX_VECTORS) {
        return Err(OracleError::TooLarge { p, n });
    }
    if cfg.prefilter {
        let (ia, ib) = (invariant_vector(a), invariant_vector(b));
        if ia != ib {
            return Ok(IsoSearchOutcome::NotIsomorphic(format!("invariant vectors differ: {ia:?} vs {ib:?}")));
        }
    }
    let pa = Profile::new(a, p);
    let pb = Profile::new(b, p);
    if pa.histogram() != pb.histogram() {
        return Ok(IsoSearchOutcome::NotIsomorphic("vector invariant histograms differ".into()));
    }
    // Generators: lifts of a basis of A / [A, A], taken from the rarest classes.
    let derived = Echelon::from(p, pa.lcs.get(1).map(|v| v.as_slice()).unwrap_or(&[]));
    let mut order: Vec<u64> = (0..p.pow(n as u32)).collect();
    order.sort_by_key(|&i| (pb.buckets.get(&pa.classes[i as usize]).map_or(0, |v| v.len()), i));
    let mut span = derived.clone();
    let mut gens = Vec::new();
    for idx in order {
        let v = pa.table.decode(idx);
        if span.insert(v.clone()) {
            gens.push(v);
        }
        if span.dim() == n {
            break;
        }
    }
    let empty: &[u64] = &[];
    let cands: Vec<&[u64]> = gens
        .iter()
        .map(|g| pb.buckets.get(&pa.class(g)).map_or(empty, |v| v.as_slice()))
        .collect();
    let mut search = Search { pa: &pa, pb: &pb, gens, cands, nodes: 0, budget: cfg.max_nodes };
    match search.run(0, &Partial::new(p)) {
        None => Ok(IsoSearchOutcome::BudgetExceeded),
        Some(None) => Ok(IsoSearchOutcome::NotIsomorphic(format!("exhausted after {} nodes", search.nodes))),
        Some(Some(found)) => {
            let m = to_matrix(a.field(), n, &found.pairs)?;
            Ok(IsoSearchOutcome::Isomorphic(Isomorphism::new(a.clone(), b.clone(), m)?))
        }
    }
}

/// Seeded random invertible basis changes: entries uniform over `GF(p)`, or
/// uniform integers in `[-3, 3]` over the rationals. ChaCha8 drives the
/// stream, so equal seeds give equal output.
pub fn fuzz_basis_change(l: &LieAlgebra, trials: usize, seed: u64) -> impl Iterator<Item = (Matrix, LieAlgebra)> + '_ {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(move |_| {
        let p = random_invertible(&mut rng, l.field(), l.dim());
        let changed = l.change_basis(&p).expect("invertible basis change");
        (p, changed)
    })
}

pub fn random_invertible(rng: &mut impl Rng, f: Field, n: usize) -> Matrix {
    loop {
        let rows: Vec<Vec<FieldElem>> = (0..n)
            .map(|_| {
                (0..n)
                    .map(|_| match f {
                        Field::Prime(p) => f.from_i64(rng.gen_range(0..p) as i64),
                        Field::Rationals => f.from_i64(rng.gen_range(-3..=3)),
                    })
                    .collect()
            })
            .collect();
        let m = Matrix::from_rows(f, n, &rows);
        if m.is_invertible() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{instantiate, CatalogId};

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn alg(f: Field, s: &str) -> LieAlgebra {
        instantiate(&CatalogId::parse(s, f).unwrap()).unwrap()
    }

    #[test]
    fn invariants_examples() {
        let f = gf(3);
        assert_eq!(invariant_vector(&alg(f, "L6_17")).lcs_dims, invariant_vector(&alg(f, "L6_18")).lcs_dims);
        assert_eq!(invariant_vector(&alg(f, "L6_18")).lcs_dims, vec![6, 4, 3, 2, 1, 0]);
        assert_eq!(invariant_vector(&alg(f, "L6_25")).lcs_dims, invariant_vector(&alg(f, "L6_23")).lcs_dims);
        let r = iso_search(&alg(f, "L6_25"), &alg(f, "L6_23"), &IsoSearchConfig::default()).unwrap();
        assert!(r.is_not_isomorphic());
        assert_ne!(invariant_vector(&alg(f, "L6_1")), invariant_vector(&alg(f, "L6_2")));
    }

    #[test]
    fn search_examples() {
        let f = gf(3);
        let cfg = IsoSearchConfig::default();
        let r = iso_search(&alg(f, "L6_17"), &alg(f, "L6_18"), &cfg).unwrap();
        assert!(r.is_not_isomorphic());
        let a = alg(f, "L6_19(eps=1)");
        for (_, b) in fuzz_basis_change(&a, 3, 7) {
            assert!(iso_search(&a, &b, &cfg).unwrap().is_isomorphic());
        }
        let f5 = gf(5);
        let r = iso_search(&alg(f5, "L6_19(eps=1)"), &alg(f5, "L6_19(eps=2)"), &cfg).unwrap();
        assert!(r.is_not_isomorphic(), "{r:?}");
    }

    #[test]
    fn fuzzer_is_deterministic() {
        let a = alg(Field::Rationals, "L6_24(eps=2)");
        let x: Vec<_> = fuzz_basis_change(&a, 4, 11).map(|(p, _)| p).collect();
        let y: Vec<_> = fuzz_basis_change(&a, 4, 11).map(|(p, _)| p).collect();
        assert_eq!(x, y);
        for (_, b) in fuzz_basis_change(&a, 4, 11) {
            assert!(b.validate().is_ok());
        }
    }

    #[test]
    fn rejects_rationals() {
        let a = alg(Field::Rationals, "L3_2");
        assert_eq!(iso_search(&a, &a, &IsoSearchConfig::default()).unwrap_err(), OracleError::NotAPrimeField);
    }
}
