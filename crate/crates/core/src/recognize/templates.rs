//! Explicit automorphism groups of the quotients met during recognition.

use crate::catalog::{instantiate, CatalogId};
use crate::cohomology::check_automorphism;
use crate::field::FieldElem;
use crate::liealg::LieAlgebra;
use crate::linalg::Matrix;

use super::RecognizeError;

/// 1-based entry grid of a matrix under construction.
pub(crate) struct Entries {
    a: Vec<Vec<FieldElem>>,
}

impl Entries {
    fn g(&self, i: usize, j: usize) -> FieldElem {
        self.a[i - 1][j - 1].clone()
    }

    fn s(&mut self, i: usize, j: usize, v: FieldElem) {
        self.a[i - 1][j - 1] = v;
    }

    /// `a11 a22 - a12 a21`.
    fn delta(&self) -> FieldElem {
        &(&self.g(1, 1) * &self.g(2, 2)) - &(&self.g(1, 2) * &self.g(2, 1))
    }
}

/// A family of automorphisms: free entries are chosen, the remaining entries
/// follow from them.
pub struct AutTemplate {
    id: CatalogId,
    algebra: LieAlgebra,
    free: Vec<(usize, usize)>,
    derive: fn(&mut Entries),
}

impl std::fmt::Debug for AutTemplate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("AutTemplate").field("id", &self.id).field("free", &self.free).finish()
    }
}

impl AutTemplate {
    pub fn id(&self) -> &CatalogId {
        &self.id
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    /// Free entries `(i, j)`, 1-based, `a_ij` being the `x_i` coefficient of
    /// the image of `x_j`.
    pub fn free_entries(&self) -> &[(usize, usize)] {
        &self.free
    }

    /// The automorphism with the given free entries; unspecified free entries
    /// take their identity-matrix values.
    pub fn element(&self, values: &[((usize, usize), FieldElem)]) -> Result<Matrix, RecognizeError> {
        let f = self.algebra.field();
        let n = self.algebra.dim();
        let mut e = Entries { a: vec![vec![f.zero(); n]; n] };
        for &(i, j) in &self.free {
            if i == j {
                e.s(i, j, f.one());
            }
        }
        for ((i, j), v) in values {
            if !self.free.contains(&(*i, *j)) {
                return Err(RecognizeError::NotAnAutomorphism(format!("a{i}{j} is not a free entry of Aut({})", self.id)));
            }
            e.s(*i, *j, v.clone());
        }
        (self.derive)(&mut e);
        let rows: Vec<Vec<FieldElem>> = e.a;
        let m = Matrix::from_rows(f, n, &rows);
        check_automorphism(&self.algebra, &m)
            .map_err(|_| RecognizeError::NotAnAutomorphism(format!("values do not give an automorphism of {}", self.id)))?;
        Ok(m)
    }
}

fn all_entries(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect()
}

fn list(s: &[(usize, usize)]) -> Vec<(usize, usize)> {
    s.to_vec()
}

fn none(_: &mut Entries) {}

fn l32(e: &mut Entries) {
    let d = e.delta();
    e.s(3, 3, d);
}

fn l43(e: &mut Entries) {
    let (a11, a22, a32) = (e.g(1, 1), e.g(2, 2), e.g(3, 2));
    e.s(3, 3, &a11 * &a22);
    e.s(4, 3, &a11 * &a32);
    e.s(4, 4, &(&a11 * &a11) * &a22);
}

fn l53(e: &mut Entries) {
    let (a11, a22, a32) = (e.g(1, 1), e.g(2, 2), e.g(3, 2));
    e.s(3, 3, &a11 * &a22);
    e.s(4, 3, &a11 * &a32);
    e.s(4, 4, &(&a11 * &a11) * &a22);
}

fn l55(e: &mut Entries) {
    let (a11, a21, a22, a32, a41, a42) = (e.g(1, 1), e.g(2, 1), e.g(2, 2), e.g(3, 2), e.g(4, 1), e.g(4, 2));
    e.s(3, 3, &a11 * &a22);
    e.s(3, 4, -&(&a11 * &a21));
    e.s(4, 4, &a11 * &a11);
    e.s(5, 3, &(&(&a11 * &a32) + &(&a21 * &a42)) - &(&a41 * &a22));
    e.s(5, 5, &(&a11 * &a11) * &a22);
}

fn l56(e: &mut Entries) {
    let (a11, a21, a31, a32, a42) = (e.g(1, 1), e.g(2, 1), e.g(3, 1), e.g(3, 2), e.g(4, 2));
    let a11_2 = &a11 * &a11;
    let a11_3 = &a11_2 * &a11;
    e.s(2, 2, a11_2.clone());
    e.s(3, 3, a11_3.clone());
    e.s(4, 3, &a11 * &a32);
    e.s(4, 4, &a11_3 * &a11);
    e.s(5, 5, &(&a11_3 * &a11) * &a11);
    e.s(5, 3, &(&(&a11 * &a42) + &(&a21 * &a32)) - &(&a31 * &a11_2));
    e.s(5, 4, &(&a21 * &a11_3) + &(&a32 * &a11_2));
}

fn l57(e: &mut Entries) {
    let (a11, a22, a32, a42) = (e.g(1, 1), e.g(2, 2), e.g(3, 2), e.g(4, 2));
    let a11_2 = &a11 * &a11;
    e.s(3, 3, &a11 * &a22);
    e.s(4, 3, &a11 * &a32);
    e.s(5, 3, &a11 * &a42);
    e.s(4, 4, &a11_2 * &a22);
    e.s(5, 4, &a11_2 * &a32);
    e.s(5, 5, &(&a11_2 * &a11) * &a22);
}

fn l58(e: &mut Entries) {
    let a11 = e.g(1, 1);
    for (r, c, src) in [(4, 4, (2, 2)), (5, 4, (3, 2)), (4, 5, (2, 3)), (5, 5, (3, 3))] {
        let v = &a11 * &e.g(src.0, src.1);
        e.s(r, c, v);
    }
}

fn l59(e: &mut Entries) {
    let (a11, a12, a21, a22, a31, a32) = (e.g(1, 1), e.g(1, 2), e.g(2, 1), e.g(2, 2), e.g(3, 1), e.g(3, 2));
    let d = e.delta();
    e.s(3, 3, d.clone());
    e.s(4, 3, &(&a11 * &a32) - &(&a31 * &a12));
    e.s(5, 3, &(&a21 * &a32) - &(&a31 * &a22));
    e.s(4, 4, &a11 * &d);
    e.s(5, 4, &a21 * &d);
    e.s(4, 5, &a12 * &d);
    e.s(5, 5, &a22 * &d);
}

/// The automorphism family of a catalog algebra, for the algebras that occur
/// as quotients in dimension at most 5.
pub fn aut_template(id: &CatalogId) -> Result<AutTemplate, RecognizeError> {
    let algebra = instantiate(id).map_err(|e| RecognizeError::InternalInvariantViolated(e.to_string()))?;
    let n = id.dim();
    let (free, derive): (Vec<(usize, usize)>, fn(&mut Entries)) = match (n, id.index()) {
        (_, 1) => (all_entries(n), none),
        (3, 2) => (list(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]), l32),
        (4, 2) => (
            list(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (3, 4), (4, 1), (4, 2), (4, 4)]),
            l32,
        ),
        (4, 3) => (list(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2)]), l43),
        (5, 2) => (
            list(&[
                (1, 1),
                (1, 2),
                (2, 1),
                (2, 2),
                (3, 1),
                (3, 2),
                (3, 4),
                (3, 5),
                (4, 1),
                (4, 2),
                (4, 4),
                (4, 5),
                (5, 1),
                (5, 2),
                (5, 4),
                (5, 5),
            ]),
            l32,
        ),
        (5, 3) => (
            list(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (4, 5), (5, 1), (5, 2), (5, 5)]),
            l53,
        ),
        (5, 5) => (list(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2), (5, 4)]), l55),
        (5, 6) => (list(&[(1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]), l56),
        (5, 7) => (list(&[(1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]), l57),
        (5, 8) => (
            list(&[
                (1, 1),
                (2, 1),
                (2, 2),
                (2, 3),
                (3, 1),
                (3, 2),
                (3, 3),
                (4, 1),
                (4, 2),
                (4, 3),
                (5, 1),
                (5, 2),
                (5, 3),
            ]),
            l58,
        ),
        (5, 9) => (list(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2)]), l59),
        _ => return Err(RecognizeError::InternalInvariantViolated(format!("no automorphism template for {id}"))),
    };
    Ok(AutTemplate { id: id.clone(), algebra, free, derive })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_defaults() {
        let f = Field::prime(5).unwrap();
        let t = aut_template(&CatalogId::plain(f, 4, 2).unwrap()).unwrap();
        let m = t.element(&[((1, 1), f.one()), ((2, 2), f.one())]).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn random_elements_are_automorphisms() {
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (d, k) in [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 5), (5, 6), (5, 7), (5, 8), (5, 9), (4, 1)] {
            let t = aut_template(&CatalogId::plain(f, d, k).unwrap()).unwrap();
            let mut ok = 0;
            for _ in 0..40 {
                let vals: Vec<_> =
                    t.free_entries().iter().map(|&e| (e, f.from_i64(rng.gen_range(0..7)))).collect();
                match t.element(&vals) {
                    Ok(_) => ok += 1,
                    Err(RecognizeError::NotAnAutomorphism(_)) => {}
                    Err(e) => panic!("{e}"),
                }
            }
            assert!(ok > 5, "L{d}_{k}: only {ok} samples invertible");
        }
    }

    #[test]
    fn l57_shape_is_lower_triangular() {
        let f = Field::Rationals;
        let t = aut_template(&CatalogId::plain(f, 5, 7).unwrap()).unwrap();
        let vals: Vec<_> = t.free_entries().iter().map(|&e| (e, f.from_i64(2))).collect();
        let m = t.element(&vals).unwrap();
        for i in 0..5 {
            for j in i + 1..5 {
                assert!(m.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn wrong_entry_rejected() {
        let f = Field::Rationals;
        let t = aut_template(&CatalogId::plain(f, 4, 3).unwrap()).unwrap();
        assert!(t.element(&[((1, 2), f.one())]).is_err());
    }
}
