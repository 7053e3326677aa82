//! Property-based checks of the algebraic invariants.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use nilpotent_lie::catalog::{family_algebra, ids_over, instantiate, same_id, scaling_iso, CatalogId};
use nilpotent_lie::cohomology::{
    aut_action, central_extension, coboundary, compute_spaces, decompose, extension_center_ok, is_cocycle, SkewForm,
};
use nilpotent_lie::field::{Field, FieldElem};
use nilpotent_lie::liealg::{Isomorphism, LieAlgebra};
use nilpotent_lie::linalg::{Matrix, Subspace};
use nilpotent_lie::oracle::{invariant_vector, random_invertible};
use nilpotent_lie::recognize::{aut_template, recognize};

const FIELDS: [Field; 5] = [Field::Rationals, Field::Prime(3), Field::Prime(5), Field::Prime(7), Field::Prime(101)];

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(FIELDS.to_vec())
}

fn matrix(max: usize) -> impl Strategy<Value = Matrix> {
    (field(), 1..=max, 1..=max).prop_flat_map(|(f, r, c)| {
        prop::collection::vec(-4i64..=4, r * c).prop_map(move |v| {
            let rows: Vec<Vec<FieldElem>> = v.chunks(c).map(|ch| ch.iter().map(|&x| f.from_i64(x)).collect()).collect();
            Matrix::from_rows(f, c, &rows)
        })
    })
}

fn square(max: usize) -> impl Strategy<Value = Matrix> {
    (field(), 1..=max).prop_flat_map(|(f, n)| {
        prop::collection::vec(-4i64..=4, n * n).prop_map(move |v| {
            let rows: Vec<Vec<FieldElem>> = v.chunks(n).map(|ch| ch.iter().map(|&x| f.from_i64(x)).collect()).collect();
            Matrix::from_rows(f, n, &rows)
        })
    })
}

/// Every catalog id of dimension 1..=6 over the small test fields.
fn all_ids() -> Vec<CatalogId> {
    let mut out = Vec::new();
    for f in [Field::Rationals, Field::Prime(3), Field::Prime(5), Field::Prime(7)] {
        for d in 1..=6 {
            out.extend(ids_over(f, d, 3).unwrap());
        }
    }
    out
}

fn catalog_id() -> impl Strategy<Value = CatalogId> {
    prop::sample::select(all_ids())
}

fn random_aut(rng: &mut ChaCha8Rng, id: &CatalogId) -> Matrix {
    let t = aut_template(id).unwrap();
    let f = id.field();
    loop {
        let vals: Vec<_> = t.free_entries().iter().map(|&e| (e, f.from_i64(rng.gen_range(-3..=3)))).collect();
        if let Ok(m) = t.element(&vals) {
            return m;
        }
    }
}

fn random_cocycle(rng: &mut ChaCha8Rng, z2: &Subspace, f: Field, n: usize) -> SkewForm {
    let mut v = vec![f.zero(); z2.ambient()];
    for b in z2.basis() {
        let c = f.from_i64(rng.gen_range(-3..=3));
        for (x, y) in v.iter_mut().zip(b) {
            *x += &(&c * y);
        }
    }
    SkewForm::from_coeffs(f, n, v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rref_is_idempotent(m in matrix(6)) {
        let r = m.rref();
        prop_assert_eq!(&r.matrix.rref().matrix, &r.matrix);
        prop_assert_eq!(r.rank, r.pivots.len());
    }

    #[test]
    fn rank_of_transpose(m in matrix(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_vectors_are_annihilated(m in matrix(6)) {
        let ker = m.kernel();
        prop_assert_eq!(ker.len(), m.cols() - m.rank());
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(FieldElem::is_zero));
        }
    }

    #[test]
    fn inverse_is_two_sided(m in square(6)) {
        prop_assert_eq!(m.is_invertible(), !m.det().is_zero());
        if let Ok(inv) = m.inverse() {
            let n = m.rows();
            prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(m.field(), n));
            prop_assert_eq!(inv.mul(&m).unwrap(), Matrix::identity(m.field(), n));
        }
    }

    #[test]
    fn solve_returns_solutions(m in square(5), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = m.field();
        let x: Vec<FieldElem> = (0..m.cols()).map(|_| f.from_i64(rng.gen_range(-5..=5))).collect();
        let b = m.mul_vec(&x);
        let y = m.solve(&b).expect("consistent system");
        prop_assert_eq!(m.mul_vec(&y), b);
    }

    #[test]
    fn square_classes_absorb_squares(p in prop::sample::select(vec![3u64, 5, 7, 11, 13, 101]), a in 1i64..1000, c in 1i64..1000) {
        let f = Field::prime(p).unwrap();
        let (a, c) = (f.from_i64(a), f.from_i64(c));
        prop_assume!(!a.is_zero() && !c.is_zero());
        let ac2 = &a * &(&c * &c);
        prop_assert!(a.same_square_class(&ac2).unwrap());
        prop_assert_eq!(a.square_class_rep().unwrap(), ac2.square_class_rep().unwrap());
    }

    #[test]
    fn basis_change_preserves_invariants(id in catalog_id(), seed in any::<u64>()) {
        let l = instantiate(&id).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = random_invertible(&mut rng, l.field(), l.dim());
        let k = l.change_basis(&p).unwrap();
        prop_assert!(k.validate().is_ok());
        let pinv = p.inverse().unwrap();
        prop_assert!(l.check_homomorphism(&k, &pinv).is_ok());
        // The centre maps onto the centre.
        prop_assert_eq!(l.center().image(&pinv), k.center());
        prop_assert_eq!(l.lcs_dims(), k.lcs_dims());
        prop_assert_eq!(l.derived_dims(), k.derived_dims());
        prop_assert_eq!(invariant_vector(&l), invariant_vector(&k));
    }

    #[test]
    fn stripping_splits_off_the_abelian_summand(id in catalog_id(), seed in any::<u64>()) {
        let l = instantiate(&id).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = l.change_basis(&random_invertible(&mut rng, l.field(), l.dim())).unwrap();
        let s = k.strip_central_component().unwrap();
        prop_assert_eq!(s.core.dim() + s.abelian_dim, k.dim());
        prop_assert_eq!(s.iso.source(), &k);
        let sum = s.core.direct_sum(&LieAlgebra::abelian(k.field(), s.abelian_dim)).unwrap();
        prop_assert_eq!(s.iso.target(), &sum);
        // No further abelian summand is left in the core.
        if s.core.dim() > 0 {
            prop_assert_eq!(s.core.strip_central_component().unwrap().abelian_dim, 0);
        }
    }

    #[test]
    fn coboundaries_lie_in_cocycles(id in catalog_id(), seed in any::<u64>()) {
        let l = instantiate(&id).unwrap();
        let (f, n) = (l.field(), l.dim());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let sp = compute_spaces(&l);
        prop_assert!(sp.z2.contains_subspace(&sp.b2));
        prop_assert_eq!(sp.b2.dim(), l.derived_algebra().dim());
        prop_assert_eq!(sp.h2_dim(), sp.z2.dim() - sp.b2.dim());
        let nu: Vec<FieldElem> = (0..n).map(|_| f.from_i64(rng.gen_range(-3..=3))).collect();
        prop_assert!(is_cocycle(&l, &coboundary(&l, &nu)));
        if sp.z2.dim() > 0 {
            let theta = random_cocycle(&mut rng, &sp.z2, f, n);
            prop_assert!(is_cocycle(&l, &theta));
            let (c, nu) = decompose(&l, &theta, &sp.h2_reps).expect("cocycles decompose");
            let rebuilt = SkewForm::combination(f, n, &c, &sp.h2_reps).add(&coboundary(&l, &nu));
            prop_assert_eq!(rebuilt, theta);
        }
    }

    #[test]
    fn extensions_satisfy_the_center_criterion(id in catalog_id(), s in 1usize..=2, seed in any::<u64>()) {
        let l = instantiate(&id).unwrap();
        let (f, n) = (l.field(), l.dim());
        prop_assume!(n + s <= 8);
        let sp = compute_spaces(&l);
        prop_assume!(sp.z2.dim() > 0);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let thetas: Vec<SkewForm> = (0..s).map(|_| random_cocycle(&mut rng, &sp.z2, f, n)).collect();
        let ext = central_extension(&l, &thetas).unwrap();
        prop_assert!(ext.algebra.validate().is_ok());
        let v = Subspace::span(f, n + s, &ext.center_embedding.col_vectors());
        prop_assert!(ext.algebra.center().contains_subspace(&v));
        prop_assert_eq!(ext.algebra.center() == v, extension_center_ok(&l, &thetas));
        let q = ext.algebra.quotient(&v).unwrap();
        prop_assert_eq!(q.algebra, l);
    }

    #[test]
    fn automorphisms_act_on_the_right(seed in any::<u64>(), which in 0usize..10) {
        let f = Field::prime(7).unwrap();
        let (d, k) = [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 5), (5, 6), (5, 7), (5, 8), (5, 9)][which];
        let id = CatalogId::plain(f, d, k).unwrap();
        let l = instantiate(&id).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (phi, psi) = (random_aut(&mut rng, &id), random_aut(&mut rng, &id));
        let sp = compute_spaces(&l);
        let theta = random_cocycle(&mut rng, &sp.z2, f, d);
        let both = aut_action(&l, &phi.mul(&psi).unwrap(), &theta).unwrap();
        let stepwise = aut_action(&l, &psi, &aut_action(&l, &phi, &theta).unwrap()).unwrap();
        prop_assert_eq!(both, stepwise);
        prop_assert!(is_cocycle(&l, &aut_action(&l, &phi, &theta).unwrap()));
        let back = aut_action(&l, &phi.inverse().unwrap(), &aut_action(&l, &phi, &theta).unwrap()).unwrap();
        prop_assert_eq!(back, theta);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn recognition_is_consistent_with_invariants(id in catalog_id(), seed in any::<u64>()) {
        let l = instantiate(&id).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = l.change_basis(&random_invertible(&mut rng, l.field(), l.dim())).unwrap();
        let r = recognize(&k).unwrap();
        prop_assert!(same_id(&r.id, &id), "{} recognized as {}", id, r.id);
        let target = instantiate(&r.id).unwrap();
        prop_assert_eq!(invariant_vector(&k), invariant_vector(&target));
        prop_assert!(Isomorphism::new(k.clone(), target, r.iso.matrix().clone()).is_ok());
        // Recognizing the catalog table itself is idempotent.
        let again = recognize(r.iso.target()).unwrap();
        prop_assert_eq!(again.id.to_string(), r.id.to_string());
    }

    #[test]
    fn parameters_only_matter_up_to_squares(
        index in prop::sample::select(vec![19usize, 21, 22, 24]),
        p in prop::sample::select(vec![3u64, 5, 7, 11]),
        e in 1u64..11,
        a in 1u64..11,
    ) {
        let f = Field::prime(p).unwrap();
        let (eps, alpha) = (f.from_i64(e as i64), f.from_i64(a as i64));
        prop_assume!(!eps.is_zero() && !alpha.is_zero());
        let scaled = &(&alpha * &alpha) * &eps;
        let iso = scaling_iso(index, &eps, &alpha).unwrap();
        prop_assert_eq!(iso.target(), &family_algebra(f, index, &scaled).unwrap());
        let r1 = recognize(&family_algebra(f, index, &eps).unwrap()).unwrap();
        let r2 = recognize(&family_algebra(f, index, &scaled).unwrap()).unwrap();
        prop_assert_eq!(r1.id.to_string(), r2.id.to_string());
        let nonsquare = f.smallest_nonresidue().unwrap();
        let r3 = recognize(&family_algebra(f, index, &(&eps * &nonsquare)).unwrap()).unwrap();
        prop_assert!(!same_id(&r1.id, &r3.id));
    }
}
