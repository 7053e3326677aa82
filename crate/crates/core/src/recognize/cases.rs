//! Per-quotient normal forms of cocycles.

use crate::catalog::CatalogId;
use crate::cohomology::{compute_spaces, SkewForm};
use crate::field::FieldElem;
use crate::liealg::LieAlgebra;

use super::{bug, map_from, RecognizeError, State, Target};

type Terms = &'static [(usize, usize, i64)];

/// Cohomology representatives in which the case analyses are phrased.
fn rep_table(dim: usize, index: usize) -> Option<&'static [Terms]> {
    Some(match (dim, index) {
        (2, 1) => &[&[(1, 2, 1)]],
        (3, 1) => &[&[(1, 2, 1)], &[(1, 3, 1)], &[(2, 3, 1)]],
        (3, 2) => &[&[(1, 3, 1)], &[(2, 3, 1)]],
        (4, 1) => &[&[(1, 2, 1)], &[(1, 3, 1)], &[(1, 4, 1)], &[(2, 3, 1)], &[(2, 4, 1)], &[(3, 4, 1)]],
        (4, 2) => &[&[(1, 3, 1)], &[(1, 4, 1)], &[(2, 3, 1)], &[(2, 4, 1)]],
        (4, 3) => &[&[(1, 4, 1)], &[(2, 3, 1)]],
        (5, 2) => &[&[(1, 3, 1)], &[(1, 4, 1)], &[(1, 5, 1)], &[(2, 3, 1)], &[(2, 4, 1)], &[(2, 5, 1)], &[(4, 5, 1)]],
        (5, 3) => &[&[(1, 4, 1)], &[(1, 5, 1)], &[(2, 3, 1)], &[(2, 5, 1)]],
        (5, 5) => &[&[(1, 4, 1)], &[(1, 5, 1), (3, 4, 1)], &[(2, 3, 1)], &[(2, 4, 1)]],
        (5, 6) => &[&[(1, 5, 1), (2, 4, 1)], &[(2, 3, 1)], &[(2, 5, 1), (3, 4, -1)]],
        (5, 7) => &[&[(1, 5, 1)], &[(2, 3, 1)], &[(2, 5, 1), (3, 4, -1)]],
        (5, 8) => &[&[(1, 4, 1)], &[(1, 5, 1)], &[(2, 3, 1)], &[(2, 4, 1)], &[(2, 5, 1), (3, 4, 1)], &[(3, 5, 1)]],
        (5, 9) => &[&[(1, 4, 1)], &[(1, 5, 1), (2, 4, 1)], &[(2, 5, 1)]],
        _ => return None,
    })
}

pub(crate) fn representatives(id: &CatalogId, base: &LieAlgebra) -> Vec<SkewForm> {
    match rep_table(id.dim(), id.index()) {
        Some(t) => t.iter().map(|d| SkewForm::from_deltas(base.field(), base.dim(), d)).collect(),
        None => compute_spaces(base).h2_reps,
    }
}

/// Dispatches on the quotient and the centre dimension.
pub(crate) fn normalize(st: &mut State) -> Result<Target, RecognizeError> {
    let s = st.thetas.len();
    match (st.quotient.dim(), st.quotient.index(), s) {
        (2, 1, 1) => {
            st.normalize(0, 0)?;
            Ok(Target::Fixed(3, 2))
        }
        (3, 2, 1) => l32(st),
        (3, 1, 2) => l31_pair(st),
        (3, 2, 2) => {
            st.combine_to_identity()?;
            Ok(Target::Fixed(5, 9))
        }
        (4, 1, 1) => {
            let r = st.skew_canonical(0)?;
            if r != 4 {
                return Err(bug("degenerate cocycle on the abelian quotient"));
            }
            Ok(Target::Fixed(5, 4))
        }
        (4, 2, 1) => {
            if !l42_first(st)? {
                return Err(bug("cocycle of rank one on L4_2"));
            }
            Ok(Target::Fixed(5, 5))
        }
        (4, 3, 1) => l43(st),
        (5, 2, 1) => l52(st),
        (5, 3, 1) => l53(st),
        (5, 5, 1) => l55(st),
        (5, 6, 1) => l56(st),
        (5, 7, 1) => l57(st),
        (5, 8, 1) => l58(st),
        (5, 9, 1) => l59(st),
        (4, 1, 2) => l41_pair(st),
        (4, 2, 2) => l42_pair(st),
        (4, 3, 2) => {
            st.combine_to_identity()?;
            let f = st.field();
            let one = f.one();
            let swap = map_from(
                f,
                &[
                    vec![(1, one.clone())],
                    vec![(2, one.clone())],
                    vec![(3, one.clone())],
                    vec![(4, one.clone())],
                    vec![(6, one.clone())],
                    vec![(5, one.clone())],
                ],
            );
            let targets = vec![st.form(&[(2, 3, one.clone())]), st.form(&[(1, 4, one)])];
            st.literal(swap, targets, "interchange x5 and x6")?;
            Ok(Target::Family(21, f.zero()))
        }
        (3, 1, 3) => {
            st.combine_to_identity()?;
            Ok(Target::Fixed(6, 26))
        }
        (d, k, s) => Err(bug(format!("no central extension case for L{d}_{k} with centre of dimension {s}"))),
    }
}

fn nz(x: &FieldElem) -> bool {
    !x.is_zero()
}

fn div(a: &FieldElem, b: &FieldElem) -> FieldElem {
    a / b
}

fn half(x: &FieldElem) -> FieldElem {
    x / &x.field().from_i64(2)
}

fn l32(st: &mut State) -> Result<Target, RecognizeError> {
    let c = st.co(0)?;
    let one = st.field().one();
    let (a11, a21, a12, a22) = super::clear_second_coordinate(&c[0], &c[1], &one)?;
    st.aut(&[((1, 1), a11), ((2, 1), a21), ((1, 2), a12), ((2, 2), a22)])?;
    st.normalize(0, 0)?;
    Ok(Target::Fixed(4, 3))
}

fn l43(st: &mut State) -> Result<Target, RecognizeError> {
    st.normalize(0, 0)?;
    let b = st.co(0)?[1].clone();
    if nz(&b) {
        st.aut(&[((1, 1), b.clone()), ((2, 2), b)])?;
        st.normalize(0, 0)?;
        return Ok(Target::Fixed(5, 6));
    }
    Ok(Target::Fixed(5, 7))
}

fn l31_pair(st: &mut State) -> Result<Target, RecognizeError> {
    let f = st.field();
    if st.skew_canonical(0)? != 2 {
        return Err(bug("zero cocycle"));
    }
    let x = st.co(1)?[0].clone();
    st.add_multiple(1, 0, &-x)?;
    let c = st.co(1)?;
    if c[1].is_zero() {
        st.aut_matrix(crate::linalg::Matrix::permutation(f, &[1, 0, 2]), "swap x1 and x2")?;
        st.scale(0, &-f.one())?;
    }
    st.normalize(1, 1)?;
    let c = st.co(1)?[2].clone();
    st.aut(&[((1, 2), -c)])?;
    Ok(Target::Fixed(5, 8))
}

/// Brings `θ1` on `L4_2` to `Δ13 + dΔ24` with `d ∈ {0, 1}`; returns `d = 1`.
fn l42_first(st: &mut State) -> Result<bool, RecognizeError> {
    let f = st.field();
    let c = st.co(0)?;
    if c[0].is_zero() {
        if c[2].is_zero() {
            return Err(bug("cocycle on L4_2 with x3 in its radical"));
        }
        st.aut(&[((2, 1), f.one())])?;
    }
    let a = st.co(0)?[0].clone();
    st.aut(&[((1, 1), a.inv()?), ((2, 2), a)])?;
    let c = st.co(0)?[2].clone();
    st.aut(&[((1, 2), -c)])?;
    let c = st.co(0)?;
    let a44 = if nz(&c[3]) { c[3].inv()? } else { f.one() };
    st.aut(&[((3, 4), -&(&a44 * &c[1])), ((4, 4), a44)])?;
    st.normalize(0, 0)?;
    let c = st.co(0)?;
    Ok(c[3].is_one())
}

/// Restores `θ1 = Δ13 + Δ24` after a stabilizer element and clears the `Δ13`
/// part of `θ2`.
fn l42_renorm(st: &mut State) -> Result<(), RecognizeError> {
    st.normalize(0, 0)?;
    let a = st.co(1)?[0].clone();
    st.add_multiple(1, 0, &-a)
}

fn l42_det(c: &[FieldElem]) -> FieldElem {
    &(&c[0] * &c[3]) - &(&c[1] * &c[2])
}

fn l42_pair(st: &mut State) -> Result<Target, RecognizeError> {
    let f = st.field();
    let one = f.one();
    let (c0, c1) = (st.co(0)?, st.co(1)?);
    let sum: Vec<FieldElem> = c0.iter().zip(&c1).map(|(x, y)| x + y).collect();
    if l42_det(&c0).is_zero() && l42_det(&c1).is_zero() && l42_det(&sum).is_zero() {
        if c0[0].is_zero() && c0[2].is_zero() {
            st.swap(0, 1)?;
        }
        if l42_first(st)? {
            return Err(bug("pencil without rank-two members normalized to rank two"));
        }
        l42_renorm(st)?;
        let c = st.co(1)?;
        if nz(&c[2]) || nz(&c[3]) {
            return Err(bug("degenerate pencil on L4_2 with independent second cocycle"));
        }
        st.normalize(1, 1)?;
        return Ok(Target::Fixed(6, 25));
    }
    if l42_det(&c0).is_zero() {
        if nz(&l42_det(&c1)) {
            st.swap(0, 1)?;
        } else {
            st.add_multiple(0, 1, &one)?;
        }
    }
    if !l42_first(st)? {
        return Err(bug("rank-two cocycle on L4_2 lost its rank"));
    }
    l42_renorm(st)?;
    let c = st.co(1)?;
    let (cc, d) = (c[2].clone(), c[3].clone());
    if cc.is_zero() {
        if nz(&d) {
            st.normalize(1, 3)?;
            let b = st.co(1)?[1].clone();
            st.aut(&[((2, 1), -b.clone()), ((3, 4), b), ((4, 4), one.clone())])?;
            l42_renorm(st)?;
            st.add_multiple(0, 1, &-one)?;
            return Ok(Target::Family(19, f.zero()));
        }
        st.normalize(1, 1)?;
        return Ok(Target::Fixed(6, 23));
    }
    if nz(&d) {
        let a11 = div(&(&cc + &cc), &d);
        let a22 = a11.inv()?;
        st.aut(&[((2, 1), one.clone()), ((1, 1), a11.clone()), ((2, 2), a22), ((3, 4), -a11.clone()), ((4, 4), &a11 * &a11)])?;
        l42_renorm(st)?;
    }
    st.normalize(1, 2)?;
    let c = st.co(1)?;
    if nz(&c[3]) || nz(&c[0]) {
        return Err(bug("L4_2 pencil normal form kept a Δ24 term"));
    }
    Ok(Target::Family(24, c[1].clone()))
}

fn pfaffian(c: &[FieldElem]) -> FieldElem {
    // Δ12, Δ13, Δ14, Δ23, Δ24, Δ34
    &(&(&c[0] * &c[5]) - &(&c[1] * &c[4])) + &(&c[2] * &c[3])
}

fn l41_pair(st: &mut State) -> Result<Target, RecognizeError> {
    let f = st.field();
    let one = f.one();
    let (c0, c1) = (st.co(0)?, st.co(1)?);
    if pfaffian(&c0).is_zero() {
        let sum: Vec<FieldElem> = c0.iter().zip(&c1).map(|(x, y)| x + y).collect();
        if nz(&pfaffian(&c1)) {
            st.swap(0, 1)?;
        } else if nz(&pfaffian(&sum)) {
            st.add_multiple(0, 1, &one)?;
        } else {
            return Err(bug("pencil of degenerate forms on the abelian quotient"));
        }
    }
    st.skew_canonical(0)?;
    let x = st.co(1)?[0].clone();
    st.add_multiple(1, 0, &-x)?;
    let c = st.co(1)?;
    if c[1].is_zero() {
        let (b, cc, d) = (&c[2], &c[3], &c[4]);
        if nz(b) {
            st.aut(&[((4, 3), one.clone())])?;
        } else if nz(cc) {
            st.aut(&[((2, 1), one.clone())])?;
        } else if nz(d) {
            st.aut(&[((2, 1), one.clone()), ((4, 3), one.clone())])?;
        } else {
            st.normalize(1, 5)?;
            st.add_multiple(0, 1, &-one.clone())?;
            let m = map_from(
                f,
                &[
                    vec![(4, one.clone())],
                    vec![(2, -one.clone()), (3, -one.clone())],
                    vec![(2, one.clone())],
                    vec![(1, -one.clone()), (4, -one.clone())],
                    vec![(5, one.clone()), (6, one.clone())],
                    vec![(5, one.clone())],
                ],
            );
            let targets = vec![st.form(&[(1, 2, one.clone()), (3, 4, one.clone())]), st.form(&[(1, 3, one.clone()), (3, 4, one.clone())])];
            st.literal(m, targets, "K2 onto K1_0")?;
        }
    }
    st.normalize(1, 1)?;
    let c = st.co(1)?;
    st.aut(&[((1, 2), -c[3].clone()), ((3, 4), -c[2].clone())])?;
    let c = st.co(1)?;
    if nz(&c[2]) || nz(&c[3]) {
        return Err(bug("abelian pencil normal form kept Δ14 or Δ23"));
    }
    let e = c[5].clone();
    if e.is_zero() {
        return Ok(Target::Family(22, c[4].clone()));
    }
    let u = e.inv()?;
    st.aut(&[((2, 2), u.clone()), ((4, 4), u)])?;
    st.scale(0, &e)?;
    let eps = st.co(1)?[4].clone();
    let quarter = f.from_ratio(1, 4)?;
    let half_ = f.from_ratio(1, 2)?;
    let o = || one.clone();
    let (m, delta) = if eps.is_zero() {
        (
            map_from(
                f,
                &[
                    vec![(4, f.from_i64(2))],
                    vec![(2, -quarter.clone()), (3, quarter.clone())],
                    vec![(3, -half_.clone())],
                    vec![(1, o()), (4, -o())],
                    vec![(5, -half_.clone()), (6, half_.clone())],
                    vec![(5, o())],
                ],
            ),
            o(),
        )
    } else if eps == -&quarter {
        (
            map_from(
                f,
                &[
                    vec![(1, f.from_i64(-2)), (4, f.from_i64(-4))],
                    vec![(2, half_.clone()), (3, half_.clone())],
                    vec![(2, f.from_i64(-2)), (3, -o())],
                    vec![(1, o()), (4, o())],
                    vec![(5, o()), (6, -o())],
                    vec![(6, f.from_i64(2))],
                ],
            ),
            f.zero(),
        )
    } else {
        let inv = eps.inv()?;
        (
            map_from(
                f,
                &[
                    vec![(1, &(&inv * &quarter) + &o()), (4, &inv * &half_)],
                    vec![(3, eps.clone())],
                    vec![(2, o()), (3, half_.clone())],
                    vec![(4, o())],
                    vec![(5, -half_.clone()), (6, &eps + &quarter)],
                    vec![(5, o())],
                ],
            ),
            &eps + &quarter,
        )
    };
    let targets = vec![st.form(&[(1, 2, o()), (3, 4, o())]), st.form(&[(1, 3, o()), (2, 4, delta.clone())])];
    st.literal(m, targets, "ψ onto L6_22")?;
    Ok(Target::Family(22, delta))
}

fn l52(st: &mut State) -> Result<Target, RecognizeError> {
    let one = st.field().one();
    let c = st.co(0)?;
    let (a11, a21, a12, a22) = super::clear_second_coordinate(&c[0], &c[3], &one)?;
    st.aut(&[((1, 1), a11), ((2, 1), a21), ((1, 2), a12), ((2, 2), a22)])?;
    let c = st.co(0)?;
    st.aut(&[((3, 4), -div(&c[1], &c[0])), ((3, 5), -div(&c[2], &c[0]))])?;
    let c = st.co(0)?;
    let g = c[6].clone();
    if g.is_zero() {
        return Err(bug("cocycle on L5_2 without Δ45 term"));
    }
    st.aut(&[((5, 2), div(&c[4], &g)), ((4, 2), -div(&c[5], &g))])?;
    st.aut(&[((4, 4), g.inv()?)])?;
    st.normalize(0, 0)?;
    Ok(Target::Fixed(6, 10))
}

fn l53(st: &mut State) -> Result<Target, RecognizeError> {
    st.normalize(0, 0)?;
    let c = st.co(0)?;
    let d = c[3].clone();
    if d.is_zero() {
        return Err(bug("cocycle on L5_3 without Δ25 term"));
    }
    st.aut(&[((5, 5), d.inv()?), ((2, 1), -div(&c[1], &d))])?;
    let cc = st.co(0)?[2].clone();
    if nz(&cc) {
        let c3 = &(&cc * &cc) * &cc;
        st.aut(&[((1, 1), cc.clone()), ((2, 2), cc), ((5, 5), c3)])?;
        st.normalize(0, 0)?;
        return Ok(Target::Fixed(6, 11));
    }
    Ok(Target::Fixed(6, 12))
}

fn l55(st: &mut State) -> Result<Target, RecognizeError> {
    let f = st.field();
    st.normalize(0, 1)?;
    let c = st.co(0)?;
    st.aut(&[((3, 1), -c[0].clone()), ((4, 2), c[2].clone())])?;
    let d = st.co(0)?[3].clone();
    if nz(&d) {
        st.aut(&[((1, 1), d)])?;
        st.normalize(0, 1)?;
        let one = f.one();
        let h = f.from_ratio(1, 2)?;
        let m = map_from(
            f,
            &[
                vec![(1, one.clone()), (4, h.clone())],
                vec![(2, one.clone()), (3, one.clone()), (5, h.clone())],
                vec![(3, one.clone()), (5, h)],
                vec![(4, one.clone())],
                vec![(5, one.clone())],
                vec![(6, one.clone())],
            ],
        );
        let target = st.form(&[(1, 5, one.clone()), (3, 4, one)]);
        st.literal(m, vec![target], "K_1 onto K_0")?;
    }
    Ok(Target::Fixed(6, 13))
}

fn l56(st: &mut State) -> Result<Target, RecognizeError> {
    let c = st.co(0)?;
    if nz(&c[2]) {
        st.normalize(0, 2)?;
        let c = st.co(0)?;
        let a42 = -half(&(&(&c[0] * &c[0]) + &c[1]));
        st.aut(&[((2, 1), -c[0].clone()), ((4, 2), a42)])?;
        return Ok(Target::Fixed(6, 14));
    }
    st.normalize(0, 0)?;
    let b = st.co(0)?[1].clone();
    st.aut(&[((2, 1), half(&b))])?;
    Ok(Target::Fixed(6, 15))
}

fn l57(st: &mut State) -> Result<Target, RecognizeError> {
    let c = st.co(0)?;
    if nz(&c[2]) {
        st.normalize(0, 2)?;
        let c = st.co(0)?;
        st.aut(&[((2, 1), -c[0].clone()), ((4, 2), -half(&c[1]))])?;
        return Ok(Target::Fixed(6, 16));
    }
    st.normalize(0, 0)?;
    let b = st.co(0)?[1].clone();
    if nz(&b) {
        st.aut(&[((1, 1), b.clone()), ((2, 2), &b * &b)])?;
        st.normalize(0, 0)?;
        return Ok(Target::Fixed(6, 17));
    }
    Ok(Target::Fixed(6, 18))
}

fn l58(st: &mut State) -> Result<Target, RecognizeError> {
    let f = st.field();
    let one = f.one();
    // a, b, c, d, e, f = Δ14, Δ15, Δ23, Δ24, Δ25+Δ34, Δ35
    let c = st.co(0)?;
    if nz(&c[4]) {
        if nz(&c[5]) {
            st.aut(&[((3, 2), -div(&c[4], &c[5]))])?;
        } else if nz(&c[3]) {
            st.aut(&[((2, 3), -div(&c[4], &c[3]))])?;
        } else {
            st.aut(&[((2, 3), one.clone()), ((3, 2), -one.clone())])?;
        }
    }
    let c = st.co(0)?;
    if nz(&c[4]) {
        return Err(bug("Δ25+Δ34 term survived on L5_8"));
    }
    if nz(&c[3]) {
        st.normalize(0, 3)?;
        let c = st.co(0)?;
        st.aut(&[((2, 1), -c[0].clone()), ((4, 3), -c[2].clone())])?;
        let c = st.co(0)?;
        if c[1].is_zero() {
            return Ok(Target::Family(19, c[5].clone()));
        }
        st.aut(&[((3, 3), c[1].inv()?)])?;
        let fp = st.co(0)?[5].clone();
        if fp.is_zero() {
            return Ok(Target::Fixed(6, 20));
        }
        let mut images: Vec<Vec<(usize, FieldElem)>> = (1..=6).map(|k| vec![(k, one.clone())]).collect();
        images[0].push((3, fp.inv()?));
        let target = st.form(&[(2, 4, one.clone()), (3, 5, fp.clone())]);
        st.literal(map_from(f, &images), vec![target], "K1_f onto L6_19(f)")?;
        return Ok(Target::Family(19, fp));
    }
    st.normalize(0, 5)?;
    let c = st.co(0)?;
    if c[0].is_zero() {
        return Err(bug("cocycle on L5_8 of rank one"));
    }
    st.aut(&[((2, 2), c[0].inv()?), ((5, 2), div(&c[2], &c[0]))])?;
    let b = st.co(0)?[1].clone();
    let ident = |f: crate::field::Field| -> Vec<Vec<(usize, FieldElem)>> { (1..=6).map(|k| vec![(k, f.one())]).collect() };
    if nz(&b) {
        st.aut(&[((2, 2), &b * &b), ((3, 3), b)])?;
        st.normalize(0, 5)?;
        let mut images = ident(f);
        images[0].push((3, one.clone()));
        let target = st.form(&[(1, 4, one.clone()), (3, 5, one.clone())]);
        st.literal(map_from(f, &images), vec![target], "K2_1 onto K2_0")?;
    }
    let perm = map_from(
        f,
        &[
            vec![(1, one.clone())],
            vec![(3, one.clone())],
            vec![(2, one.clone())],
            vec![(5, one.clone())],
            vec![(4, one.clone())],
            vec![(6, one.clone())],
        ],
    );
    let target = st.form(&[(1, 5, one.clone()), (2, 4, one)]);
    st.literal(perm, vec![target], "K2_0 onto L6_20")?;
    Ok(Target::Fixed(6, 20))
}

fn l59(st: &mut State) -> Result<Target, RecognizeError> {
    let one = st.field().one();
    let c = st.co(0)?;
    if nz(&c[1]) {
        if nz(&c[2]) {
            st.aut(&[((2, 1), -div(&c[1], &c[2]))])?;
        } else if nz(&c[0]) {
            st.aut(&[((1, 2), -div(&c[1], &c[0]))])?;
        } else {
            st.aut(&[((1, 2), one.clone()), ((2, 1), -one)])?;
        }
    }
    st.normalize(0, 0)?;
    let c = st.co(0)?;
    if nz(&c[1]) {
        return Err(bug("Δ15+Δ24 term survived on L5_9"));
    }
    Ok(Target::Family(21, c[2].clone()))
}
