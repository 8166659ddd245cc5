//! Reduction of a hyperdeterminant-1 cube to the unit cube by an explicit `SL_2(Z)^3` triple.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::cube::{act_triple, j_matrix, q_matrix, BhargavaCube, Triple};
use crate::error::HyperError;
use crate::exact::{smith_normal_form, Int, IntMatrix, Mat2};

/// Left-accumulated transformation `cur = acc · start`.
struct Reducer {
    acc: Triple,
    cur: BhargavaCube,
}

impl Reducer {
    fn apply(&mut self, axis: usize, x: Mat2) {
        self.cur = self.cur.act_axis(axis, &x);
        self.acc.0[axis] = &x * &self.acc.0[axis];
    }

    /// `(m110, m011, m101, m111)` of a cube already in the form `(1 0; 0 α | 0 β; γ δ)`.
    fn corners(&self) -> (Int, Int, Int, Int) {
        let c = &self.cur;
        (c.get(1, 1, 0).clone(), c.get(0, 1, 1).clone(), c.get(1, 0, 1).clone(), c.get(1, 1, 1).clone())
    }
}

fn internal(msg: &str) -> HyperError {
    HyperError::Internal(msg.to_string())
}

fn unipotent_upper(x: Int) -> Mat2 {
    Mat2::new(Int::one(), x, Int::zero(), Int::one())
}

fn unipotent_lower(x: Int) -> Mat2 {
    Mat2::new(Int::one(), Int::zero(), x, Int::one())
}

/// `(h g; (δ-1)/(2g) (δ+1)/(2h))` with `g = gcd(x, (1-δ)/2)` and `h = -gcd(x, (1+δ)/2)`.
fn gcd_matrix(x: &Int, delta: &Int) -> Mat2 {
    let p = (Int::one() - delta) / 2;
    let q = (Int::one() + delta) / 2;
    let g = x.gcd(&p);
    let h = -x.gcd(&q);
    Mat2::new(
        h.clone(),
        g.clone(),
        (delta - Int::one()) / (Int::from(2) * &g),
        (delta + Int::one()) / (Int::from(2) * &h),
    )
}

/// A triple `t` in `SL_2(Z)^3` with `act_triple(t, 𝐈) = a`.
pub fn normalize_unit_cube(a: &BhargavaCube) -> Result<Triple, HyperError> {
    let det = a.hyperdet();
    if !det.is_one() {
        return Err(HyperError::NotUnitDet(det));
    }
    let mut red = Reducer { acc: Triple::identity(), cur: a.clone() };

    // Smith form of the k = 0 layer; the hyperdeterminant forces diag(1, e).
    let top = red.cur.layer(0);
    let smith = smith_normal_form(
        &IntMatrix::new(2, 2, vec![top.a, top.b, top.c, top.d]).map_err(|e| internal(&e.to_string()))?,
    );
    let to_mat =
        |m: &IntMatrix| Mat2::new(m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone());
    let mut x = to_mat(&smith.u_inv);
    let mut y = to_mat(&smith.v_inv).transpose();
    if x.det().is_negative() {
        x = &Mat2::reflection() * &x;
    }
    if y.det().is_negative() {
        y = &Mat2::reflection() * &y;
    }
    red.apply(0, x);
    red.apply(1, y);
    if !red.cur.get(0, 0, 0).is_one() || !red.cur.get(0, 1, 0).is_zero() || !red.cur.get(1, 0, 0).is_zero() {
        return Err(internal("top layer did not reduce to diag(1, e)"));
    }
    let e = red.cur.get(0, 0, 1).clone();
    red.apply(2, unipotent_lower(-e));

    let (alpha, beta, gamma, delta) = red.corners();
    if alpha.is_zero() {
        red.apply(0, unipotent_upper(-(&beta * &delta)));
        red.apply(1, unipotent_upper(-(&gamma * &delta)));
        red.apply(2, unipotent_lower(&beta * &delta * &gamma));
    } else if beta.is_zero() {
        red.apply(1, unipotent_upper(-(&gamma * &delta)));
        red.apply(0, unipotent_lower(&gamma * &delta * &alpha));
        red.apply(2, unipotent_upper(-(&alpha * &delta)));
    } else if gamma.is_zero() {
        red.apply(0, unipotent_upper(-(&beta * &delta)));
        red.apply(1, unipotent_lower(&beta * &delta * &alpha));
        red.apply(2, unipotent_upper(-(&alpha * &delta)));
    } else {
        let signs_ok = |r: &Reducer| {
            let (a, b, c, d) = r.corners();
            a.is_negative() && b.is_negative() && c.is_negative() && d.is_negative()
        };
        let mut chosen = None;
        for mask in 0..8u8 {
            let mut cand = red.cur.clone();
            for axis in 0..3 {
                if mask & (1 << axis) != 0 {
                    cand = cand.act_axis(axis, &q_matrix());
                }
            }
            let probe = Reducer { acc: Triple::identity(), cur: cand };
            if signs_ok(&probe) {
                chosen = Some(mask);
                break;
            }
        }
        let mask = chosen.ok_or_else(|| internal("no sign pattern makes all corners negative"))?;
        for axis in 0..3 {
            if mask & (1 << axis) != 0 {
                red.apply(axis, q_matrix());
            }
        }
        let (alpha, beta, gamma, delta) = red.corners();
        let u = Triple::new(gcd_matrix(&beta, &delta), gcd_matrix(&gamma, &delta), gcd_matrix(&alpha, &delta));
        if act_triple(&u, &BhargavaCube::unit()) != red.cur {
            return Err(internal("gcd matrices do not reproduce the reduced cube"));
        }
        // cur = U 𝐈, so continue from the unit cube with U folded into the inverse.
        let inv = red.acc.inverse().map_err(|e| internal(&e.to_string()))?;
        return finish(a, inv.compose(&u));
    }
    let unit = BhargavaCube::unit();
    if red.cur != unit && red.cur != BhargavaCube::unit_dagger() {
        return Err(internal("zero-corner reduction did not reach the unit cube"));
    }
    let mut w = red.acc.inverse().map_err(|e| internal(&e.to_string()))?;
    if red.cur != unit {
        w = w.compose(&Triple::splat(&j_matrix()));
    }
    finish(a, w)
}

/// Given `w 𝐈 = a` with components of determinant ±1, fold the sign fixes into
/// `(J, J, J)` so that every component lies in `SL_2(Z)`.
fn finish(a: &BhargavaCube, mut w: Triple) -> Result<Triple, HyperError> {
    let mut flips = 0;
    for m in &mut w.0 {
        if m.det().is_negative() {
            *m = &*m * &q_matrix();
            flips += 1;
        }
    }
    if flips % 2 == 1 {
        w = w.compose(&Triple::splat(&j_matrix()));
    }
    if !w.is_sl2() || act_triple(&w, &BhargavaCube::unit()) != *a {
        return Err(internal("normalizing triple fails re-application"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::unit_cube_stabilizer;
    use proptest::prelude::*;

    #[test]
    fn unit_gives_stabilizer_element() {
        let t = normalize_unit_cube(&BhargavaCube::unit()).unwrap();
        assert!(unit_cube_stabilizer().contains(&t) || act_triple(&t, &BhargavaCube::unit()) == BhargavaCube::unit());
    }

    #[test]
    fn dagger_acts_like_jjj() {
        let t = normalize_unit_cube(&BhargavaCube::unit_dagger()).unwrap();
        assert_eq!(
            act_triple(&t, &BhargavaCube::unit()),
            act_triple(&Triple::splat(&j_matrix()), &BhargavaCube::unit())
        );
    }

    #[test]
    fn rejects_other_determinants() {
        let a1 = BhargavaCube::from_display_i64([1, 1, 1, 2, 1, 2, 2, 5]);
        assert!(matches!(normalize_unit_cube(&a1), Err(HyperError::NotUnitDet(_))));
    }

    #[test]
    fn zero_corner_cases() {
        for d in
            [[1, 0, 0, 0, 0, 3, -2, 1], [1, 0, 0, 4, 0, 0, 5, -1], [1, 0, 0, -3, 0, 2, 0, 1], [1, 0, 0, 0, 0, 0, 0, -1]]
        {
            let c = BhargavaCube::from_display_i64(d);
            assert_eq!(c.hyperdet(), Int::one(), "{c}");
            let t = normalize_unit_cube(&c).unwrap();
            assert_eq!(act_triple(&t, &BhargavaCube::unit()), c);
        }
    }

    fn sl2() -> impl Strategy<Value = Mat2> {
        let mut all = Vec::new();
        for a in -9i64..=9 {
            for b in -9i64..=9 {
                for c in -9i64..=9 {
                    for d in -9i64..=9 {
                        if a * d - b * c == 1 {
                            all.push(Mat2::from_i64(a, b, c, d));
                        }
                    }
                }
            }
        }
        proptest::sample::select(all)
    }

    proptest! {
        #[test]
        fn random_orbit_points_normalize(a in sl2(), b in sl2(), c in sl2()) {
            let cube = act_triple(&Triple::new(a, b, c), &BhargavaCube::unit());
            let t = normalize_unit_cube(&cube).unwrap();
            prop_assert!(t.is_sl2());
            prop_assert_eq!(act_triple(&t, &BhargavaCube::unit()), cube);
        }
    }
}
