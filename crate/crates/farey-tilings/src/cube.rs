//! Bhargava cubes, the Cayley hyperdeterminant and the action of triples of 2x2 matrices.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::ExactError;
use crate::exact::{int, Int, Mat2};

/// Eight integers `m_{ijk}`, `i, j, k ∈ {0, 1}`, stored at `4i + 2j + k`.
/// Displayed as `(m000 m010; m100 m110 | m001 m011; m101 m111)`: layers are `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BhargavaCube {
    m: [Int; 8],
}

const DISPLAY: [usize; 8] = [0, 2, 4, 6, 1, 3, 5, 7];

impl BhargavaCube {
    /// Entries in `(i, j, k)` lexicographic order.
    pub fn new(m: [Int; 8]) -> Self {
        BhargavaCube { m }
    }

    /// Entries in display order `m000 m010 m100 m110 m001 m011 m101 m111`.
    pub fn from_display(d: [Int; 8]) -> Self {
        let mut m: [Int; 8] = Default::default();
        for (x, v) in d.into_iter().enumerate() {
            m[DISPLAY[x]] = v;
        }
        BhargavaCube { m }
    }

    pub fn from_display_i64(d: [i64; 8]) -> Self {
        BhargavaCube::from_display(d.map(int))
    }

    pub fn display_order(&self) -> [Int; 8] {
        DISPLAY.map(|x| self.m[x].clone())
    }

    /// `𝐈 = (1 0; 0 0 | 0 0; 0 1)`.
    pub fn unit() -> Self {
        BhargavaCube::from_display_i64([1, 0, 0, 0, 0, 0, 0, 1])
    }

    /// `𝐈† = (1 0; 0 0 | 0 0; 0 -1)`.
    pub fn unit_dagger() -> Self {
        BhargavaCube::from_display_i64([1, 0, 0, 0, 0, 0, 0, -1])
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Int {
        &self.m[4 * i + 2 * j + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Int) {
        self.m[4 * i + 2 * j + k] = v;
    }

    pub fn entries(&self) -> &[Int; 8] {
        &self.m
    }

    /// Layer `k` as the matrix with rows `i` and columns `j`.
    pub fn layer(&self, k: usize) -> Mat2 {
        Mat2::new(
            self.get(0, 0, k).clone(),
            self.get(0, 1, k).clone(),
            self.get(1, 0, k).clone(),
            self.get(1, 1, k).clone(),
        )
    }

    /// Expanded Cayley hyperdeterminant.
    pub fn hyperdet(&self) -> Int {
        let [a000, a001, a010, a011, a100, a101, a110, a111] = &self.m;
        let sq = |x: &Int, y: &Int| x * x * y * y;
        let p = |w: &Int, x: &Int, y: &Int, z: &Int| w * x * y * z;
        sq(a000, a111) + sq(a001, a110) + sq(a010, a101) + sq(a100, a011)
            - int(2)
                * (p(a000, a001, a110, a111)
                    + p(a000, a010, a101, a111)
                    + p(a000, a100, a011, a111)
                    + p(a001, a010, a101, a110)
                    + p(a001, a100, a011, a110)
                    + p(a010, a100, a011, a101))
            + int(4) * (p(a000, a011, a101, a110) + p(a001, a010, a100, a111))
    }

    /// `((det(M1+M2) - det(M1-M2)) / 2)^2 - 4 det M1 det M2` over the two layers.
    pub fn hyperdet_by_layers(&self) -> Int {
        let (m1, m2) = (self.layer(0), self.layer(1));
        let sum = Mat2::new(&m1.a + &m2.a, &m1.b + &m2.b, &m1.c + &m2.c, &m1.d + &m2.d);
        let diff = Mat2::new(&m1.a - &m2.a, &m1.b - &m2.b, &m1.c - &m2.c, &m1.d - &m2.d);
        let half = (sum.det() - diff.det()) / 2;
        &half * &half - int(4) * m1.det() * m2.det()
    }

    /// Determinants of the six 2x2 faces, with `a..h = m000 m010 m100 m110 m001 m011 m101 m111`:
    /// `ad-bc, eh-fg, af-be, ch-dg, ag-ce, bh-fd`.
    pub fn cross_section_dets(&self) -> [Int; 6] {
        let [a, b, c, d, e, f, g, h] = self.display_order();
        [
            &a * &d - &b * &c,
            &e * &h - &f * &g,
            &a * &f - &b * &e,
            &c * &h - &d * &g,
            &a * &g - &c * &e,
            &b * &h - &f * &d,
        ]
    }

    /// Multiplies along one axis: `m'_{..i..} = Σ_p X_{ip} m_{..p..}`.
    pub fn act_axis(&self, axis: usize, x: &Mat2) -> BhargavaCube {
        let mut out = BhargavaCube { m: Default::default() };
        let rows = [[&x.a, &x.b], [&x.c, &x.d]];
        for idx in 0..8 {
            let bits = [(idx >> 2) & 1, (idx >> 1) & 1, idx & 1];
            let mut acc = Int::zero();
            for p in 0..2 {
                let mut src = bits;
                src[axis] = p;
                acc += rows[bits[axis]][p] * &self.m[4 * src[0] + 2 * src[1] + src[2]];
            }
            out.m[idx] = acc;
        }
        out
    }

    pub fn neg(&self) -> BhargavaCube {
        BhargavaCube { m: self.m.clone().map(|v| -v) }
    }
}

impl fmt::Display for BhargavaCube {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e, g, h, i] = self.display_order();
        write!(f, "({a} {b}; {c} {d} | {e} {g}; {h} {i})")
    }
}

/// A triple `(A, B, C)` of 2x2 integer matrices acting on the three axes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triple(pub [Mat2; 3]);

impl Triple {
    pub fn new(a: Mat2, b: Mat2, c: Mat2) -> Self {
        Triple([a, b, c])
    }

    pub fn identity() -> Self {
        Triple::splat(&Mat2::identity())
    }

    pub fn splat(m: &Mat2) -> Self {
        Triple([m.clone(), m.clone(), m.clone()])
    }

    pub fn is_sl2(&self) -> bool {
        self.0.iter().all(Mat2::is_sl2)
    }

    /// Componentwise product `self ∘ other`.
    pub fn compose(&self, other: &Triple) -> Triple {
        Triple([&self.0[0] * &other.0[0], &self.0[1] * &other.0[1], &self.0[2] * &other.0[2]])
    }

    pub fn inverse(&self) -> Result<Triple, ExactError> {
        Ok(Triple([self.0[0].inverse()?, self.0[1].inverse()?, self.0[2].inverse()?]))
    }

    /// The triple with `m` on `axis` and identities elsewhere.
    pub fn on_axis(axis: usize, m: Mat2) -> Triple {
        let mut t = Triple::identity();
        t.0[axis] = m;
        t
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

/// `m'_{ijk} = Σ A_{ip} B_{jq} C_{kr} m_{pqr}`.
pub fn act_triple(t: &Triple, c: &BhargavaCube) -> BhargavaCube {
    c.act_axis(0, &t.0[0]).act_axis(1, &t.0[1]).act_axis(2, &t.0[2])
}

/// `{(I,I,I), (I,-I,-I), (-I,I,-I), (-I,-I,I)}`.
pub fn unit_cube_stabilizer() -> [Triple; 4] {
    let (i, n) = (Mat2::identity(), Mat2::identity().neg());
    [
        Triple::new(i.clone(), i.clone(), i.clone()),
        Triple::new(i.clone(), n.clone(), n.clone()),
        Triple::new(n.clone(), i.clone(), n.clone()),
        Triple::new(n.clone(), n, i),
    ]
}

pub fn stabilizes(t: &Triple, c: &BhargavaCube) -> bool {
    act_triple(t, c) == *c
}

/// Brute force over `SL_2(Z)` triples with entries in `[-bound, bound]` fixing `𝐈`,
/// as `[a, b, c, d]` rows for each component.
pub fn stabilizer_search(bound: i64) -> Vec<[[i64; 4]; 3]> {
    let mut mats = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                for d in -bound..=bound {
                    if a * d - b * c == 1 {
                        mats.push([a, b, c, d]);
                    }
                }
            }
        }
    }
    let col = |m: &[i64; 4], i: usize, p: usize| m[2 * i + p];
    let mut out = Vec::new();
    for x in &mats {
        for y in &mats {
            for z in &mats {
                let fixes = (0..8).all(|idx| {
                    let (i, j, k) = ((idx >> 2) & 1, (idx >> 1) & 1, idx & 1);
                    let v = col(x, i, 0) * col(y, j, 0) * col(z, k, 0) + col(x, i, 1) * col(y, j, 1) * col(z, k, 1);
                    v == i64::from(idx == 0 || idx == 7)
                });
                if fixes {
                    out.push([*x, *y, *z]);
                }
            }
        }
    }
    out
}

/// `(1 0; 0 -1)`, used for sign changes along an axis.
pub fn q_matrix() -> Mat2 {
    Mat2::reflection()
}

/// `(0 1; -1 0)`.
pub fn j_matrix() -> Mat2 {
    Mat2::from_i64(0, 1, -1, 0)
}

pub fn is_unit(c: &BhargavaCube) -> bool {
    *c == BhargavaCube::unit()
}

pub fn is_nonsingular(c: &BhargavaCube) -> bool {
    !c.hyperdet().is_zero()
}

pub fn hyperdet_is_one(c: &BhargavaCube) -> bool {
    c.hyperdet().is_one()
}
