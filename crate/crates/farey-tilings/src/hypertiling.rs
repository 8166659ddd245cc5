//! Finite windows of integer hypertilings: verification, synchronisation, cross
//! sections, recurrences, construction from a cube and three paths, and decomposition.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::cube::{act_triple, BhargavaCube, Triple};
use crate::error::HyperError;
use crate::exact::{int, smith_normal_form, Int, IntMatrix, Mat2, Rat};
use crate::farey::{FareyPath, FareyVertex};
use crate::normalize::normalize_unit_cube;
use crate::tiling::{is_tame, Tiling};

/// A 3-D window `m_{ijk}` with index ranges `base[a] .. base[a] + dims[a]`,
/// each containing 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypertiling {
    base: [i64; 3],
    dims: [usize; 3],
    entries: Vec<Int>,
}

impl Hypertiling {
    /// `nested[i][j][k]`.
    pub fn new(base: [i64; 3], nested: Vec<Vec<Vec<Int>>>) -> Result<Self, HyperError> {
        let d0 = nested.len();
        let d1 = nested.first().map_or(0, Vec::len);
        let d2 = nested.first().and_then(|p| p.first()).map_or(0, Vec::len);
        if d0 < 2 || d1 < 2 || d2 < 2 {
            return Err(HyperError::TooSmall);
        }
        if nested.iter().any(|p| p.len() != d1 || p.iter().any(|q| q.len() != d2)) {
            return Err(HyperError::Ragged);
        }
        Hypertiling::from_flat(base, [d0, d1, d2], nested.into_iter().flatten().flatten().collect())
    }

    pub fn from_flat(base: [i64; 3], dims: [usize; 3], entries: Vec<Int>) -> Result<Self, HyperError> {
        if dims.iter().any(|&d| d < 2) {
            return Err(HyperError::TooSmall);
        }
        if entries.len() != dims[0] * dims[1] * dims[2] {
            return Err(HyperError::Ragged);
        }
        for a in 0..3 {
            let last = base[a] + dims[a] as i64 - 1;
            if base[a] > 0 || last < 1 {
                return Err(HyperError::IndexSet { first: base[a], last });
            }
        }
        Ok(Hypertiling { base, dims, entries })
    }

    /// Layers as usually printed: `layers[k][i][j]`.
    pub fn from_layers_i64(base: [i64; 3], layers: &[Vec<Vec<i64>>]) -> Result<Self, HyperError> {
        let d2 = layers.len();
        let d0 = layers.first().map_or(0, Vec::len);
        let d1 = layers.first().and_then(|l| l.first()).map_or(0, Vec::len);
        if layers.iter().any(|l| l.len() != d0 || l.iter().any(|r| r.len() != d1)) {
            return Err(HyperError::Ragged);
        }
        let nested =
            (0..d0).map(|i| (0..d1).map(|j| (0..d2).map(|k| int(layers[k][i][j])).collect()).collect()).collect();
        Hypertiling::new(base, nested)
    }

    pub fn base(&self) -> [i64; 3] {
        self.base
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    /// Inclusive index range along `axis`.
    pub fn range(&self, axis: usize) -> (i64, i64) {
        (self.base[axis], self.base[axis] + self.dims[axis] as i64 - 1)
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    /// Entry at local (zero-based) positions.
    pub fn at(&self, p: usize, q: usize, r: usize) -> &Int {
        &self.entries[(p * self.dims[1] + q) * self.dims[2] + r]
    }

    fn at_pos(&self, pos: [usize; 3]) -> &Int {
        self.at(pos[0], pos[1], pos[2])
    }

    /// Entry at indices `(i, j, k)`; panics outside the window.
    pub fn get(&self, i: i64, j: i64, k: i64) -> &Int {
        let p = self.local([i, j, k]).unwrap_or_else(|| panic!("index ({i},{j},{k}) outside hypertiling window"));
        self.at_pos(p)
    }

    fn local(&self, idx: [i64; 3]) -> Option<[usize; 3]> {
        let mut out = [0usize; 3];
        for a in 0..3 {
            let p = usize::try_from(idx[a] - self.base[a]).ok()?;
            if p >= self.dims[a] {
                return None;
            }
            out[a] = p;
        }
        Some(out)
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Int>>> {
        (0..self.dims[0])
            .map(|p| (0..self.dims[1]).map(|q| (0..self.dims[2]).map(|r| self.at(p, q, r).clone()).collect()).collect())
            .collect()
    }

    /// The 2x2x2 block with corner at local position `(p, q, r)`.
    pub fn block(&self, p: usize, q: usize, r: usize) -> BhargavaCube {
        let mut m: [Int; 8] = Default::default();
        for (idx, slot) in m.iter_mut().enumerate() {
            *slot = self.at(p + (idx >> 2), q + ((idx >> 1) & 1), r + (idx & 1)).clone();
        }
        BhargavaCube::new(m)
    }

    pub fn negated(&self) -> Hypertiling {
        Hypertiling { base: self.base, dims: self.dims, entries: self.entries.iter().map(|v| -v).collect() }
    }

    /// Rows of the flattening along `axis`: one row per index on that axis.
    pub fn flatten(&self, axis: usize) -> IntMatrix {
        let (o1, o2) = other_axes(axis);
        let (n1, n2) = (self.dims[o1], self.dims[o2]);
        let mut m = IntMatrix::zeros(self.dims[axis], n1 * n2);
        for x in 0..self.dims[axis] {
            for y in 0..n1 {
                for z in 0..n2 {
                    let mut pos = [0; 3];
                    pos[axis] = x;
                    pos[o1] = y;
                    pos[o2] = z;
                    m.set(x, y * n2 + z, self.at_pos(pos).clone());
                }
            }
        }
        m
    }
}

impl fmt::Display for Hypertiling {
    /// One block per `k`, rows `i`, columns `j`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.entries.iter().map(|v| v.to_string().len()).max().unwrap_or(1);
        for r in 0..self.dims[2] {
            if r > 0 {
                writeln!(f)?;
            }
            writeln!(f, "k = {}", self.base[2] + r as i64)?;
            for p in 0..self.dims[0] {
                let row: Vec<String> =
                    (0..self.dims[1]).map(|q| format!("{:>width$}", self.at(p, q, r).to_string())).collect();
                writeln!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

fn other_axes(axis: usize) -> (usize, usize) {
    match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

fn check_axis(axis: usize) -> Result<(), HyperError> {
    if axis > 2 {
        return Err(HyperError::BadAxis);
    }
    Ok(())
}

/// The common hyperdeterminant `N != 0` of all 2x2x2 blocks.
pub fn verify_hypertiling(h: &Hypertiling) -> Result<Int, HyperError> {
    let n = h.block(0, 0, 0).hyperdet();
    if n.is_zero() {
        return Err(HyperError::Singular);
    }
    let [d0, d1, d2] = h.dims;
    for p in 0..d0 - 1 {
        for q in 0..d1 - 1 {
            for r in 0..d2 - 1 {
                let found = h.block(p, q, r).hyperdet();
                if found != n {
                    return Err(HyperError::InconsistentBlock {
                        i: h.base[0] + p as i64,
                        j: h.base[1] + q as i64,
                        k: h.base[2] + r as i64,
                        expected: n,
                        found,
                    });
                }
            }
        }
    }
    Ok(n)
}

/// A 3x2 stack `(a b; c d; e f)` of two length-3 fibers with `ad - bc != cf - de`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyncViolation {
    /// Direction of the fibers.
    pub axis: usize,
    /// First index of the fibers along `axis`.
    pub start: i64,
    /// Positions of the two fibers in the remaining two axes, in increasing axis order.
    pub fibers: [(i64, i64); 2],
    pub stack: [[Int; 2]; 3],
}

impl SyncViolation {
    pub fn stack_i64(&self) -> Option<[[i64; 2]; 3]> {
        use num_traits::ToPrimitive;
        let mut out = [[0; 2]; 3];
        for (row, src) in out.iter_mut().zip(&self.stack) {
            row[0] = src[0].to_i64()?;
            row[1] = src[1].to_i64()?;
        }
        Some(out)
    }
}

/// Every stack violating the synchronisation identity, over all fiber directions,
/// all 2x2 squares in the other two axes and all pairs of fibers through a square.
pub fn synchronisation_violations(h: &Hypertiling) -> Vec<SyncViolation> {
    let mut out = Vec::new();
    for axis in 0..3 {
        let (o1, o2) = other_axes(axis);
        if h.dims[axis] < 3 {
            continue;
        }
        for x in 0..h.dims[axis] - 2 {
            for y in 0..h.dims[o1] - 1 {
                for z in 0..h.dims[o2] - 1 {
                    let corners = [(y, z), (y, z + 1), (y + 1, z), (y + 1, z + 1)];
                    for s in 0..4 {
                        for t in s + 1..4 {
                            let fiber = |(cy, cz): (usize, usize), step: usize| {
                                let mut pos = [0; 3];
                                pos[axis] = x + step;
                                pos[o1] = cy;
                                pos[o2] = cz;
                                h.at_pos(pos).clone()
                            };
                            let stack: [[Int; 2]; 3] =
                                [0, 1, 2].map(|step| [fiber(corners[s], step), fiber(corners[t], step)]);
                            let [[a, b], [c, d], [e, f]] = &stack;
                            if a * d - b * c != c * f - d * e {
                                let label = |(cy, cz): (usize, usize)| (h.base[o1] + cy as i64, h.base[o2] + cz as i64);
                                out.push(SyncViolation {
                                    axis,
                                    start: h.base[axis] + x as i64,
                                    fibers: [label(corners[s]), label(corners[t])],
                                    stack,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn is_synchronised(h: &Hypertiling) -> bool {
    synchronisation_violations(h).is_empty()
}

/// The 2-D slice at `index` along `axis`, with the other ranges inherited.
pub fn cross_section(h: &Hypertiling, axis: usize, index: i64) -> Result<Tiling, HyperError> {
    check_axis(axis)?;
    let (first, last) = h.range(axis);
    if index < first || index > last {
        return Err(HyperError::OutOfRange(index));
    }
    let x = (index - first) as usize;
    let (o1, o2) = other_axes(axis);
    let rows = (0..h.dims[o1])
        .map(|y| {
            (0..h.dims[o2])
                .map(|z| {
                    let mut pos = [0; 3];
                    pos[axis] = x;
                    pos[o1] = y;
                    pos[o2] = z;
                    h.at_pos(pos).clone()
                })
                .collect()
        })
        .collect();
    Ok(Tiling::new(h.base[o1], h.base[o2], rows)?)
}

pub fn cross_sections(h: &Hypertiling, axis: usize) -> Result<Vec<Tiling>, HyperError> {
    check_axis(axis)?;
    let (first, last) = h.range(axis);
    (first..=last).map(|x| cross_section(h, axis, x)).collect()
}

/// Synchronised, and every cross section is a tame tiling.
pub fn is_tame_hypertiling(h: &Hypertiling) -> bool {
    if verify_hypertiling(h).is_err() || !is_synchronised(h) {
        return false;
    }
    (0..3).all(|axis| cross_sections(h, axis).map(|cs| cs.iter().all(is_tame)).unwrap_or(false))
}

/// Coefficients with `m_{x-1} + m_{x+1} = c_x m_x` along every fiber of each axis,
/// for the interior indices `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperRecurrence {
    /// First interior index per axis.
    pub base: [i64; 3],
    pub coefficients: [Vec<Rat>; 3],
}

pub fn hyper_recurrence(h: &Hypertiling) -> Result<HyperRecurrence, HyperError> {
    let mut coefficients: [Vec<Rat>; 3] = Default::default();
    for (axis, coeffs) in coefficients.iter_mut().enumerate() {
        let (o1, o2) = other_axes(axis);
        for x in 1..h.dims[axis] - 1 {
            let index = h.base[axis] + x as i64;
            let triples: Vec<[Int; 3]> = (0..h.dims[o1])
                .flat_map(|y| (0..h.dims[o2]).map(move |z| (y, z)))
                .map(|(y, z)| {
                    [x - 1, x, x + 1].map(|w| {
                        let mut pos = [0; 3];
                        pos[axis] = w;
                        pos[o1] = y;
                        pos[o2] = z;
                        h.at_pos(pos).clone()
                    })
                })
                .collect();
            let pivot = triples.iter().find(|t| !t[1].is_zero()).ok_or(HyperError::Recurrence { axis, index })?;
            let c = Rat::new(&pivot[0] + &pivot[2], pivot[1].clone());
            for [prev, mid, next] in &triples {
                if Rat::from_integer(prev + next) != &c * Rat::from_integer(mid.clone()) {
                    return Err(HyperError::Recurrence { axis, index });
                }
            }
            coeffs.push(c);
        }
    }
    Ok(HyperRecurrence { base: h.base.map(|b| b + 1), coefficients })
}

/// `m_{ijk} = Σ A_{pqr} u_{ip} v_{jq} w_{kr}` over the index ranges of the paths.
pub fn construct_hypertiling(a: &BhargavaCube, paths: [&FareyPath; 3]) -> Result<Hypertiling, HyperError> {
    if a.hyperdet().is_zero() {
        return Err(HyperError::Singular);
    }
    if paths.iter().any(|p| !p.is_minimal()) {
        return Err(HyperError::Path(crate::error::PathError::NotMinimal));
    }
    let coords = paths.map(|p| p.vertices().iter().map(|v| [v.a.clone(), v.b.clone()]).collect::<Vec<_>>());
    let dims = coords.each_ref().map(Vec::len);
    let mut entries = Vec::with_capacity(dims[0] * dims[1] * dims[2]);
    for u in &coords[0] {
        for v in &coords[1] {
            for w in &coords[2] {
                let mut acc = Int::zero();
                for (idx, coef) in a.entries().iter().enumerate() {
                    if !coef.is_zero() {
                        acc += coef * &u[idx >> 2] * &v[(idx >> 1) & 1] * &w[idx & 1];
                    }
                }
                entries.push(acc);
            }
        }
    }
    Hypertiling::from_flat(paths.map(FareyPath::base), dims, entries)
}

/// A cube and three minimal paths reconstructing a hypertiling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperDecomposition {
    pub cube: BhargavaCube,
    pub paths: [FareyPath; 3],
}

impl HyperDecomposition {
    pub fn levels(&self) -> [Int; 3] {
        self.paths.each_ref().map(|p| p.level().clone())
    }

    /// `(R S T)^2 Det A`.
    pub fn n(&self) -> Int {
        let [r, s, t] = self.levels();
        let rst = r * s * t;
        &rst * &rst * self.cube.hyperdet()
    }
}

/// Contracts `axis` against the first two rows of `rows`.
fn contract(dims: [usize; 3], data: &[Int], axis: usize, rows: &IntMatrix) -> ([usize; 3], Vec<Int>) {
    let mut out_dims = dims;
    out_dims[axis] = 2;
    let mut out = vec![Int::zero(); out_dims[0] * out_dims[1] * out_dims[2]];
    for p in 0..dims[0] {
        for q in 0..dims[1] {
            for r in 0..dims[2] {
                let v = &data[(p * dims[1] + q) * dims[2] + r];
                if v.is_zero() {
                    continue;
                }
                let src = [p, q, r][axis];
                for t in 0..2 {
                    let mut pos = [p, q, r];
                    pos[axis] = t;
                    out[(pos[0] * out_dims[1] + pos[1]) * out_dims[2] + pos[2]] += rows.get(t, src) * v;
                }
            }
        }
    }
    (out_dims, out)
}

/// Recovers a nonsingular cube and three minimal paths with positive levels from a
/// tame hypertiling, so that `construct_hypertiling` reproduces it exactly.
pub fn decompose_hypertiling(h: &Hypertiling) -> Result<HyperDecomposition, HyperError> {
    verify_hypertiling(h)?;
    let mut coords: Vec<Vec<[Int; 2]>> = Vec::with_capacity(3);
    let mut dims = h.dims;
    let mut data = h.entries.clone();
    for axis in 0..3 {
        let smith = smith_normal_form(&h.flatten(axis));
        if smith.rank() != 2 {
            return Err(HyperError::NotTame);
        }
        let (nd, nv) = contract(dims, &data, axis, &smith.u_inv);
        dims = nd;
        data = nv;
        coords.push((0..h.dims[axis]).map(|x| [smith.u.get(x, 0).clone(), smith.u.get(x, 1).clone()]).collect());
    }
    let mut cube =
        BhargavaCube::new(data.try_into().map_err(|_| HyperError::Internal("contracted cube has wrong size".into()))?);

    let mut paths = Vec::with_capacity(3);
    for (axis, mut pts) in coords.into_iter().enumerate() {
        let minor = |p: &[[Int; 2]], x: usize| &p[x][0] * &p[x + 1][1] - &p[x][1] * &p[x + 1][0];
        let level = minor(&pts, 0);
        if (1..pts.len() - 1).any(|x| minor(&pts, x) != level) || level.is_zero() {
            return Err(HyperError::NotTame);
        }
        if level.is_negative() {
            for pt in &mut pts {
                pt[1] = -&pt[1];
            }
            cube = cube.act_axis(axis, &Mat2::reflection());
        }
        let vertices = pts.into_iter().map(|[a, b]| FareyVertex::new(a, b)).collect();
        let path = FareyPath::new(level.abs(), h.base[axis], vertices)?;
        let (canon, x) = path.canonical_form()?;
        cube = cube.act_axis(axis, &x.inverse().map_err(|e| HyperError::Internal(e.to_string()))?.transpose());
        paths.push(canon);
    }
    let paths: [FareyPath; 3] = paths.try_into().map_err(|_| HyperError::Internal("expected three paths".into()))?;
    let rebuilt = construct_hypertiling(&cube, [&paths[0], &paths[1], &paths[2]])?;
    if rebuilt != *h {
        return Err(HyperError::NotTame);
    }
    Ok(HyperDecomposition { cube, paths })
}

/// Decomposition of a tame 1-hypertiling as `m_{ijk} = a_i c_j e_k + b_i d_j f_k`.
/// The paths are determined up to the stabilizer of the unit cube.
pub fn decompose_unit_hypertiling(h: &Hypertiling) -> Result<[FareyPath; 3], HyperError> {
    let dec = decompose_hypertiling(h)?;
    let det = dec.cube.hyperdet();
    if !det.is_one() {
        return Err(HyperError::NotUnitDet(det));
    }
    let t = normalize_unit_cube(&dec.cube)?;
    let mut out = Vec::with_capacity(3);
    for (axis, p) in dec.paths.iter().enumerate() {
        out.push(p.apply(&t.0[axis].transpose())?);
    }
    let out: [FareyPath; 3] = out.try_into().map_err(|_| HyperError::Internal("expected three paths".into()))?;
    if construct_hypertiling(&BhargavaCube::unit(), [&out[0], &out[1], &out[2]])? != *h {
        return Err(HyperError::Internal("unit decomposition does not reconstruct".into()));
    }
    Ok(out)
}

/// Acts on the paths of a decomposition by a triple `(X, Y, Z)` of `SL_2(Z)` matrices
/// while moving the cube by the inverse transposes; the hypertiling is unchanged.
pub fn transfer(dec: &HyperDecomposition, t: &Triple) -> Result<HyperDecomposition, HyperError> {
    if !t.is_sl2() {
        return Err(HyperError::NotSl2);
    }
    let inv_t = t.inverse().map_err(|e| HyperError::Internal(e.to_string()))?;
    let cube = act_triple(&Triple(inv_t.0.map(|m| m.transpose())), &dec.cube);
    let mut paths = Vec::with_capacity(3);
    for (axis, p) in dec.paths.iter().enumerate() {
        paths.push(p.apply(&t.0[axis])?);
    }
    let paths = paths.try_into().map_err(|_| HyperError::Internal("expected three paths".into()))?;
    Ok(HyperDecomposition { cube, paths })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::cube::unit_cube_stabilizer;

    pub(crate) fn unit_hyper_paths() -> [FareyPath; 3] {
        [
            FareyPath::from_i64(1, 0, &[(1, 2), (1, 3), (0, 1), (-1, 4), (-1, 3)]).unwrap(),
            FareyPath::from_i64(1, 0, &[(2, 1), (5, 3), (3, 2), (4, 3), (5, 4)]).unwrap(),
            FareyPath::from_i64(1, 0, &[(1, 1), (2, 3), (3, 5), (1, 2), (2, 5)]).unwrap(),
        ]
    }

    pub(crate) fn unit_hyper() -> Hypertiling {
        let layers: Vec<Vec<Vec<i64>>> = vec![
            vec![
                vec![4, 11, 7, 10, 13],
                vec![5, 14, 9, 13, 17],
                vec![1, 3, 2, 3, 4],
                vec![2, 7, 5, 8, 11],
                vec![1, 4, 3, 5, 7],
            ],
            vec![
                vec![10, 28, 18, 26, 34],
                vec![13, 37, 24, 35, 46],
                vec![3, 9, 6, 9, 12],
                vec![8, 26, 18, 28, 38],
                vec![5, 17, 12, 19, 26],
            ],
            vec![
                vec![16, 45, 29, 42, 55],
                vec![21, 60, 39, 57, 75],
                vec![5, 15, 10, 15, 20],
                vec![14, 45, 31, 48, 65],
                vec![9, 30, 21, 33, 45],
            ],
            vec![
                vec![6, 17, 11, 16, 21],
                vec![8, 23, 15, 22, 29],
                vec![2, 6, 4, 6, 8],
                vec![6, 19, 13, 20, 27],
                vec![4, 13, 9, 14, 19],
            ],
            vec![
                vec![14, 40, 26, 38, 50],
                vec![19, 55, 36, 53, 70],
                vec![5, 15, 10, 15, 20],
                vec![16, 50, 34, 52, 70],
                vec![11, 35, 24, 37, 50],
            ],
        ];
        Hypertiling::from_layers_i64([0, 0, 0], &layers).unwrap()
    }

    pub(crate) fn sixty_five() -> Hypertiling {
        let layers: Vec<Vec<Vec<i64>>> = vec![
            vec![vec![0, -1, 0], vec![8, 0, -8], vec![0, 1, 0]],
            vec![vec![0, -1, 0], vec![1, 0, -1], vec![0, 1, 0]],
            vec![vec![0, -7, 0], vec![4, 0, -4], vec![0, 7, 0]],
        ];
        Hypertiling::from_layers_i64([0, 0, 0], &layers).unwrap()
    }

    #[test]
    fn unit_hyper_reproduced() {
        let [u, v, w] = unit_hyper_paths();
        let h = construct_hypertiling(&BhargavaCube::unit(), [&u, &v, &w]).unwrap();
        assert_eq!(h, unit_hyper());
        assert_eq!(verify_hypertiling(&h).unwrap(), int(1));
        assert!(is_synchronised(&h));
        assert!(is_tame_hypertiling(&h));
    }

    #[test]
    fn unit_hyper_layer_sections() {
        let h = unit_hyper();
        let ns: Vec<Int> =
            cross_sections(&h, 2).unwrap().iter().map(|t| crate::tiling::verify_n_tiling(t).unwrap()).collect();
        assert_eq!(ns, [1, 6, 15, 2, 10].map(int));
    }

    #[test]
    fn unit_hyper_recurrences_are_itineraries() {
        let rec = hyper_recurrence(&unit_hyper()).unwrap();
        for (axis, p) in unit_hyper_paths().iter().enumerate() {
            assert_eq!(rec.coefficients[axis], p.itinerary().values);
        }
    }

    #[test]
    fn unit_hyper_unit_decomposition_up_to_stabilizer() {
        let h = unit_hyper();
        let got = decompose_unit_hypertiling(&h).unwrap();
        let want = unit_hyper_paths();
        let hit = unit_cube_stabilizer().iter().any(|s| {
            (0..3).all(|a| {
                let p = if s.0[a] == Mat2::identity() { want[a].clone() } else { want[a].negated() };
                p == got[a]
            })
        });
        assert!(hit);
    }

    #[test]
    fn sixty_five_counterexample() {
        let h = sixty_five();
        // The printed array alternates between blocks of hyperdeterminant 49 and 9.
        assert_eq!(h.block(0, 0, 0).hyperdet(), int(49));
        assert_eq!(h.block(0, 0, 1).hyperdet(), int(9));
        assert!(matches!(verify_hypertiling(&h), Err(HyperError::InconsistentBlock { .. })));
        for axis in 0..3 {
            for t in cross_sections(&h, axis).unwrap() {
                assert!(is_tame(&t), "axis {axis} section {t}");
            }
        }
        let bad = synchronisation_violations(&h);
        assert!(!bad.is_empty());
        let want = [[8, -1], [1, -1], [4, -7]];
        let swapped = [[-1, 8], [-1, 1], [-7, 4]];
        assert!(bad.iter().any(|v| v.stack_i64() == Some(want) || v.stack_i64() == Some(swapped)));
        assert!(!is_tame_hypertiling(&h));
        assert!(decompose_hypertiling(&h).is_err());
    }

    #[test]
    fn decompose_unit_hyper_general() {
        let h = unit_hyper();
        let dec = decompose_hypertiling(&h).unwrap();
        assert_eq!(dec.n(), int(1));
        let [u, v, w] = &dec.paths;
        assert_eq!(construct_hypertiling(&dec.cube, [u, v, w]).unwrap(), h);
    }

    #[test]
    fn decompose_with_mixed_levels() {
        let u = FareyPath::from_i64(1, 0, &[(0, 1), (-1, -2), (-2, -5), (-5, -13)]).unwrap();
        let v = FareyPath::from_i64(2, 0, &[(-1, -4), (1, 2), (4, 10), (5, 13)]).unwrap();
        let w = FareyPath::from_i64(3, 0, &[(-2, -1), (15, 6), (-3, -1)]).unwrap();
        let cube = BhargavaCube::from_display_i64([-2, 0, -3, -2, -5, 0, -3, 2]);
        let h = construct_hypertiling(&cube, [&u, &v, &w]).unwrap();
        let dec = decompose_hypertiling(&h).unwrap();
        assert_eq!(dec.levels(), [int(1), int(2), int(3)]);
        assert_eq!(dec.n(), verify_hypertiling(&h).unwrap());
        let [a, b, c] = &dec.paths;
        assert_eq!(construct_hypertiling(&dec.cube, [a, b, c]).unwrap(), h);
    }

    #[test]
    fn transfer_keeps_hypertiling() {
        let [u, v, w] = unit_hyper_paths();
        let cube = BhargavaCube::from_display_i64([1, 1, 1, 2, 1, 2, 2, 5]);
        let h = construct_hypertiling(&cube, [&u, &v, &w]).unwrap();
        let dec = HyperDecomposition { cube, paths: [u, v, w] };
        let t = Triple::new(Mat2::from_i64(2, 1, 1, 1), Mat2::from_i64(1, 3, 0, 1), Mat2::from_i64(0, -1, 1, 0));
        let moved = transfer(&dec, &t).unwrap();
        let [a, b, c] = &moved.paths;
        assert_eq!(construct_hypertiling(&moved.cube, [a, b, c]).unwrap(), h);
    }

    #[test]
    fn cross_section_errors() {
        let h = unit_hyper();
        assert!(matches!(cross_section(&h, 3, 0), Err(HyperError::BadAxis)));
        assert!(matches!(cross_section(&h, 0, 5), Err(HyperError::OutOfRange(5))));
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(matches!(Hypertiling::from_flat([0, 0, 0], [1, 2, 2], vec![int(0); 4]), Err(HyperError::TooSmall)));
        assert!(matches!(
            Hypertiling::from_flat([2, 0, 0], [2, 2, 2], vec![int(0); 8]),
            Err(HyperError::IndexSet { .. })
        ));
        let singular = Hypertiling::from_flat([0, 0, 0], [2, 2, 2], vec![int(0); 8]).unwrap();
        assert!(matches!(verify_hypertiling(&singular), Err(HyperError::Singular)));
    }

    #[test]
    fn construct_rejects_singular_cube() {
        let [u, v, w] = unit_hyper_paths();
        let zero = BhargavaCube::new(Default::default());
        assert!(matches!(construct_hypertiling(&zero, [&u, &v, &w]), Err(HyperError::Singular)));
    }
}
