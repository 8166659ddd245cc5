//! Positive rational friezes, closed clockwise paths, quiddity cycles and
//! (weighted) triangulated polygons.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{FriezeError, TilingError};
use crate::exact::{gcd_all, Int, Rat};
use crate::farey::FareyPath;
use crate::tiling::{decompose_tiling, Tiling};

/// A frieze over `(1/N)Z` of width `n`, stored as the integers `N m_{j+d, j}`
/// in `rows[d][j]` for `0 <= d <= n`, `0 <= j < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frieze {
    width: usize,
    denom: Int,
    gcd: Int,
    rows: Vec<Vec<Int>>,
}

impl Frieze {
    /// Validated constructor.
    pub fn new(width: usize, denom: Int, gcd: Int, rows: Vec<Vec<Int>>) -> Result<Self, FriezeError> {
        let f = Frieze::new_unchecked(width, denom, gcd, rows);
        validate_frieze(&f)?;
        Ok(f)
    }

    /// Skips validation; pair with [`validate_frieze`].
    pub fn new_unchecked(width: usize, denom: Int, gcd: Int, rows: Vec<Vec<Int>>) -> Self {
        Frieze { width, denom, gcd, rows }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn denom(&self) -> &Int {
        &self.denom
    }

    pub fn gcd(&self) -> &Int {
        &self.gcd
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    /// `N m_{i,j}` on the bi-infinite extension (`m_{i+n,j} = -m_{i,j}`).
    pub fn scaled_entry(&self, i: i64, j: i64) -> Int {
        let n = self.width as i64;
        let d = i - j;
        let v = &self.rows[d.rem_euclid(n) as usize][j.rem_euclid(n) as usize];
        if d.div_euclid(n) % 2 == 0 {
            v.clone()
        } else {
            -v
        }
    }

    pub fn entry(&self, i: i64, j: i64) -> Rat {
        Rat::new(self.scaled_entry(i, j), self.denom.clone())
    }

    /// Window of the integer `N^2`-tiling `N m_{ij}`.
    pub fn scaled_tiling(&self, rows: (i64, i64), cols: (i64, i64)) -> Result<Tiling, TilingError> {
        let data = (rows.0..=rows.1).map(|i| (cols.0..=cols.1).map(|j| self.scaled_entry(i, j)).collect()).collect();
        Tiling::new(rows.0, cols.0, data)
    }

    /// One period of the third row, starting at `m_{2,0}`.
    pub fn quiddity_row(&self) -> Vec<Rat> {
        self.rows[2].iter().map(|e| Rat::new(e.clone(), self.denom.clone())).collect()
    }

    /// Quiddity cycle in its lexicographically least rotation.
    pub fn quiddity_cycle(&self) -> Vec<Rat> {
        least_rotation(&self.quiddity_row())
    }

    /// Builds the frieze from its quiddity cycle `q` (entries of `m_{j+2,j}`).
    pub fn from_quiddity(q: &[Rat], denom: &Int) -> Result<Frieze, FriezeError> {
        let n = q.len();
        if n < 3 {
            return Err(FriezeError::Width(n));
        }
        let nr = Rat::from_integer(denom.clone());
        let mut rows = vec![Vec::with_capacity(n); n + 1];
        for j in 0..n {
            let mut prev = Rat::zero();
            let mut cur = Rat::one();
            rows[0].push(Int::zero());
            rows[1].push(denom.clone());
            for d in 1..n {
                let next = &q[(j + d - 1) % n] * &cur - &prev;
                let scaled = &next * &nr;
                if !scaled.is_integer() {
                    return Err(FriezeError::NotScaled(next.to_string()));
                }
                rows[d + 1].push(scaled.to_integer());
                prev = cur;
                cur = next;
            }
        }
        let all: Vec<Int> = rows.iter().flatten().cloned().collect();
        let gcd = gcd_all(&all).expect("nonempty");
        Frieze::new(n, denom.clone(), gcd, rows)
    }
}

impl fmt::Display for Frieze {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|e| Rat::new(e.clone(), self.denom.clone()).to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn least_rotation(q: &[Rat]) -> Vec<Rat> {
    (0..q.len()).map(|s| q[s..].iter().chain(&q[..s]).cloned().collect::<Vec<_>>()).min().unwrap_or_default()
}

/// Checks shape, border rows, positivity, the diamond rule, glide symmetry and the gcd.
pub fn validate_frieze(f: &Frieze) -> Result<(), FriezeError> {
    let n = f.width;
    if n < 3 {
        return Err(FriezeError::Width(n));
    }
    if f.rows.len() != n + 1 || f.rows.iter().any(|r| r.len() != n) || !f.denom.is_positive() || !f.gcd.is_positive() {
        return Err(FriezeError::Shape);
    }
    if !(&f.denom % &f.gcd).is_zero() {
        return Err(FriezeError::DenomGcd { denom: f.denom.clone(), gcd: f.gcd.clone() });
    }
    for (row, want) in [(0, Int::zero()), (n, Int::zero()), (1, f.denom.clone()), (n - 1, f.denom.clone())] {
        if let Some(pos) = f.rows[row].iter().position(|e| *e != want) {
            return Err(FriezeError::Border { row, pos });
        }
    }
    for row in 1..n {
        if let Some(pos) = f.rows[row].iter().position(|e| !e.is_positive()) {
            return Err(FriezeError::NotPositive { row, pos });
        }
    }
    let expected = &f.denom * &f.denom;
    for d in 1..n {
        for j in 0..n {
            let e = |d: usize, j: usize| &f.rows[d][j % n];
            let found = e(d, j) * e(d, j + 1) - e(d - 1, j + 1) * e(d + 1, j);
            if found != expected {
                return Err(FriezeError::Diamond { i: (j + d) as i64, j: j as i64, found, expected });
            }
        }
    }
    for d in 0..=n {
        for j in 0..n {
            if f.rows[d][j] != f.rows[n - d][(j + d) % n] {
                return Err(FriezeError::Glide { row: d, pos: j });
            }
        }
    }
    let all: Vec<Int> = f.rows.iter().flatten().cloned().collect();
    let found = gcd_all(&all).expect("nonempty");
    if found != f.gcd {
        return Err(FriezeError::Gcd { found, expected: f.gcd.clone() });
    }
    Ok(())
}

/// `m_{ij} = (a_j b_i - b_j a_i) / R` scaled by `N = K R`.
pub fn frieze_from_path(gamma: &FareyPath, k: &Int) -> Result<Frieze, FriezeError> {
    if !k.is_positive() {
        return Err(FriezeError::Gcd { found: k.clone(), expected: Int::one() });
    }
    let v = gamma.vertices();
    let n = v.len() - 1;
    if n < 3 {
        return Err(FriezeError::Width(n));
    }
    if v[n] != v[0].neg() {
        return Err(FriezeError::NotClosed);
    }
    if !gamma.is_minimal() {
        return Err(FriezeError::NotMinimal);
    }
    if !gamma.is_closed_clockwise() {
        return Err(FriezeError::NotClockwise);
    }
    let ext = |p: usize| if p < n { v[p].clone() } else { v[p - n].neg() };
    let rows = (0..=n)
        .map(|d| {
            (0..n)
                .map(|j| {
                    let (x, y) = (ext(j), ext(j + d));
                    k * (&x.a * &y.b - &x.b * &y.a)
                })
                .collect()
        })
        .collect();
    Frieze::new(n, k * gamma.level(), k.clone(), rows)
}

/// Inverse of [`frieze_from_path`]: decomposes the `N^2`-tiling `N m_{ij}`
/// (which has `L = 1`, `R = S = N/K`) and reads the path off the columns.
pub fn path_from_frieze(f: &Frieze) -> Result<FareyPath, FriezeError> {
    validate_frieze(f)?;
    let (r, rem) = f.denom.div_rem(&f.gcd);
    if !rem.is_zero() {
        return Err(FriezeError::DenomGcd { denom: f.denom.clone(), gcd: f.gcd.clone() });
    }
    let n = f.width as i64;
    let t = f.scaled_tiling((0, n), (0, n))?;
    let dec = decompose_tiling(&t)?;
    let p = &dec.params;
    if p.k != f.gcd || !p.l.is_one() || p.r != r || p.s != r {
        return Err(TilingError::Internal(format!("frieze tiling has parameters {p}")).into());
    }
    if dec.delta != dec.gamma.negated() {
        return Err(TilingError::Internal("column path is not the negated row path".into()).into());
    }
    let path = dec.delta;
    if frieze_from_path(&path, &f.gcd)? != *f {
        return Err(TilingError::Internal("recovered path does not rebuild the frieze".into()).into());
    }
    Ok(path)
}

/// A convex `m`-gon (vertices `0..m` in clockwise order) with `m - 3` diagonals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangulatedPolygon {
    m: usize,
    diagonals: Vec<(usize, usize)>,
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    (a.0 < b.0 && b.0 < a.1 && a.1 < b.1) || (b.0 < a.0 && a.0 < b.1 && b.1 < a.1)
}

impl TriangulatedPolygon {
    pub fn new(m: usize, diagonals: &[(usize, usize)]) -> Result<Self, FriezeError> {
        let bad = |s: String| Err(FriezeError::Polygon(s));
        if m < 3 {
            return bad(format!("need at least 3 vertices, got {m}"));
        }
        let mut set = BTreeSet::new();
        for &(u, v) in diagonals {
            let (a, b) = (u.min(v), u.max(v));
            if b >= m || a == b || b - a == 1 || (a == 0 && b == m - 1) {
                return bad(format!("({u},{v}) is not a diagonal of a {m}-gon"));
            }
            if !set.insert((a, b)) {
                return bad(format!("diagonal ({u},{v}) repeated"));
            }
        }
        if set.len() != m - 3 {
            return bad(format!("need {} diagonals, got {}", m - 3, set.len()));
        }
        let diagonals: Vec<_> = set.into_iter().collect();
        for (x, &d) in diagonals.iter().enumerate() {
            if let Some(&e) = diagonals[x + 1..].iter().find(|&&e| crosses(d, e)) {
                return bad(format!("diagonals {d:?} and {e:?} cross"));
            }
        }
        Ok(TriangulatedPolygon { m, diagonals })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        let (a, b) = (u.min(v), u.max(v));
        b - a == 1 || (a == 0 && b == self.m - 1) || self.diagonals.binary_search(&(a, b)).is_ok()
    }

    /// The `m - 2` triangles, each sorted.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for a in 0..self.m {
            for b in a + 1..self.m {
                if !self.adjacent(a, b) {
                    continue;
                }
                for c in b + 1..self.m {
                    if self.adjacent(a, c) && self.adjacent(b, c) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Number of triangles at each vertex.
    pub fn triangle_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.m];
        for t in self.triangles() {
            t.iter().for_each(|&v| counts[v] += 1);
        }
        counts
    }

    /// Farey distance between `u` and `v`: label `u` with 0, the rest of a
    /// triangle at `u` with 1, then give the far vertex of each adjacent
    /// triangle the sum of the labels on the shared edge.
    pub fn cc_farey_distance(&self, u: usize, v: usize) -> Result<Int, FriezeError> {
        if u >= self.m || v >= self.m || u == v {
            return Err(FriezeError::Polygon(format!("bad vertex pair ({u},{v})")));
        }
        let tris = self.triangles();
        let root = tris.iter().position(|t| t.contains(&u)).expect("every vertex lies on a triangle");
        let mut label: Vec<Option<Int>> = vec![None; self.m];
        let mut seen = vec![false; tris.len()];
        for &w in &tris[root] {
            label[w] = Some(if w == u { Int::zero() } else { Int::one() });
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(t) = queue.pop_front() {
            for (x, other) in tris.iter().enumerate() {
                if seen[x] {
                    continue;
                }
                let shared: Vec<usize> = other.iter().copied().filter(|w| tris[t].contains(w)).collect();
                if shared.len() != 2 {
                    continue;
                }
                let far = other.iter().copied().find(|w| !shared.contains(w)).expect("three vertices");
                let sum = label[shared[0]].clone().expect("labelled") + label[shared[1]].clone().expect("labelled");
                label[far].get_or_insert(sum);
                seen[x] = true;
                queue.push_back(x);
            }
        }
        Ok(label[v].clone().expect("triangulation is connected"))
    }
}

/// Marked vertices `v_0, .., v_{m-1}` (increasing index = clockwise) with weights.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPolygon {
    polygon: TriangulatedPolygon,
    marked: Vec<(usize, Int)>,
    n: Int,
}

impl WeightedPolygon {
    /// Checks that every `d_i w_{i-1} w_i` equals the same `N`.
    pub fn new(polygon: TriangulatedPolygon, marked: Vec<(usize, Int)>) -> Result<Self, FriezeError> {
        if marked.len() < 3 {
            return Err(FriezeError::Polygon("need at least 3 marked vertices".into()));
        }
        if marked.windows(2).any(|w| w[0].0 >= w[1].0) || marked.last().expect("nonempty").0 >= polygon.m {
            return Err(FriezeError::Polygon("marked vertices must be distinct, in clockwise order".into()));
        }
        if marked.iter().any(|(_, w)| !w.is_positive()) {
            return Err(FriezeError::Polygon("weights must be positive".into()));
        }
        let k = marked.len();
        let mut n: Option<Int> = None;
        for i in 0..k {
            let (prev, cur) = (&marked[(i + k - 1) % k], &marked[i]);
            let p = polygon.cc_farey_distance(prev.0, cur.0)? * &prev.1 * &cur.1;
            match &n {
                None => n = Some(p),
                Some(x) if *x != p => return Err(FriezeError::UnequalProducts),
                Some(_) => {}
            }
        }
        Ok(WeightedPolygon { polygon, marked, n: n.expect("nonempty") })
    }

    pub fn polygon(&self) -> &TriangulatedPolygon {
        &self.polygon
    }

    pub fn marked(&self) -> &[(usize, Int)] {
        &self.marked
    }

    pub fn n(&self) -> &Int {
        &self.n
    }
}

/// `(N, labels)` where the label at `v_i` is `w_{i-1} w_{i+1} Δ(v_{i-1}, v_{i+1})`:
/// the quiddity cycle of the integer frieze whose diamonds have determinant `N^2`.
/// With every vertex marked at weight 1 this is the triangle count.
pub fn weighted_polygon_quiddity(wp: &WeightedPolygon) -> Result<(Int, Vec<Int>), FriezeError> {
    let k = wp.marked.len();
    let mut labels = Vec::with_capacity(k);
    for i in 0..k {
        let (prev, next) = (&wp.marked[(i + k - 1) % k], &wp.marked[(i + 1) % k]);
        let delta = if prev.0 == next.0 { Int::zero() } else { wp.polygon.cc_farey_distance(prev.0, next.0)? };
        labels.push(delta * &prev.1 * &next.1);
    }
    Ok((wp.n.clone(), labels))
}

/// The rational frieze over `(1/N)Z` with quiddity `labels / N`.
pub fn frieze_from_weighted_polygon(wp: &WeightedPolygon) -> Result<Frieze, FriezeError> {
    let (n, labels) = weighted_polygon_quiddity(wp)?;
    let q: Vec<Rat> = labels.into_iter().map(|l| Rat::new(l, n.clone())).collect();
    Frieze::from_quiddity(&q, &n)
}
