//! Farey graph vertices, paths, itineraries and cyclic order on the extended rationals.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::PathError;
use crate::exact::{det2, extended_gcd, gcd_all, int, Int, Mat2, Rat};

/// A vertex `a/b` of a Farey graph, kept as an integer vector (not reduced).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyVertex {
    pub a: Int,
    pub b: Int,
}

impl FareyVertex {
    pub fn new(a: Int, b: Int) -> Self {
        FareyVertex { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        FareyVertex::new(int(a), int(b))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn neg(&self) -> Self {
        FareyVertex::new(-&self.a, -&self.b)
    }

    /// `a d - b c` for `self = (a,b)`, `other = (c,d)`.
    pub fn cross(&self, other: &FareyVertex) -> Int {
        det2(&self.a, &self.b, &other.a, &other.b)
    }

    pub fn gcd(&self) -> Int {
        self.a.gcd(&self.b)
    }

    pub fn apply(&self, m: &Mat2) -> Self {
        let (a, b) = m.apply(&self.a, &self.b);
        FareyVertex::new(a, b)
    }

    /// The point of the extended rationals this vertex represents; `None` for `(0,0)`.
    pub fn value(&self) -> Option<ExtRat> {
        if self.b.is_zero() {
            if self.a.is_zero() {
                None
            } else {
                Some(ExtRat::Infinity)
            }
        } else {
            Some(ExtRat::Finite(Rat::new(self.a.clone(), self.b.clone())))
        }
    }
}

impl fmt::Display for FareyVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.a, self.b)
    }
}

/// A point of `Q ∪ {∞}`. Ordered with `∞` above every rational.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtRat {
    Finite(Rat),
    Infinity,
}

impl fmt::Display for ExtRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRat::Finite(r) => write!(f, "{r}"),
            ExtRat::Infinity => write!(f, "∞"),
        }
    }
}

fn cyclic_ascents(points: &[ExtRat]) -> usize {
    let n = points.len();
    (0..n).filter(|&i| points[i].cmp(&points[(i + 1) % n]) == Ordering::Less).count()
}

fn all_distinct(points: &[ExtRat]) -> bool {
    let mut sorted: Vec<&ExtRat> = points.iter().collect();
    sorted.sort();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Whether distinct points visit the circle `Q ∪ {∞}` clockwise (values
/// decreasing, wrapping at most once past `∞`).
pub fn is_clockwise_sequence(points: &[ExtRat]) -> bool {
    if !all_distinct(points) {
        return false;
    }
    points.len() < 2 || cyclic_ascents(points) == 1
}

/// Clockwise test for a triple of distinct points.
pub fn cyclic_clockwise(p: &ExtRat, q: &ExtRat, r: &ExtRat) -> Result<bool, PathError> {
    if p == q || q == r || p == r {
        return Err(PathError::RepeatedPoint);
    }
    Ok(cyclic_ascents(&[p.clone(), q.clone(), r.clone()]) == 1)
}

/// A horocycle: for a finite centre, `size` is the diameter; at `∞` it is the height.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Horocycle {
    pub center: ExtRat,
    pub size: Rat,
}

pub fn horocycle(v: &FareyVertex) -> Option<Horocycle> {
    let center = v.value()?;
    let size = if v.b.is_zero() { Rat::from_integer(&v.a * &v.a) } else { Rat::new(Int::one(), &v.b * &v.b) };
    Some(Horocycle { center, size })
}

/// Lambda length `|a d - b c|` between two horocycles.
pub fn lambda_length(u: &FareyVertex, v: &FareyVertex) -> Int {
    u.cross(v).abs()
}

/// Whether `u`, `v` are adjacent in the level-`level` Farey graph (in this order).
pub fn is_edge(u: &FareyVertex, v: &FareyVertex, level: &Int) -> bool {
    u.cross(v) == *level
}

/// A finite path in a Farey graph, indexed `base ..= base + len - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FareyPath {
    level: Int,
    base: i64,
    vertices: Vec<FareyVertex>,
}

impl FareyPath {
    pub fn new(level: Int, base: i64, vertices: Vec<FareyVertex>) -> Result<Self, PathError> {
        validate_path(&level, base, &vertices)?;
        Ok(FareyPath { level, base, vertices })
    }

    pub fn from_i64(level: i64, base: i64, vertices: &[(i64, i64)]) -> Result<Self, PathError> {
        FareyPath::new(int(level), base, vertices.iter().map(|&(a, b)| FareyVertex::from_i64(a, b)).collect())
    }

    pub fn level(&self) -> &Int {
        &self.level
    }

    pub fn base(&self) -> i64 {
        self.base
    }

    pub fn last_index(&self) -> i64 {
        self.base + self.vertices.len() as i64 - 1
    }

    pub fn vertices(&self) -> &[FareyVertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&FareyVertex> {
        let p = index.checked_sub(self.base)?;
        usize::try_from(p).ok().and_then(|p| self.vertices.get(p))
    }

    pub fn first(&self) -> &FareyVertex {
        &self.vertices[0]
    }

    pub fn last(&self) -> &FareyVertex {
        &self.vertices[self.vertices.len() - 1]
    }

    pub fn values(&self) -> Vec<ExtRat> {
        self.vertices.iter().map(|v| v.value().expect("validated vertices are nonzero")).collect()
    }

    pub fn itinerary(&self) -> Itinerary {
        let values = (1..self.vertices.len() - 1)
            .map(|p| {
                let num = self.vertices[p - 1].cross(&self.vertices[p + 1]);
                Rat::new(num, self.level.clone())
            })
            .collect();
        Itinerary { level: self.level.clone(), base: self.base + 1, values }
    }

    /// gcd of all `a_i b_j - b_i a_j` is 1.
    pub fn is_minimal(&self) -> bool {
        let mut g = Int::zero();
        for (p, u) in self.vertices.iter().enumerate() {
            for v in &self.vertices[p + 1..] {
                g = g.gcd(&u.cross(v));
                if g.is_one() {
                    return true;
                }
            }
        }
        g.is_one()
    }

    /// Left action of an `SL_2(Z)` matrix on every vertex.
    pub fn apply(&self, m: &Mat2) -> Result<FareyPath, PathError> {
        let det = m.det();
        if !det.is_one() {
            return Err(PathError::NotSl2(det));
        }
        Ok(self.map_vertices(|v| v.apply(m)))
    }

    pub fn negated(&self) -> FareyPath {
        self.map_vertices(FareyVertex::neg)
    }

    /// `(a, b) -> (l a, b)`; a path of level `l R`.
    pub fn scaled(&self, l: &Int) -> Result<FareyPath, PathError> {
        if !l.is_positive() {
            return Err(PathError::NonPositiveScale(l.clone()));
        }
        let vertices = self.vertices.iter().map(|v| FareyVertex::new(l * &v.a, v.b.clone())).collect();
        Ok(FareyPath { level: l * &self.level, base: self.base, vertices })
    }

    /// The same vertices re-indexed from `base`.
    pub fn rebased(&self, base: i64) -> Result<FareyPath, PathError> {
        FareyPath::new(self.level.clone(), base, self.vertices.clone())
    }

    fn map_vertices(&self, f: impl Fn(&FareyVertex) -> FareyVertex) -> FareyPath {
        FareyPath { level: self.level.clone(), base: self.base, vertices: self.vertices.iter().map(f).collect() }
    }

    /// Representative of the `SL_2(Z)` orbit of a minimal path, plus the matrix `X`
    /// with `X * self = canonical`. The first two vertices become `(r,0), (s,t)`
    /// with `r, t > 0`, `r t = level`, `0 <= s < t`.
    pub fn canonical_form(&self) -> Result<(FareyPath, Mat2), PathError> {
        if !self.is_minimal() {
            return Err(PathError::NotMinimal);
        }
        let (v0, v1) = (&self.vertices[0], &self.vertices[1]);
        let (g, x, y) = extended_gcd(&v0.a, &v0.b);
        let mut m = Mat2::new(x, y, -(&v0.b / &g), &v0.a / &g);
        let w1 = v1.apply(&m);
        let k = w1.a.div_floor(&w1.b);
        m = &Mat2::new(Int::one(), -k, Int::zero(), Int::one()) * &m;
        Ok((self.apply(&m)?, m))
    }

    pub fn is_clockwise(&self) -> bool {
        is_clockwise_sequence(&self.values())
    }

    /// Last vertex is the negated first and the others go once clockwise round.
    pub fn is_closed_clockwise(&self) -> bool {
        let n = self.vertices.len() - 1;
        self.vertices[n] == self.vertices[0].neg() && is_clockwise_sequence(&self.values()[..n])
    }
}

impl fmt::Display for FareyPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// Checks the path invariants, reporting the first violation found.
pub fn validate_path(level: &Int, base: i64, vertices: &[FareyVertex]) -> Result<(), PathError> {
    if !level.is_positive() {
        return Err(PathError::NonPositiveLevel(level.clone()));
    }
    if vertices.len() < 3 {
        return Err(PathError::TooShort(vertices.len()));
    }
    let last = base + vertices.len() as i64 - 1;
    if base > 0 || last < 1 {
        return Err(PathError::IndexSet { first: base, last });
    }
    for (p, v) in vertices.iter().enumerate() {
        let index = base + p as i64;
        if v.is_zero() {
            return Err(PathError::ZeroVertex { index });
        }
        if !(level % v.gcd()).is_zero() {
            return Err(PathError::GcdNotDividing { index, a: v.a.clone(), b: v.b.clone(), level: level.clone() });
        }
    }
    for p in 1..vertices.len() {
        let found = vertices[p - 1].cross(&vertices[p]);
        if found != *level {
            let i = base + p as i64 - 1;
            return Err(PathError::NotAnEdge { i, j: i + 1, found, level: level.clone() });
        }
    }
    Ok(())
}

/// `λ_i = (a_{i-1} b_{i+1} - b_{i-1} a_{i+1}) / R` for interior indices `base ..`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Itinerary {
    pub level: Int,
    pub base: i64,
    pub values: Vec<Rat>,
}

impl Itinerary {
    pub fn constant(level: Int, value: Rat, len: usize, base: i64) -> Self {
        Itinerary { level, base, values: vec![value; len] }
    }

    /// Every `λ_i` lies in `(1/gcd(v_i)) Z`, which is all of `Z` for level 1.
    pub fn is_integral(&self) -> bool {
        self.values.iter().all(Rat::is_integer)
    }
}

impl fmt::Display for Itinerary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

fn scale_by(lambda: &Rat, v: &FareyVertex, index: i64) -> Result<FareyVertex, PathError> {
    let den = lambda.denom();
    let (qa, ra) = (lambda.numer() * &v.a).div_rem(den);
    let (qb, rb) = (lambda.numer() * &v.b).div_rem(den);
    if !ra.is_zero() || !rb.is_zero() {
        return Err(PathError::InconsistentItinerary { index });
    }
    Ok(FareyVertex::new(qa, qb))
}

/// Rebuilds the path with itinerary `it` through the edge `(u, v)` placed at
/// indices `edge_index`, `edge_index + 1`, using `v_{i+1} = λ_i v_i - v_{i-1}`
/// forward and its mirror backward.
pub fn reconstruct_path(
    it: &Itinerary,
    edge_index: i64,
    u: &FareyVertex,
    v: &FareyVertex,
) -> Result<FareyPath, PathError> {
    let first = it.base - 1;
    let n = it.values.len() + 2;
    let last = first + n as i64 - 1;
    if edge_index < first || edge_index >= last {
        return Err(PathError::EdgeOutOfRange(edge_index));
    }
    let p = (edge_index - first) as usize;
    let mut verts: Vec<Option<FareyVertex>> = vec![None; n];
    verts[p] = Some(u.clone());
    verts[p + 1] = Some(v.clone());
    for q in p + 1..n - 1 {
        let cur = verts[q].clone().expect("filled");
        let prev = verts[q - 1].clone().expect("filled");
        let s = scale_by(&it.values[q - 1], &cur, first + q as i64)?;
        verts[q + 1] = Some(FareyVertex::new(&s.a - &prev.a, &s.b - &prev.b));
    }
    for q in (1..=p).rev() {
        let cur = verts[q].clone().expect("filled");
        let next = verts[q + 1].clone().expect("filled");
        let s = scale_by(&it.values[q - 1], &cur, first + q as i64)?;
        verts[q - 1] = Some(FareyVertex::new(&s.a - &next.a, &s.b - &next.b));
    }
    FareyPath::new(it.level.clone(), first, verts.into_iter().map(|x| x.expect("filled")).collect())
}

fn endpoint_values(gamma: &FareyPath, delta: &FareyPath) -> [ExtRat; 4] {
    let g = gamma.values();
    let d = delta.values();
    [g[0].clone(), g[g.len() - 1].clone(), d[0].clone(), d[d.len() - 1].clone()]
}

/// Both paths clockwise and `(γ_first, γ_last, δ_first, δ_last)` clockwise,
/// allowing `γ_last = δ_first` and `δ_last = γ_first`.
pub fn are_compatible(gamma: &FareyPath, delta: &FareyPath) -> bool {
    if !gamma.is_clockwise() || !delta.is_clockwise() {
        return false;
    }
    let [gf, gl, df, dl] = endpoint_values(gamma, delta);
    let mut seq = vec![gf.clone(), gl.clone()];
    if df != gl {
        seq.push(df);
    }
    if dl != gf {
        seq.push(dl);
    }
    is_clockwise_sequence(&seq)
}

/// Compatibility with the four endpoints pairwise distinct.
pub fn are_strictly_compatible(gamma: &FareyPath, delta: &FareyPath) -> bool {
    gamma.is_clockwise() && delta.is_clockwise() && is_clockwise_sequence(&endpoint_values(gamma, delta))
}

/// gcd of all coordinates of a path's vertices.
pub fn coordinate_gcd(path: &FareyPath) -> Int {
    let all: Vec<Int> = path.vertices().iter().flat_map(|v| [v.a.clone(), v.b.clone()]).collect();
    gcd_all(&all).expect("paths are nonempty")
}
