//! Finite integer tilings: verification, tameness parameters, construction from a
//! pair of Farey paths, decomposition back into paths, recurrences and sign.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::TilingError;
use crate::exact::{exact_sqrt, gcd_all, int, smith_normal_form, Int, IntMatrix, Mat2, Rat};
use crate::farey::{are_strictly_compatible, FareyPath, FareyVertex};

/// A finite window of a tiling, indexed `row_base .. row_base + rows` by
/// `col_base .. col_base + cols`. Both ranges contain 0 and 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    row_base: i64,
    col_base: i64,
    rows: usize,
    cols: usize,
    entries: Vec<Int>,
}

fn check_range(base: i64, len: usize) -> Result<(), TilingError> {
    let last = base + len as i64 - 1;
    if base > 0 || last < 1 {
        return Err(TilingError::IndexSet { first: base, last });
    }
    Ok(())
}

impl Tiling {
    pub fn new(row_base: i64, col_base: i64, rows: Vec<Vec<Int>>) -> Result<Self, TilingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if r < 2 || c < 2 {
            return Err(TilingError::TooSmall);
        }
        if rows.iter().any(|row| row.len() != c) {
            return Err(TilingError::Ragged);
        }
        check_range(row_base, r)?;
        check_range(col_base, c)?;
        Ok(Tiling { row_base, col_base, rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64(row_base: i64, col_base: i64, rows: &[&[i64]]) -> Result<Self, TilingError> {
        Tiling::new(row_base, col_base, rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_base(&self) -> i64 {
        self.row_base
    }

    pub fn col_base(&self) -> i64 {
        self.col_base
    }

    /// Inclusive `(first, last)` row indices.
    pub fn row_range(&self) -> (i64, i64) {
        (self.row_base, self.row_base + self.rows as i64 - 1)
    }

    pub fn col_range(&self) -> (i64, i64) {
        (self.col_base, self.col_base + self.cols as i64 - 1)
    }

    pub fn row_indices(&self) -> impl Iterator<Item = i64> + Clone {
        self.row_base..self.row_base + self.rows as i64
    }

    pub fn col_indices(&self) -> impl Iterator<Item = i64> + Clone {
        self.col_base..self.col_base + self.cols as i64
    }

    /// Entry at global indices; panics outside the window.
    pub fn get(&self, i: i64, j: i64) -> &Int {
        let p = usize::try_from(i - self.row_base).expect("row in range");
        let q = usize::try_from(j - self.col_base).expect("column in range");
        assert!(p < self.rows && q < self.cols, "index ({i},{j}) outside tiling");
        &self.entries[p * self.cols + q]
    }

    /// Entry at zero-based local position.
    pub fn at(&self, p: usize, q: usize) -> &Int {
        &self.entries[p * self.cols + q]
    }

    pub fn entries(&self) -> &[Int] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<Int>> {
        self.entries.chunks(self.cols).map(<[Int]>::to_vec).collect()
    }

    pub fn to_matrix(&self) -> IntMatrix {
        IntMatrix::new(self.rows, self.cols, self.entries.clone()).expect("nonempty")
    }

    pub fn negated(&self) -> Tiling {
        Tiling { entries: self.entries.iter().map(|x| -x).collect(), ..self.clone() }
    }

    /// `m_{i,j} m_{i',j'} - m_{i,j'} m_{i',j}`.
    pub fn minor(&self, i: i64, i2: i64, j: i64, j2: i64) -> Int {
        self.get(i, j) * self.get(i2, j2) - self.get(i, j2) * self.get(i2, j)
    }

    /// gcd of all 2x2 minors.
    pub fn all_minors_gcd(&self) -> Int {
        let mut g = Int::zero();
        for p in 0..self.rows {
            for p2 in p + 1..self.rows {
                for q in 0..self.cols {
                    for q2 in q + 1..self.cols {
                        let m = self.at(p, q) * self.at(p2, q2) - self.at(p, q2) * self.at(p2, q);
                        g = g.gcd(&m);
                    }
                }
            }
        }
        g
    }

    /// gcd of minors using two consecutive columns `j, j+1` and any two rows.
    pub fn consecutive_column_minors_gcd(&self) -> Int {
        let mut g = Int::zero();
        for q in 0..self.cols - 1 {
            for p in 0..self.rows {
                for p2 in p + 1..self.rows {
                    let m = self.at(p, q) * self.at(p2, q + 1) - self.at(p, q + 1) * self.at(p2, q);
                    g = g.gcd(&m);
                }
            }
        }
        g
    }

    /// gcd of minors using two consecutive rows `i, i+1` and any two columns.
    pub fn consecutive_row_minors_gcd(&self) -> Int {
        let mut g = Int::zero();
        for p in 0..self.rows - 1 {
            for q in 0..self.cols {
                for q2 in q + 1..self.cols {
                    let m = self.at(p, q) * self.at(p + 1, q2) - self.at(p, q2) * self.at(p + 1, q);
                    g = g.gcd(&m);
                }
            }
        }
        g
    }

    pub fn entry_gcd(&self) -> Int {
        gcd_all(&self.entries).expect("nonempty")
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let w = cells.iter().map(String::len).max().unwrap_or(1);
        for row in cells.chunks(self.cols) {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>w$}")).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Returns the common determinant of all contiguous 2x2 blocks.
pub fn verify_n_tiling(t: &Tiling) -> Result<Int, TilingError> {
    let mut expected: Option<Int> = None;
    for p in 0..t.rows - 1 {
        for q in 0..t.cols - 1 {
            let found = t.at(p, q) * t.at(p + 1, q + 1) - t.at(p, q + 1) * t.at(p + 1, q);
            match &expected {
                None => expected = Some(found),
                Some(e) if *e != found => {
                    return Err(TilingError::InconsistentBlock {
                        row: t.row_base + p as i64,
                        col: t.col_base + q as i64,
                        expected: e.clone(),
                        found,
                    })
                }
                Some(_) => {}
            }
        }
    }
    Ok(expected.expect("at least one block"))
}

fn det3(t: &Tiling, p: usize, q: usize) -> Int {
    let m = |a: usize, b: usize| t.at(p + a, q + b);
    m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
        + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
}

/// `(K, L, R, S)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TamenessParams {
    pub k: Int,
    pub l: Int,
    pub r: Int,
    pub s: Int,
}

impl TamenessParams {
    pub fn from_i64(k: i64, l: i64, r: i64, s: i64) -> Self {
        TamenessParams { k: int(k), l: int(l), r: int(r), s: int(s) }
    }

    /// `K^2 L R S`.
    pub fn n(&self) -> Int {
        &self.k * &self.k * &self.l * &self.r * &self.s
    }
}

impl fmt::Display for TamenessParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.k, self.l, self.r, self.s)
    }
}

/// Bounds for the 0-tiling search.
#[derive(Clone, Debug)]
pub struct ZeroSearchConfig {
    /// Largest vertical parameter tried; default `max|a_i|^2 + 1`.
    pub r_max: Option<Int>,
    /// Largest horizontal parameter tried; default `max|d_j|^2 + 1`.
    pub s_max: Option<Int>,
    /// Maximum number of search nodes per companion search.
    pub budget: u64,
}

impl Default for ZeroSearchConfig {
    fn default() -> Self {
        ZeroSearchConfig { r_max: None, s_max: None, budget: 1_000_000 }
    }
}

/// Witness for a tame 0-tiling `m_{ij} = K a_i d_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroTilingReport {
    pub params: TamenessParams,
    pub gamma: FareyPath,
    pub delta: FareyPath,
    pub r_bound: Int,
    pub s_bound: Int,
}

enum Search {
    Found(Vec<Int>),
    NotFound,
    Exhausted,
}

fn minimal_pairs(x: &[Int], y: &[Int]) -> bool {
    let mut g = Int::zero();
    for p in 0..x.len() {
        for q in p + 1..x.len() {
            g = g.gcd(&(&x[p] * &y[q] - &y[p] * &x[q]));
            if g.is_one() {
                return true;
            }
        }
    }
    g.is_one()
}

/// Finds `y` with `x_{i-1} y_i - y_{i-1} x_i = target` for all `i` and the
/// pairs `(x_i, y_i)` forming a minimal path. Free parameters are searched over
/// one period of the residues that can affect minimality.
fn companion_search(x: &[Int], target: &Int, budget: u64) -> Search {
    let mut nodes = 0u64;
    let mut y = Vec::with_capacity(x.len());
    match companion_step(x, target, &mut y, &mut nodes, budget) {
        Some(true) => Search::Found(y),
        Some(false) => Search::NotFound,
        None => Search::Exhausted,
    }
}

/// `Some(true)` found (left in `y`), `Some(false)` dead end, `None` budget spent.
fn companion_step(x: &[Int], target: &Int, y: &mut Vec<Int>, nodes: &mut u64, budget: u64) -> Option<bool> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    let i = y.len();
    if i == x.len() {
        return Some(minimal_pairs(x, y));
    }
    let try_each = |y: &mut Vec<Int>, nodes: &mut u64, count: Int| -> Option<bool> {
        let mut v = Int::zero();
        while v < count {
            y.push(v.clone());
            if companion_step(x, target, y, nodes, budget)? {
                return Some(true);
            }
            y.pop();
            v += 1;
        }
        Some(false)
    };
    if i == 0 {
        if !x[0].is_zero() {
            return try_each(y, nodes, x[0].abs());
        }
        if x.len() < 2 || x[1].is_zero() {
            return Some(false);
        }
        let (q, r) = (-target).div_rem(&x[1]);
        if !r.is_zero() {
            return Some(false);
        }
        y.push(q);
        if companion_step(x, target, y, nodes, budget)? {
            return Some(true);
        }
        y.pop();
        return Some(false);
    }
    if !x[i - 1].is_zero() {
        let num = target + &y[i - 1] * &x[i];
        let (q, r) = num.div_rem(&x[i - 1]);
        if !r.is_zero() {
            return Some(false);
        }
        y.push(q);
        if companion_step(x, target, y, nodes, budget)? {
            return Some(true);
        }
        y.pop();
        return Some(false);
    }
    if -(&y[i - 1] * &x[i]) != *target {
        return Some(false);
    }
    try_each(y, nodes, (&x[i] * target).abs())
}

/// `M = K a d^T` with `K > 0` and `a`, `d` primitive, when `M` has rank one.
fn rank_one_factor(t: &Tiling) -> Option<(Int, Vec<Int>, Vec<Int>)> {
    let k = t.entry_gcd();
    if k.is_zero() {
        return None;
    }
    let (p, q) = (0..t.rows).flat_map(|p| (0..t.cols).map(move |q| (p, q))).find(|&(p, q)| !t.at(p, q).is_zero())?;
    let col: Vec<Int> = (0..t.rows).map(|r| t.at(r, q).clone()).collect();
    let row: Vec<Int> = (0..t.cols).map(|c| t.at(p, c).clone()).collect();
    let gc = gcd_all(&col).ok()?;
    let gr = gcd_all(&row).ok()?;
    let mut a: Vec<Int> = col.iter().map(|v| v / &gc).collect();
    let d: Vec<Int> = row.iter().map(|v| v / &gr).collect();
    let prod = &a[p] * &d[q];
    let (scale, rem) = t.at(p, q).div_rem(&prod);
    if !rem.is_zero() {
        return None;
    }
    if scale.is_negative() {
        a.iter_mut().for_each(|v| *v = -&*v);
    }
    if scale.abs() != k {
        return None;
    }
    for r in 0..t.rows {
        for c in 0..t.cols {
            if *t.at(r, c) != &k * &a[r] * &d[c] {
                return None;
            }
        }
    }
    Some((k, a, d))
}

fn max_sq_plus_one(v: &[Int]) -> Int {
    let m = v.iter().map(Signed::abs).max().unwrap_or_default();
    &m * &m + 1
}

/// Decides tameness of a 0-tiling by bounded search and returns the smallest
/// `(R, S)` found with witnessing paths. `Ok(None)` means no witness within the bounds.
pub fn tame_zero_report(t: &Tiling, cfg: &ZeroSearchConfig) -> Result<Option<ZeroTilingReport>, TilingError> {
    let n = verify_n_tiling(t)?;
    if !n.is_zero() {
        return Err(TilingError::BadParameter { name: "N", requirement: "zero" });
    }
    if t.rows < 3 || t.cols < 3 {
        return Err(TilingError::TooSmall);
    }
    let Some((k, a, d)) = rank_one_factor(t) else {
        return Ok(None);
    };
    let r_bound = cfg.r_max.clone().unwrap_or_else(|| max_sq_plus_one(&a));
    let s_bound = cfg.s_max.clone().unwrap_or_else(|| max_sq_plus_one(&d));

    let find = |x: &[Int], bound: &Int, negate: bool| -> Option<(Int, Vec<Int>)> {
        let mut r = Int::one();
        while r <= *bound {
            let target = if negate { -&r } else { r.clone() };
            if let Search::Found(y) = companion_search(x, &target, cfg.budget) {
                return Some((r, y));
            }
            r += 1;
        }
        None
    };
    let Some((r, b)) = find(&a, &r_bound, false) else {
        return Ok(None);
    };
    // c_{j-1} d_j - d_{j-1} c_j = S is the companion equation for d with target -S
    let Some((s, c)) = find(&d, &s_bound, true) else {
        return Ok(None);
    };
    let gamma = FareyPath::new(
        r.clone(),
        t.row_base,
        a.iter().zip(&b).map(|(x, y)| FareyVertex::new(x.clone(), y.clone())).collect(),
    )?;
    let delta = FareyPath::new(
        s.clone(),
        t.col_base,
        c.iter().zip(&d).map(|(x, y)| FareyVertex::new(x.clone(), y.clone())).collect(),
    )?;
    Ok(Some(ZeroTilingReport { params: TamenessParams { k, l: Int::zero(), r, s }, gamma, delta, r_bound, s_bound }))
}

pub fn is_tame(t: &Tiling) -> bool {
    is_tame_with(t, &ZeroSearchConfig::default())
}

/// For `N != 0` every contiguous 3x3 block is singular; for `N = 0` see [`tame_zero_report`].
pub fn is_tame_with(t: &Tiling, cfg: &ZeroSearchConfig) -> bool {
    let Ok(n) = verify_n_tiling(t) else {
        return false;
    };
    if n.is_zero() {
        return matches!(tame_zero_report(t, cfg), Ok(Some(_)));
    }
    if t.rows < 3 || t.cols < 3 {
        return true;
    }
    (0..t.rows - 2).all(|p| (0..t.cols - 2).all(|q| det3(t, p, q).is_zero()))
}

pub fn tameness_parameters(t: &Tiling) -> Result<TamenessParams, TilingError> {
    let n = verify_n_tiling(t)?;
    if n.is_zero() {
        return tame_zero_report(t, &ZeroSearchConfig::default())?.map(|r| r.params).ok_or(TilingError::NotTame);
    }
    if !is_tame(t) {
        return Err(TilingError::NotTame);
    }
    let k = t.entry_gcd();
    let mut r = t.consecutive_column_minors_gcd();
    let mut s = t.consecutive_row_minors_gcd();
    let mut all = t.all_minors_gcd();
    if n.is_negative() {
        r = -r;
        s = -s;
        all = -all;
    }
    let div = |a: &Int, b: &Int| -> Result<Int, TilingError> {
        let (q, rem) = a.div_rem(b);
        if rem.is_zero() {
            Ok(q)
        } else {
            Err(TilingError::Internal(format!("{b} does not divide {a}")))
        }
    };
    let params = TamenessParams { l: div(&all, &(&k * &k))?, r: div(&n, &r)?, s: div(&n, &s)?, k };
    if params.n() != n || &params.r * &params.s != div(&n, &all)? {
        return Err(TilingError::Internal("tameness parameters inconsistent".into()));
    }
    Ok(params)
}

/// `m_{i-1,j} + m_{i+1,j} = r_i m_{ij}` and `m_{i,j-1} + m_{i,j+1} = s_j m_{ij}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    /// First interior row index; `rows[p]` belongs to row `row_base + p`.
    pub row_base: i64,
    pub rows: Vec<Rat>,
    pub col_base: i64,
    pub cols: Vec<Rat>,
}

fn line_coefficient<'a>(
    index: i64,
    lines: impl Iterator<Item = (&'a Int, &'a Int, &'a Int)>,
) -> Result<Rat, TilingError> {
    let triples: Vec<_> = lines.collect();
    let (prev, mid, next) =
        triples.iter().find(|(_, m, _)| !m.is_zero()).ok_or(TilingError::UndeterminedCoefficient { index })?;
    let c = Rat::new(*prev + *next, (*mid).clone());
    for (p, m, nx) in &triples {
        if Rat::from_integer(*p + *nx) != &c * Rat::from_integer((*m).clone()) {
            return Err(TilingError::NotTame);
        }
    }
    Ok(c)
}

pub fn recurrence_coefficients(t: &Tiling) -> Result<Recurrence, TilingError> {
    let mut rows = Vec::new();
    for p in 1..t.rows - 1 {
        let idx = t.row_base + p as i64;
        rows.push(line_coefficient(idx, (0..t.cols).map(|q| (t.at(p - 1, q), t.at(p, q), t.at(p + 1, q))))?);
    }
    let mut cols = Vec::new();
    for q in 1..t.cols - 1 {
        let idx = t.col_base + q as i64;
        cols.push(line_coefficient(idx, (0..t.rows).map(|p| (t.at(p, q - 1), t.at(p, q), t.at(p, q + 1))))?);
    }
    Ok(Recurrence { row_base: t.row_base + 1, rows, col_base: t.col_base + 1, cols })
}

/// `m_{ij} = K (a_i d_j - L b_i c_j)` for `γ = (a_i/b_i)`, `δ = (c_j/d_j)`.
pub fn construct_tiling(k: &Int, l: &Int, gamma: &FareyPath, delta: &FareyPath) -> Result<Tiling, TilingError> {
    if !k.is_positive() {
        return Err(TilingError::BadParameter { name: "K", requirement: "positive" });
    }
    if l.is_zero() {
        return Err(TilingError::BadParameter { name: "L", requirement: "nonzero" });
    }
    if !gamma.is_minimal() || !delta.is_minimal() {
        return Err(TilingError::Path(crate::error::PathError::NotMinimal));
    }
    let rows = gamma
        .vertices()
        .iter()
        .map(|g| delta.vertices().iter().map(|d| k * (&g.a * &d.b - l * &g.b * &d.a)).collect())
        .collect();
    Tiling::new(gamma.base(), delta.base(), rows)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TilingDecomposition {
    pub params: TamenessParams,
    pub gamma: FareyPath,
    pub delta: FareyPath,
}

/// Inverse of [`construct_tiling`] through the Smith normal form `M = U diag(K, K|L|, 0..) V`.
/// The returned `γ` has first vertex with `b > 0`, or `b = 0` and `a > 0`.
pub fn decompose_tiling(t: &Tiling) -> Result<TilingDecomposition, TilingError> {
    let n = verify_n_tiling(t)?;
    if n.is_zero() {
        return Err(TilingError::ZeroDeterminant);
    }
    if t.rows < 3 || t.cols < 3 {
        return Err(TilingError::TooSmall);
    }
    let params = tameness_parameters(t)?;
    let sm = smith_normal_form(&t.to_matrix());
    let rank = sm.rank();
    if rank > 2 {
        return Err(TilingError::RankTooLarge(rank));
    }
    let diag = sm.diagonal();
    if diag[0] != params.k || diag[1] != &params.k * params.l.abs() {
        return Err(TilingError::Internal(format!("unexpected invariant factors {} {}", diag[0], diag[1])));
    }
    let sign_l = if params.l.is_negative() { int(-1) } else { int(1) };
    let mut gamma: Vec<FareyVertex> =
        (0..t.rows).map(|p| FareyVertex::new(sm.u.get(p, 0).clone(), sm.u.get(p, 1).clone())).collect();
    let mut delta: Vec<FareyVertex> =
        (0..t.cols).map(|q| FareyVertex::new(-&sign_l * sm.v.get(1, q), sm.v.get(0, q).clone())).collect();
    if gamma[0].cross(&gamma[1]).is_negative() {
        gamma.iter_mut().for_each(|v| v.b = -&v.b);
        delta.iter_mut().for_each(|v| v.a = -&v.a);
    }
    let first = &gamma[0];
    if first.b.is_negative() || (first.b.is_zero() && first.a.is_negative()) {
        gamma.iter_mut().for_each(|v| *v = v.neg());
        delta.iter_mut().for_each(|v| *v = v.neg());
    }
    let gamma = FareyPath::new(params.r.clone(), t.row_base, gamma)?;
    let delta = FareyPath::new(params.s.clone(), t.col_base, delta)?;
    if construct_tiling(&params.k, &params.l, &gamma, &delta)? != *t {
        return Err(TilingError::Internal("decomposition does not reconstruct the tiling".into()));
    }
    Ok(TilingDecomposition { params, gamma, delta })
}

/// Acts on a path pair by `A = (a b; c d)` in `SL_2(Z)` with `L | b`:
/// `γ -> A γ`, `δ -> B δ` for `B = (a, b/L; c L, d)`. The tiling is unchanged.
pub fn act_gamma0(
    a: &Mat2,
    l: &Int,
    gamma: &FareyPath,
    delta: &FareyPath,
) -> Result<(FareyPath, FareyPath), TilingError> {
    if l.is_zero() || !(&a.b % l).is_zero() {
        return Err(TilingError::BadParameter { name: "A", requirement: "upper right entry divisible by L" });
    }
    let b = Mat2::new(a.a.clone(), &a.b / l, &a.c * l, a.d.clone());
    Ok((gamma.apply(a)?, delta.apply(&b)?))
}

/// `A` with `(γ2, δ2) = A·(γ1, δ1)` under [`act_gamma0`], if the pairs are related.
pub fn gamma0_witness(l: &Int, pair1: (&FareyPath, &FareyPath), pair2: (&FareyPath, &FareyPath)) -> Option<Mat2> {
    let (c1, x1) = pair1.0.canonical_form().ok()?;
    let (c2, x2) = pair2.0.canonical_form().ok()?;
    if c1 != c2 {
        return None;
    }
    let a = &x2.inverse().ok()? * &x1;
    let (g, d) = act_gamma0(&a, l, pair1.0, pair1.1).ok()?;
    (g == *pair2.0 && d == *pair2.1).then_some(a)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SignClass {
    Positive,
    Negative,
    Mixed,
}

impl fmt::Display for SignClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignClass::Positive => "positive",
            SignClass::Negative => "negative",
            SignClass::Mixed => "mixed",
        })
    }
}

pub fn classify_sign(t: &Tiling) -> SignClass {
    if t.entries.iter().all(Signed::is_positive) {
        SignClass::Positive
    } else if t.entries.iter().all(Signed::is_negative) {
        SignClass::Negative
    } else {
        SignClass::Mixed
    }
}

/// Sign class of `construct_tiling(K, L, γ, δ)` read off the paths: entries share
/// a strict sign exactly when `γ` and `Lδ` are compatible clockwise paths. On a
/// finite window an endpoint coincidence gives a zero entry, so the endpoints
/// must be distinct here.
pub fn positivity_from_paths(k: &Int, l: &Int, gamma: &FareyPath, delta: &FareyPath) -> Result<SignClass, TilingError> {
    if !k.is_positive() {
        return Err(TilingError::BadParameter { name: "K", requirement: "positive" });
    }
    if !l.is_positive() {
        return Err(TilingError::NonPositiveDeterminant);
    }
    let ld = delta.scaled(l)?;
    if !are_strictly_compatible(gamma, &ld) {
        return Ok(SignClass::Mixed);
    }
    let (g, d) = (gamma.first(), delta.first());
    let m = k * (&g.a * &d.b - l * &g.b * &d.a);
    Ok(if m.is_positive() { SignClass::Positive } else { SignClass::Negative })
}

/// A finite window with rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatTiling {
    pub row_base: i64,
    pub col_base: i64,
    pub cols: usize,
    pub entries: Vec<Rat>,
}

impl RatTiling {
    pub fn rows(&self) -> usize {
        self.entries.len() / self.cols
    }

    pub fn get(&self, i: i64, j: i64) -> &Rat {
        let p = (i - self.row_base) as usize;
        let q = (j - self.col_base) as usize;
        &self.entries[p * self.cols + q]
    }

    /// Common determinant of contiguous 2x2 blocks, if there is one.
    pub fn block_determinant(&self) -> Option<Rat> {
        let c = self.cols;
        let mut dets = (0..self.rows() - 1).flat_map(|p| {
            (0..c - 1).map(move |q| {
                let e = |a: usize, b: usize| &self.entries[(p + a) * c + q + b];
                e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0)
            })
        });
        let first = dets.next()?;
        dets.all(|d| d == first).then_some(first)
    }
}

/// Divides a tame `n^2`-tiling by `n`; returns `(n, tiling over (1/n)Z)`.
pub fn scale_down(t: &Tiling) -> Result<(Int, RatTiling), TilingError> {
    let big_n = verify_n_tiling(t)?;
    let n = exact_sqrt(&big_n).filter(Signed::is_positive).ok_or(TilingError::NotASquare(big_n))?;
    let entries = t.entries.iter().map(|e| Rat::new(e.clone(), n.clone())).collect();
    Ok((n, RatTiling { row_base: t.row_base, col_base: t.col_base, cols: t.cols, entries }))
}

/// Multiplies a tiling over `(1/n)Z` by `n`.
pub fn scale_up(rt: &RatTiling, n: &Int) -> Result<Tiling, TilingError> {
    if !n.is_positive() {
        return Err(TilingError::BadParameter { name: "n", requirement: "positive" });
    }
    let mut rows = Vec::new();
    for p in 0..rt.rows() {
        let mut row = Vec::new();
        for q in 0..rt.cols {
            let v = &rt.entries[p * rt.cols + q] * Rat::from_integer(n.clone());
            if !v.is_integer() {
                return Err(TilingError::NotDivisible {
                    row: rt.row_base + p as i64,
                    col: rt.col_base + q as i64,
                    by: n.clone(),
                });
            }
            row.push(v.to_integer());
        }
        rows.push(row);
    }
    Tiling::new(rt.row_base, rt.col_base, rows)
}

/// Parses comma separated integer rows (no header).
pub fn tiling_from_csv(text: &str, row_base: i64, col_base: i64) -> Result<Tiling, crate::error::FormatError> {
    use crate::error::FormatError;
    let mut reader =
        csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).flexible(true).from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| FormatError::Csv(e.to_string()))?;
        let row = rec
            .iter()
            .map(|f| f.parse::<Int>().map_err(|_| FormatError::Csv(format!("not an integer: {f:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(Tiling::new(row_base, col_base, rows)?)
}
