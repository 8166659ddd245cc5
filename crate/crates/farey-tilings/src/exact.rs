//! Exact integer and rational arithmetic, 2x2 matrices and Smith normal form.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ExactError;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Reduced rational `n/d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

pub fn rat_from_int(n: &Int) -> Rat {
    Rat::from_integer(n.clone())
}

/// Nonnegative gcd of a nonempty list.
pub fn gcd_all(values: &[Int]) -> Result<Int, ExactError> {
    if values.is_empty() {
        return Err(ExactError::EmptyList);
    }
    Ok(values.iter().fold(Int::zero(), |g, v| g.gcd(v)))
}

pub fn det2(a: &Int, b: &Int, c: &Int, d: &Int) -> Int {
    a * d - b * c
}

/// Exact integer square root, `None` unless `n` is a perfect square.
pub fn exact_sqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

/// `(g, x, y)` with `g = gcd(a, b) >= 0` and `a x + b y = g`.
pub fn extended_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// The 2x2 integer matrix `(a b; c d)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    pub a: Int,
    pub b: Int,
    pub c: Int,
    pub d: Int,
}

impl Mat2 {
    pub fn new(a: Int, b: Int, c: Int, d: Int) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(int(a), int(b), int(c), int(d))
    }

    pub fn identity() -> Self {
        Mat2::from_i64(1, 0, 0, 1)
    }

    /// `(0 -1; 1 0)`, the order-4 rotation.
    pub fn rotation() -> Self {
        Mat2::from_i64(0, -1, 1, 0)
    }

    /// `(1 0; 0 -1)`.
    pub fn reflection() -> Self {
        Mat2::from_i64(1, 0, 0, -1)
    }

    pub fn det(&self) -> Int {
        det2(&self.a, &self.b, &self.c, &self.d)
    }

    pub fn is_sl2(&self) -> bool {
        self.det().is_one()
    }

    pub fn transpose(&self) -> Self {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn neg(&self) -> Self {
        Mat2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn adjugate(&self) -> Self {
        Mat2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    /// Inverse over the integers; requires `det = ±1`.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        let det = self.det();
        if det.is_one() {
            Ok(self.adjugate())
        } else if (-&det).is_one() {
            Ok(self.adjugate().neg())
        } else {
            Err(ExactError::NotUnimodular(det))
        }
    }

    pub fn apply(&self, x: &Int, y: &Int) -> (Int, Int) {
        (&self.a * x + &self.b * y, &self.c * x + &self.d * y)
    }

    /// Integer power; negative exponents need a unimodular matrix.
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut out = Mat2::identity();
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.a, self.b, self.c, self.d)
    }
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Int>) -> Result<Self, ExactError> {
        if rows == 0 || cols == 0 {
            return Err(ExactError::EmptyMatrix);
        }
        if data.len() != rows * cols {
            return Err(ExactError::ShapeMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Int>>) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(ExactError::ShapeMismatch { expected: c, found: row.len() });
            }
            data.extend(row);
        }
        IntMatrix::new(r, c, data)
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Result<Self, ExactError> {
        IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![Int::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Int::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.cols + c] = v;
    }

    pub fn entries(&self) -> &[Int] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> Result<IntMatrix, ExactError> {
        if self.cols != o.rows {
            return Err(ExactError::ShapeMismatch { expected: self.cols, found: o.rows });
        }
        let mut out = IntMatrix::zeros(self.rows, o.cols);
        for r in 0..self.rows {
            for c in 0..o.cols {
                let mut acc = Int::zero();
                for t in 0..self.cols {
                    acc += self.get(r, t) * o.get(t, c);
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<Int, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::ShapeMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        let mut a = self.data.clone();
        let mut sign = Int::one();
        let mut prev = Int::one();
        for k in 0..n {
            if a[k * n + k].is_zero() {
                match (k + 1..n).find(|&r| !a[r * n + k].is_zero()) {
                    Some(r) => {
                        for c in 0..n {
                            a.swap(k * n + c, r * n + c);
                        }
                        sign = -sign;
                    }
                    None => return Ok(Int::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                    a[i * n + j] = v / &prev;
                }
            }
            prev = a[k * n + k].clone();
        }
        Ok(sign * prev)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in 0..self.rows {
            self.data.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row i += k * row j
    fn add_row(&mut self, i: usize, j: usize, k: &Int) {
        for c in 0..self.cols {
            let v = self.get(j, c) * k;
            self.data[i * self.cols + c] += v;
        }
    }

    /// col i += k * col j
    fn add_col(&mut self, i: usize, j: usize, k: &Int) {
        for r in 0..self.rows {
            let v = self.get(r, j) * k;
            self.data[r * self.cols + i] += v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let v = -self.get(i, c);
            self.set(i, c, v);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// `m = u * s * v` with `u`, `v` unimodular and `s` diagonal, nonnegative,
/// each diagonal entry dividing the next. `u_inv * m * v_inv = s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|d| !d.is_zero()).count()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (r, c) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);
    let mut v_inv = IntMatrix::identity(c);

    // Invariant: m = u * s * v, and u_inv, v_inv track the inverses.
    let row_add = |s: &mut IntMatrix, u: &mut IntMatrix, ui: &mut IntMatrix, i, j, k: &Int| {
        s.add_row(i, j, k);
        u.add_col(j, i, &-k);
        ui.add_row(i, j, k);
    };
    let col_add = |s: &mut IntMatrix, v: &mut IntMatrix, vi: &mut IntMatrix, i, j, k: &Int| {
        s.add_col(i, j, k);
        v.add_row(j, i, &-k);
        vi.add_col(i, j, k);
    };

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = s.get(i, j);
                    if !x.is_zero() && best.map_or(true, |(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Smith { u, s, v, u_inv, v_inv };
            };
            if pi != t {
                s.swap_rows(pi, t);
                u.swap_cols(pi, t);
                u_inv.swap_rows(pi, t);
            }
            if pj != t {
                s.swap_cols(pj, t);
                v.swap_rows(pj, t);
                v_inv.swap_cols(pj, t);
            }
            let pivot = s.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = s.get(i, t) / &pivot;
                if !q.is_zero() {
                    row_add(&mut s, &mut u, &mut u_inv, i, t, &-q);
                }
                if !s.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                let q = s.get(t, j) / &pivot;
                if !q.is_zero() {
                    col_add(&mut s, &mut v, &mut v_inv, j, t, &-q);
                }
                if !s.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !(s.get(i, j) % &pivot).is_zero());
            match bad {
                Some((i, _)) => row_add(&mut s, &mut u, &mut u_inv, t, i, &Int::one()),
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            for i in 0..r {
                let x = -u.get(i, t);
                u.set(i, t, x);
            }
            u_inv.negate_row(t);
        }
    }
    Smith { u, s, v, u_inv, v_inv }
}
