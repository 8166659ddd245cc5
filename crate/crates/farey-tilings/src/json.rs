//! JSON encodings of paths, tilings, friezes, polygons, cubes and hypertilings.
//!
//! Integers are written as JSON numbers of arbitrary length. Objects are written
//! compactly with sorted keys, so encoding a decoded value reproduces the input bytes
//! whenever the input was itself produced by [`encode`].

use std::str::FromStr;

use serde_json::{json, Map, Number, Value};

use crate::cube::{BhargavaCube, Triple};
use crate::error::FormatError;
use crate::exact::{Int, Mat2};
use crate::farey::{FareyPath, FareyVertex};
use crate::frieze::{Frieze, TriangulatedPolygon, WeightedPolygon};
use crate::hypertiling::{HyperDecomposition, Hypertiling};
use crate::tiling::{TamenessParams, Tiling, TilingDecomposition};

/// Default bound on the number of decimal digits accepted in one integer.
pub const DEFAULT_MAX_DIGITS: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_digits: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { max_digits: DEFAULT_MAX_DIGITS }
    }
}

pub trait JsonCodec: Sized {
    fn to_json(&self) -> Value;
    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError>;
}

pub fn encode<T: JsonCodec>(x: &T) -> String {
    x.to_json().to_string()
}

pub fn decode<T: JsonCodec>(text: &str, limits: &Limits) -> Result<T, FormatError> {
    let v: Value = serde_json::from_str(text).map_err(|e| FormatError::Json(e.to_string()))?;
    T::from_json(&v, limits)
}

pub fn int_to_json(n: &Int) -> Value {
    Value::Number(Number::from_str(&n.to_string()).expect("decimal integers are valid JSON numbers"))
}

fn int_from_json(v: &Value, field: &str, limits: &Limits) -> Result<Int, FormatError> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        _ => return Err(FormatError::Field(field.to_string())),
    };
    let digits = text.trim_start_matches('-');
    if digits.len() > limits.max_digits {
        return Err(FormatError::TooManyDigits { field: field.to_string(), limit: limits.max_digits });
    }
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FormatError::Field(field.to_string()));
    }
    Int::from_str(&text).map_err(|_| FormatError::Field(field.to_string()))
}

fn i64_from_json(v: &Value, field: &str) -> Result<i64, FormatError> {
    v.as_i64().ok_or_else(|| FormatError::Field(field.to_string()))
}

fn usize_from_json(v: &Value, field: &str) -> Result<usize, FormatError> {
    v.as_u64().and_then(|x| usize::try_from(x).ok()).ok_or_else(|| FormatError::Field(field.to_string()))
}

fn field<'a>(v: &'a Value, name: &str) -> Result<&'a Value, FormatError> {
    v.get(name).ok_or_else(|| FormatError::Field(name.to_string()))
}

fn array<'a>(v: &'a Value, name: &str) -> Result<&'a Vec<Value>, FormatError> {
    v.as_array().ok_or_else(|| FormatError::Field(name.to_string()))
}

fn ints_to_json(xs: &[Int]) -> Value {
    Value::Array(xs.iter().map(int_to_json).collect())
}

fn ints_from_json(v: &Value, name: &str, limits: &Limits) -> Result<Vec<Int>, FormatError> {
    array(v, name)?.iter().map(|x| int_from_json(x, name, limits)).collect()
}

fn range_to_json((a, b): (i64, i64)) -> Value {
    json!([a, b])
}

fn range_from_json(v: &Value, name: &str) -> Result<(i64, i64), FormatError> {
    match array(v, name)?.as_slice() {
        [a, b] => Ok((i64_from_json(a, name)?, i64_from_json(b, name)?)),
        _ => Err(FormatError::Field(name.to_string())),
    }
}

fn pair_from_json(v: &Value, name: &str, limits: &Limits) -> Result<(Int, Int), FormatError> {
    match array(v, name)?.as_slice() {
        [a, b] => Ok((int_from_json(a, name, limits)?, int_from_json(b, name, limits)?)),
        _ => Err(FormatError::Field(name.to_string())),
    }
}

fn object(pairs: Vec<(&str, Value)>) -> Value {
    Value::Object(pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect::<Map<_, _>>())
}

impl JsonCodec for Int {
    fn to_json(&self) -> Value {
        int_to_json(self)
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        int_from_json(v, "integer", limits)
    }
}

/// `{"base": i, "level": R, "vertices": [[a, b], ...]}`.
impl JsonCodec for FareyPath {
    fn to_json(&self) -> Value {
        let vertices = self.vertices().iter().map(|v| ints_to_json(&[v.a.clone(), v.b.clone()])).collect();
        object(vec![
            ("base", json!(self.base())),
            ("level", int_to_json(self.level())),
            ("vertices", Value::Array(vertices)),
        ])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let level = int_from_json(field(v, "level")?, "level", limits)?;
        let base = match v.get("base") {
            Some(b) => i64_from_json(b, "base")?,
            None => 0,
        };
        let vertices = array(field(v, "vertices")?, "vertices")?
            .iter()
            .map(|p| pair_from_json(p, "vertices", limits).map(|(a, b)| FareyVertex::new(a, b)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FareyPath::new(level, base, vertices)?)
    }
}

/// `{"cols": [first, last], "entries": [[..], ..], "rows": [first, last]}`.
impl JsonCodec for Tiling {
    fn to_json(&self) -> Value {
        let rows = self.to_rows().iter().map(|r| ints_to_json(r)).collect();
        object(vec![
            ("cols", range_to_json(self.col_range())),
            ("entries", Value::Array(rows)),
            ("rows", range_to_json(self.row_range())),
        ])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let rows = array(field(v, "entries")?, "entries")?
            .iter()
            .map(|r| ints_from_json(r, "entries", limits))
            .collect::<Result<Vec<_>, _>>()?;
        let row_base = match v.get("rows") {
            Some(r) => range_from_json(r, "rows")?.0,
            None => 0,
        };
        let col_base = match v.get("cols") {
            Some(c) => range_from_json(c, "cols")?.0,
            None => 0,
        };
        let t = Tiling::new(row_base, col_base, rows)?;
        for (name, declared, actual) in [("rows", v.get("rows"), t.row_range()), ("cols", v.get("cols"), t.col_range())]
        {
            if let Some(r) = declared {
                if range_from_json(r, name)? != actual {
                    return Err(FormatError::Field(name.to_string()));
                }
            }
        }
        Ok(t)
    }
}

/// `{"denom": N, "gcd": g, "rows": [[..], ..], "width": n}` with scaled entries.
impl JsonCodec for Frieze {
    fn to_json(&self) -> Value {
        object(vec![
            ("denom", int_to_json(self.denom())),
            ("gcd", int_to_json(self.gcd())),
            ("rows", Value::Array(self.rows().iter().map(|r| ints_to_json(r)).collect())),
            ("width", json!(self.width())),
        ])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let width = usize_from_json(field(v, "width")?, "width")?;
        let denom = int_from_json(field(v, "denom")?, "denom", limits)?;
        let gcd = int_from_json(field(v, "gcd")?, "gcd", limits)?;
        let rows = array(field(v, "rows")?, "rows")?
            .iter()
            .map(|r| ints_from_json(r, "rows", limits))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Frieze::new(width, denom, gcd, rows)?)
    }
}

/// `{"diagonals": [[u, v], ..], "m": m}`.
impl JsonCodec for TriangulatedPolygon {
    fn to_json(&self) -> Value {
        let diagonals = self.diagonals().iter().map(|&(u, v)| json!([u, v])).collect();
        object(vec![("diagonals", Value::Array(diagonals)), ("m", json!(self.vertex_count()))])
    }

    fn from_json(v: &Value, _limits: &Limits) -> Result<Self, FormatError> {
        let m = usize_from_json(field(v, "m")?, "m")?;
        let diagonals = array(field(v, "diagonals")?, "diagonals")?
            .iter()
            .map(|d| match array(d, "diagonals")?.as_slice() {
                [a, b] => Ok((usize_from_json(a, "diagonals")?, usize_from_json(b, "diagonals")?)),
                _ => Err(FormatError::Field("diagonals".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(TriangulatedPolygon::new(m, &diagonals)?)
    }
}

/// The polygon fields plus `"marked": [[vertex, weight], ..]`.
impl JsonCodec for WeightedPolygon {
    fn to_json(&self) -> Value {
        let mut v = self.polygon().to_json();
        let marked = self.marked().iter().map(|(i, w)| json!([i, int_to_json(w)])).collect();
        v.as_object_mut().expect("polygon encodes as an object").insert("marked".into(), Value::Array(marked));
        v
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let poly = TriangulatedPolygon::from_json(v, limits)?;
        let marked = array(field(v, "marked")?, "marked")?
            .iter()
            .map(|d| match array(d, "marked")?.as_slice() {
                [i, w] => Ok((usize_from_json(i, "marked")?, int_from_json(w, "marked", limits)?)),
                _ => Err(FormatError::Field("marked".into())),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WeightedPolygon::new(poly, marked)?)
    }
}

/// `{"cube": [[[m000, m001], [m010, m011]], [[m100, m101], [m110, m111]]]}`.
impl JsonCodec for BhargavaCube {
    fn to_json(&self) -> Value {
        let nested = (0..2)
            .map(|i| {
                Value::Array(
                    (0..2).map(|j| ints_to_json(&[self.get(i, j, 0).clone(), self.get(i, j, 1).clone()])).collect(),
                )
            })
            .collect();
        object(vec![("cube", Value::Array(nested))])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let outer = array(field(v, "cube")?, "cube")?;
        if outer.len() != 2 {
            return Err(FormatError::Field("cube".into()));
        }
        let mut m: [Int; 8] = Default::default();
        for (i, plane) in outer.iter().enumerate() {
            let plane = array(plane, "cube")?;
            if plane.len() != 2 {
                return Err(FormatError::Field("cube".into()));
            }
            for (j, fiber) in plane.iter().enumerate() {
                let (x, y) = pair_from_json(fiber, "cube", limits)?;
                m[4 * i + 2 * j] = x;
                m[4 * i + 2 * j + 1] = y;
            }
        }
        Ok(BhargavaCube::new(m))
    }
}

fn mat_to_json(m: &Mat2) -> Value {
    Value::Array(vec![ints_to_json(&[m.a.clone(), m.b.clone()]), ints_to_json(&[m.c.clone(), m.d.clone()])])
}

fn mat_from_json(v: &Value, limits: &Limits) -> Result<Mat2, FormatError> {
    match array(v, "triple")?.as_slice() {
        [r0, r1] => {
            let (a, b) = pair_from_json(r0, "triple", limits)?;
            let (c, d) = pair_from_json(r1, "triple", limits)?;
            Ok(Mat2::new(a, b, c, d))
        }
        _ => Err(FormatError::Field("triple".into())),
    }
}

/// `{"triple": [[[a, b], [c, d]], x3]}`.
impl JsonCodec for Triple {
    fn to_json(&self) -> Value {
        object(vec![("triple", Value::Array(self.0.iter().map(mat_to_json).collect()))])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        match array(field(v, "triple")?, "triple")?.as_slice() {
            [a, b, c] => {
                Ok(Triple::new(mat_from_json(a, limits)?, mat_from_json(b, limits)?, mat_from_json(c, limits)?))
            }
            _ => Err(FormatError::Field("triple".into())),
        }
    }
}

/// `{"entries": [i][j][k], "ranges": [[first, last], x3]}`.
impl JsonCodec for Hypertiling {
    fn to_json(&self) -> Value {
        let entries = self
            .to_nested()
            .iter()
            .map(|plane| Value::Array(plane.iter().map(|f| ints_to_json(f)).collect()))
            .collect();
        let ranges = (0..3).map(|a| range_to_json(self.range(a))).collect();
        object(vec![("entries", Value::Array(entries)), ("ranges", Value::Array(ranges))])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let nested = array(field(v, "entries")?, "entries")?
            .iter()
            .map(|plane| {
                array(plane, "entries")?
                    .iter()
                    .map(|f| ints_from_json(f, "entries", limits))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let ranges = match v.get("ranges") {
            Some(r) => {
                let rs = array(r, "ranges")?;
                if rs.len() != 3 {
                    return Err(FormatError::Field("ranges".into()));
                }
                Some([
                    range_from_json(&rs[0], "ranges")?,
                    range_from_json(&rs[1], "ranges")?,
                    range_from_json(&rs[2], "ranges")?,
                ])
            }
            None => None,
        };
        let base = ranges.map_or([0; 3], |r| r.map(|x| x.0));
        let h = Hypertiling::new(base, nested)?;
        if let Some(r) = ranges {
            if r != [h.range(0), h.range(1), h.range(2)] {
                return Err(FormatError::Field("ranges".into()));
            }
        }
        Ok(h)
    }
}

/// `{"k": K, "l": L, "r": R, "s": S}`.
impl JsonCodec for TamenessParams {
    fn to_json(&self) -> Value {
        object(vec![
            ("k", int_to_json(&self.k)),
            ("l", int_to_json(&self.l)),
            ("r", int_to_json(&self.r)),
            ("s", int_to_json(&self.s)),
        ])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let get = |name: &str| int_from_json(field(v, name)?, name, limits);
        Ok(TamenessParams { k: get("k")?, l: get("l")?, r: get("r")?, s: get("s")? })
    }
}

/// `{"delta": path, "gamma": path, "params": params}`.
impl JsonCodec for TilingDecomposition {
    fn to_json(&self) -> Value {
        object(vec![
            ("delta", self.delta.to_json()),
            ("gamma", self.gamma.to_json()),
            ("params", self.params.to_json()),
        ])
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        Ok(TilingDecomposition {
            params: TamenessParams::from_json(field(v, "params")?, limits)?,
            gamma: FareyPath::from_json(field(v, "gamma")?, limits)?,
            delta: FareyPath::from_json(field(v, "delta")?, limits)?,
        })
    }
}

/// `{"cube": .., "paths": [path, path, path]}`.
impl JsonCodec for HyperDecomposition {
    fn to_json(&self) -> Value {
        let mut v = self.cube.to_json();
        v.as_object_mut()
            .expect("cube encodes as an object")
            .insert("paths".into(), Value::Array(self.paths.iter().map(JsonCodec::to_json).collect()));
        v
    }

    fn from_json(v: &Value, limits: &Limits) -> Result<Self, FormatError> {
        let cube = BhargavaCube::from_json(v, limits)?;
        let ps = array(field(v, "paths")?, "paths")?;
        if ps.len() != 3 {
            return Err(FormatError::Field("paths".into()));
        }
        let paths = [
            FareyPath::from_json(&ps[0], limits)?,
            FareyPath::from_json(&ps[1], limits)?,
            FareyPath::from_json(&ps[2], limits)?,
        ];
        Ok(HyperDecomposition { cube, paths })
    }
}
