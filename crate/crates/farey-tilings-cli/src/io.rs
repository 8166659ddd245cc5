//! Reading input files and classifying them by their JSON keys.

use std::fmt;
use std::path::Path;

use farey_tilings::json::DEFAULT_MAX_DIGITS;
use farey_tilings::tiling::tiling_from_csv;
use farey_tilings::{
    BhargavaCube, FareyPath, FormatError, Frieze, HyperDecomposition, Hypertiling, JsonCodec, Limits, Tiling,
    TilingDecomposition, Triple, WeightedPolygon,
};
use serde_json::Value;

pub const MAX_DIGITS_VAR: &str = "FAREY_TILINGS_MAX_DIGITS";

/// Failure classes mapped onto exit codes: `Invalid` is 1, `Input` is 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Input(String),
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Input(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) | CliError::Invalid(m) => f.write_str(m),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::Json(_) | FormatError::Field(_) | FormatError::TooManyDigits { .. } | FormatError::Csv(_) => {
                CliError::Input(e.to_string())
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

/// Any error from the library that is not a parse failure is a validation failure.
pub fn invalid<E: fmt::Display>(e: E) -> CliError {
    CliError::Invalid(e.to_string())
}

/// Digit limit from the environment, falling back to the library default.
pub fn limits_from_env() -> Result<Limits, CliError> {
    match std::env::var(MAX_DIGITS_VAR) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map(|max_digits| Limits { max_digits })
            .map_err(|_| CliError::Input(format!("{MAX_DIGITS_VAR} must be a nonnegative integer, got {s:?}"))),
        Err(_) => Ok(Limits { max_digits: DEFAULT_MAX_DIGITS }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Object {
    Path(FareyPath),
    Tiling(Tiling),
    Frieze(Frieze),
    Polygon(WeightedPolygon),
    Cube(BhargavaCube),
    Triple(Triple),
    Hypertiling(Hypertiling),
    TilingDecomposition(TilingDecomposition),
    HyperDecomposition(HyperDecomposition),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Path(_) => "path",
            Object::Tiling(_) => "tiling",
            Object::Frieze(_) => "frieze",
            Object::Polygon(_) => "polygon",
            Object::Cube(_) => "cube",
            Object::Triple(_) => "triple",
            Object::Hypertiling(_) => "hypertiling",
            Object::TilingDecomposition(_) => "tiling decomposition",
            Object::HyperDecomposition(_) => "hypertiling decomposition",
        }
    }
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn has(v: &Value, keys: &[&str]) -> bool {
    keys.iter().all(|k| v.get(k).is_some())
}

/// Classifies a parsed JSON value by its keys and decodes it.
pub fn object_from_value(v: &Value, limits: &Limits) -> Result<Object, CliError> {
    let obj = if has(v, &["vertices"]) {
        Object::Path(FareyPath::from_json(v, limits)?)
    } else if has(v, &["cube", "paths"]) {
        Object::HyperDecomposition(HyperDecomposition::from_json(v, limits)?)
    } else if has(v, &["cube"]) {
        Object::Cube(BhargavaCube::from_json(v, limits)?)
    } else if has(v, &["triple"]) {
        Object::Triple(Triple::from_json(v, limits)?)
    } else if has(v, &["entries", "ranges"]) {
        Object::Hypertiling(Hypertiling::from_json(v, limits)?)
    } else if has(v, &["entries"]) {
        Object::Tiling(Tiling::from_json(v, limits)?)
    } else if has(v, &["width", "rows"]) {
        Object::Frieze(Frieze::from_json(v, limits)?)
    } else if has(v, &["m", "diagonals", "marked"]) {
        Object::Polygon(WeightedPolygon::from_json(v, limits)?)
    } else if has(v, &["params", "gamma", "delta"]) {
        Object::TilingDecomposition(TilingDecomposition::from_json(v, limits)?)
    } else {
        return Err(CliError::Input("unrecognised object: no known set of fields".into()));
    };
    Ok(obj)
}

/// Loads a JSON object, or a tiling from a `.csv` file with the given first indices.
pub fn load(path: &Path, limits: &Limits, csv_base: (i64, i64)) -> Result<Object, CliError> {
    let text = read_text(path)?;
    let context = |e: CliError| match e {
        CliError::Input(m) => CliError::Input(format!("{}: {m}", path.display())),
        CliError::Invalid(m) => CliError::Invalid(format!("{}: {m}", path.display())),
    };
    if path.extension().is_some_and(|e| e.eq_ignore_ascii_case("csv")) {
        return tiling_from_csv(&text, csv_base.0, csv_base.1).map(Object::Tiling).map_err(|e| context(e.into()));
    }
    let v: Value =
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: invalid JSON: {e}", path.display())))?;
    object_from_value(&v, limits).map_err(context)
}

/// Loads a file that must hold one particular kind of object.
pub fn load_as<T>(
    path: &Path,
    limits: &Limits,
    pick: impl FnOnce(Object) -> Option<T>,
    want: &str,
) -> Result<T, CliError> {
    let obj = load(path, limits, (0, 0))?;
    let kind = obj.kind();
    pick(obj).ok_or_else(|| CliError::Input(format!("{}: expected a {want}, found a {kind}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use farey_tilings::encode;

    #[test]
    fn classifies_by_keys() {
        let limits = Limits::default();
        let p = FareyPath::from_i64(1, 0, &[(1, 0), (1, 1), (0, 1)]).unwrap();
        let v: Value = serde_json::from_str(&encode(&p)).unwrap();
        assert_eq!(object_from_value(&v, &limits).unwrap(), Object::Path(p));
        let c = BhargavaCube::unit();
        let v: Value = serde_json::from_str(&encode(&c)).unwrap();
        assert_eq!(object_from_value(&v, &limits).unwrap(), Object::Cube(c));
        let v: Value = serde_json::from_str(r#"{"foo":1}"#).unwrap();
        assert!(matches!(object_from_value(&v, &limits), Err(CliError::Input(_))));
    }

    #[test]
    fn parse_and_validation_errors_differ() {
        let limits = Limits::default();
        let missing: Value = serde_json::from_str(r#"{"vertices":[[1,0],[1,1],[0,1]]}"#).unwrap();
        let e = object_from_value(&missing, &limits).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("level"));
        let not_edge: Value = serde_json::from_str(r#"{"level":1,"vertices":[[1,0],[2,1],[0,1]]}"#).unwrap();
        assert_eq!(object_from_value(&not_edge, &limits).unwrap_err().exit_code(), 1);
    }
}
