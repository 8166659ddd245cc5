//! Shared inputs for the benchmarks, read from the workspace `data/` directory.

use std::path::PathBuf;

use farey_tilings::{decode, JsonCodec, Limits};

pub fn data_path(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect()
}

pub fn load<T: JsonCodec>(name: &str) -> T {
    let text = std::fs::read_to_string(data_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"));
    decode(&text, &Limits::default()).unwrap_or_else(|e| panic!("{name}: {e}"))
}
