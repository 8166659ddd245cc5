//! Exact construction, verification and decomposition of tame integer tilings,
//! rational friezes and hypertilings through paths in Farey graphs.

pub mod cube;
pub mod error;
pub mod exact;
pub mod farey;
pub mod fibonacci;
pub mod frieze;
pub mod hypertiling;
pub mod json;
pub mod normalize;
pub mod tiling;

pub use cube::{act_triple, stabilizes, unit_cube_stabilizer, BhargavaCube, Triple};
pub use error::*;
pub use exact::{gcd_all, int, rat, smith_normal_form, Int, IntMatrix, Mat2, Rat, Smith};
pub use farey::{
    are_compatible, are_strictly_compatible, cyclic_clockwise, horocycle, lambda_length, reconstruct_path, ExtRat,
    FareyPath, FareyVertex, Horocycle, Itinerary,
};
pub use fibonacci::{fib, fib_pair_oracle, fibonacci_hypertiling, make_an, sl2_cross_section_cubes};
pub use frieze::{
    frieze_from_path, frieze_from_weighted_polygon, path_from_frieze, weighted_polygon_quiddity, Frieze,
    TriangulatedPolygon, WeightedPolygon,
};
pub use hypertiling::{
    construct_hypertiling, cross_section, decompose_hypertiling, decompose_unit_hypertiling, hyper_recurrence,
    is_synchronised, is_tame_hypertiling, verify_hypertiling, HyperDecomposition, Hypertiling,
};
pub use json::{decode, encode, JsonCodec, Limits};
pub use normalize::normalize_unit_cube;
pub use tiling::{
    classify_sign, construct_tiling, decompose_tiling, is_tame, positivity_from_paths, tameness_parameters,
    verify_n_tiling, SignClass, TamenessParams, Tiling, TilingDecomposition,
};
