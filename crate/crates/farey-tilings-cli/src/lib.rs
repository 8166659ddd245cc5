//! Command-line front end: file loading, dispatch, and SVG/text rendering.

pub mod app;
pub mod io;
pub mod render;

pub use app::run;
