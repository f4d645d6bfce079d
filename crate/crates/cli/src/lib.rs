//! Command-line front end: rendering, verification suites and argument
//! handling for the `hammocks` binary.

mod app;
pub mod render;
pub mod suites;

pub use app::run;
