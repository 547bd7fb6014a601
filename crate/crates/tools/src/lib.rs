//! Files, DOT export, benchmarking and the `ktree` command line, on top of
//! `ktree-core`.

pub mod bench;
pub mod cli;
pub mod dot;
pub mod format;
