//! File formats, input generators and the command-line pipeline for `sdgla-core`.

pub use sdgla_core as core;

pub mod format;
pub mod generate;
pub mod pipeline;
