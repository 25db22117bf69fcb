//! Command-line front end: argument parsing, rendering, and the cone cache.

pub mod args;
pub mod cache;
pub mod commands;
pub mod output;

pub use output::{FacetRecord, OutputEnvelope, SignatureRecord, SweepRecord};
