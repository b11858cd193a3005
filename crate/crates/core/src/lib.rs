//! Verification toolkit for list colouring with separation on small
//! configurations: exhaustive (f,s)-choosability, Alon-Tarsi certificates,
//! identification of configuration vertices, and exact discharging audits.

pub mod alon_tarsi;
pub mod choose;
pub mod cluster;
pub mod commands;
pub mod config;
pub mod discharge;
pub mod error;
pub mod fixture;
pub mod graph;
pub mod merge;
pub mod rational;
pub mod report;
pub mod template;

pub use error::{Error, Result};
