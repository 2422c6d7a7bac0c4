//! Surface participation ratios and derived qubit figures.

pub mod materials;

pub use materials::{LayerKind, MaterialLayer, MaterialStack};
