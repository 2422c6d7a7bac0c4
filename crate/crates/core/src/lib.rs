//! Shape optimization of planar transmon qubits for low surface dielectric loss.
//!
//! The crate couples four subsystems:
//!
//! * [`geometry`] — B-spline capacitor pad outlines, junction-wire width
//!   profiles, reference geometries, polygon utilities and exchange formats.
//! * [`solver`] — a method-of-moments electrostatic solver for zero-thickness
//!   conductors on a dielectric half-space, plus the local 2D metal-edge
//!   problem that yields the perimeter scaling factors.
//! * [`participation`] — surface participation ratios per interface layer and
//!   region, the flat-coax junction-wire energy integral, and the derived
//!   quality factor / relaxation-time / transmon-energy figures.
//! * [`optimizer`] — the DIRECT (DIviding RECTangles) derivative-free global
//!   optimizer with quadratic penalty composition and dual termination rules.
//!
//! [`pipeline`] ties everything into reproducible runs behind the `qsurf` CLI.

pub mod error;
pub mod geometry;
pub mod optimizer;
pub mod participation;
pub mod pipeline;
pub mod solver;

pub use error::CoreError;

/// Physical constants (SI).
pub mod constants {
    /// Vacuum permittivity, F/m.
    pub const EPSILON_0: f64 = 8.854_187_812_8e-12;
    /// Elementary charge, C.
    pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;
    /// Planck constant, J·s.
    pub const PLANCK: f64 = 6.626_070_15e-34;
    /// Magnetic flux quantum h/2e, Wb.
    pub const FLUX_QUANTUM: f64 = PLANCK / (2.0 * ELEMENTARY_CHARGE);
    /// Metres per micrometre.
    pub const UM: f64 = 1e-6;
}
