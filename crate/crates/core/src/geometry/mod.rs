//! Pad outlines, wire profiles, reference geometries and polygon utilities.

pub mod baseline;
pub mod exchange;
pub mod pad;
pub mod polygon;
pub mod spline;
pub mod svg;
pub mod wire;

pub use baseline::{make_baseline, BaselineGeometry, BaselineKind, BaselineParams};
pub use exchange::GeometryDoc;
pub use pad::{build_pad_outline, DeviceLayout, PadConfig, PadDesignVector, PadLayout};
pub use polygon::{offset_polygon, Polygon, Region};
pub use spline::{ControlPoint, SplineCurve};
pub use wire::{
    build_wire_profile, linear_taper_wire, straight_wire, WireDesignVector, WireModelConfig,
    WireProfile,
};
