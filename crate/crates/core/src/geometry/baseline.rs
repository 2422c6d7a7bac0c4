//! Reference geometries used for comparison runs.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geometry::pad::DeviceLayout;
use crate::geometry::polygon::{Polygon, Region};
use crate::geometry::wire::{linear_taper_wire, straight_wire, WireProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaselineKind {
    DoublePad,
    Concentric,
    StraightWire,
    LinearTaper,
}

impl std::str::FromStr for BaselineKind {
    type Err = CoreError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "double_pad" => Ok(Self::DoublePad),
            "concentric" => Ok(Self::Concentric),
            "straight_wire" => Ok(Self::StraightWire),
            "linear_taper" => Ok(Self::LinearTaper),
            other => Err(CoreError::Usage(format!(
                "unknown baseline kind '{other}' (expected double_pad, concentric, straight_wire or linear_taper)"
            ))),
        }
    }
}

/// Dimensions for the baseline families. Values not stated alongside the
/// published figures (pad gap, concentric radii) are configurable with
/// representative defaults.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaselineParams {
    /// Double pad: overall footprint (width, height), µm.
    pub double_pad_footprint: [f64; 2],
    /// Double pad: gap between the two rectangles, µm.
    pub double_pad_gap: f64,
    /// Concentric: outer diameter, µm.
    pub concentric_outer_diameter: f64,
    /// Concentric: ring radial width, µm.
    pub concentric_ring_width: f64,
    /// Concentric: disk-to-ring gap, µm.
    pub concentric_gap: f64,
    /// Circle faceting for the concentric outline.
    pub circle_segments: usize,
    /// Wires: junction width, µm.
    pub junction_width: f64,
    /// Wires: lead length (junction to pad attach), µm.
    pub wire_length: f64,
    /// Linear taper slope.
    pub taper_slope: f64,
}

impl Default for BaselineParams {
    fn default() -> Self {
        Self {
            double_pad_footprint: [800.0, 600.0],
            double_pad_gap: 70.0,
            concentric_outer_diameter: 800.0,
            concentric_ring_width: 75.0,
            concentric_gap: 90.0,
            circle_segments: 192,
            junction_width: 1.0,
            wire_length: 81.0,
            taper_slope: 0.4,
        }
    }
}

#[derive(Debug, Clone)]
pub enum BaselineGeometry {
    Pad(DeviceLayout),
    Wire(WireProfile),
}

/// Build the canonical baseline geometry for a kind, under the same
/// validators as optimized shapes.
pub fn make_baseline(
    kind: BaselineKind,
    params: &BaselineParams,
    ground_gap: f64,
    frame_width: f64,
) -> Result<BaselineGeometry> {
    match kind {
        BaselineKind::DoublePad => {
            let [w, h] = params.double_pad_footprint;
            let gap = params.double_pad_gap;
            if !(w > 0.0 && h > gap && gap > 0.0) {
                return Err(CoreError::Usage(format!(
                    "invalid double-pad dimensions {w} × {h}, gap {gap}"
                )));
            }
            let pad_h = 0.5 * (h - gap);
            let upper = Polygon::rectangle(-0.5 * w, 0.5 * gap, 0.5 * w, 0.5 * gap + pad_h);
            validate_outline(&upper)?;
            let pad = Region::from_polygon(upper);
            Ok(BaselineGeometry::Pad(DeviceLayout::two_pads(
                "double_pad",
                &pad,
                ground_gap,
                frame_width,
            )))
        }
        BaselineKind::Concentric => {
            let r_outer = 0.5 * params.concentric_outer_diameter;
            let r_ring_inner = r_outer - params.concentric_ring_width;
            let r_disk = r_ring_inner - params.concentric_gap;
            if !(r_disk > 0.0 && r_ring_inner > r_disk) {
                return Err(CoreError::Usage(format!(
                    "invalid concentric radii: outer {r_outer}, ring inner {r_ring_inner}, disk {r_disk}"
                )));
            }
            let n = params.circle_segments.max(32);
            let disk = Polygon::circle(0.0, 0.0, r_disk, n);
            let ring_outer = Polygon::circle(0.0, 0.0, r_outer, n);
            let ring_inner = Polygon::circle(0.0, 0.0, r_ring_inner, n);
            validate_outline(&disk)?;
            validate_outline(&ring_outer)?;
            let inner = Region::from_polygon(disk);
            let annulus = Region::with_holes(ring_outer, vec![ring_inner]);
            Ok(BaselineGeometry::Pad(DeviceLayout::electrode_pair(
                "concentric",
                vec![inner],
                vec![annulus],
                ground_gap,
                frame_width,
            )))
        }
        BaselineKind::StraightWire => Ok(BaselineGeometry::Wire(straight_wire(
            params.junction_width,
            params.wire_length,
        )?)),
        BaselineKind::LinearTaper => Ok(BaselineGeometry::Wire(linear_taper_wire(
            params.junction_width,
            params.wire_length,
            params.taper_slope,
        )?)),
    }
}

fn validate_outline(p: &Polygon) -> Result<()> {
    if !p.is_simple() {
        return Err(CoreError::InfeasibleGeometry(
            "baseline outline is not a simple polygon".into(),
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn double_pad_matches_requested_footprint() {
        let g = make_baseline(
            BaselineKind::DoublePad,
            &BaselineParams::default(),
            100.0,
            200.0,
        )
        .unwrap();
        let BaselineGeometry::Pad(dev) = g else {
            panic!("expected pad geometry")
        };
        assert_relative_eq!(dev.footprint[0], 800.0, epsilon = 1e-9);
        assert_relative_eq!(dev.footprint[1], 600.0, epsilon = 1e-9);
        assert_eq!(dev.conductors.len(), 3);
        // Two equal rectangles.
        let a0 = dev.conductors[0].regions[0].area();
        let a1 = dev.conductors[1].regions[0].area();
        assert_relative_eq!(a0, a1, max_relative = 1e-12);
        assert_relative_eq!(a0, 800.0 * 265.0, max_relative = 1e-12);
    }

    #[test]
    fn concentric_has_disk_and_annulus() {
        let g = make_baseline(
            BaselineKind::Concentric,
            &BaselineParams::default(),
            100.0,
            200.0,
        )
        .unwrap();
        let BaselineGeometry::Pad(dev) = g else {
            panic!("expected pad geometry")
        };
        // Faceted circles undershoot the requested diameter slightly.
        assert!((dev.footprint[0] - 800.0).abs() < 1.0);
        let annulus = &dev.conductors[1].regions[0];
        assert_eq!(annulus.holes.len(), 1);
        let r_o = 400.0;
        let r_i = 325.0;
        let n = 192.0;
        let poly_factor = 0.5 * n * (std::f64::consts::TAU / n).sin() / std::f64::consts::PI;
        let expect = std::f64::consts::PI * (r_o * r_o - r_i * r_i) * poly_factor;
        assert_relative_eq!(annulus.area(), expect, max_relative = 1e-6);
    }

    #[test]
    fn straight_wire_baseline_constant_profile() {
        let g = make_baseline(
            BaselineKind::StraightWire,
            &BaselineParams::default(),
            100.0,
            200.0,
        )
        .unwrap();
        let BaselineGeometry::Wire(w) = g else {
            panic!("expected wire geometry")
        };
        assert_relative_eq!(w.half_width(30.0), 0.5, epsilon = 1e-12);
        assert_relative_eq!(w.wire_length, 81.0);
    }

    #[test]
    fn unknown_kind_is_usage_error() {
        let e: Result<BaselineKind> = "pentagon".parse();
        assert!(matches!(e, Err(CoreError::Usage(_))));
    }
}
