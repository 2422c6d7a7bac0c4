//! Junction-wire width profiles.
//!
//! A wire lead runs from the junction at y = 0 to the pad attach point at
//! y = `wire_length`; the lower lead is its mirror image. The half-width
//! profile r(y) is a clamped cubic spline whose five control points sit at
//! fixed y stations (the Greville abscissae of the knot vector, so that the
//! spline's y component is exactly linear in the parameter and r(y) can be
//! evaluated directly). The control point at the junction is pinned to the
//! junction half-width; the remaining four x coordinates are the design
//! variables.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::geometry::polygon::{Polygon, Region};
use crate::geometry::spline::{ControlPoint, SplineCurve};

/// The 4 free half-width control values (µm), junction side first.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WireDesignVector {
    pub half_widths: [f64; 4],
}

impl WireDesignVector {
    pub fn from_slice(v: &[f64]) -> Result<Self> {
        if v.len() != 4 {
            return Err(CoreError::Usage(format!(
                "wire design vector needs 4 entries, got {}",
                v.len()
            )));
        }
        Ok(Self {
            half_widths: [v[0], v[1], v[2], v[3]],
        })
    }

    pub fn to_vec(self) -> Vec<f64> {
        self.half_widths.to_vec()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WireProfile {
    pub design_vector: WireDesignVector,
    /// Lead length from the junction to the pad attach, µm.
    pub wire_length: f64,
    pub junction_half_width: f64,
    curve: SplineCurve,
}

impl WireProfile {
    /// Half-width r(y) for y in [0, wire_length].
    pub fn half_width(&self, y: f64) -> f64 {
        let t = (y / self.wire_length).clamp(0.0, 1.0);
        // y(t) is exactly linear by Greville placement, so x(t) is r(y).
        self.curve.evaluate(t).expect("t clamped to [0,1]").x
    }

    pub fn control_points(&self) -> &[ControlPoint] {
        self.curve.control_points()
    }

    /// Discretize the lead outline between `y0` and `y1` at the given y
    /// stations, returning the closed ribbon polygon (CCW).
    pub fn ribbon(&self, stations: &[f64]) -> Polygon {
        let mut verts: Vec<[f64; 2]> = stations
            .iter()
            .map(|&y| [self.half_width(y), y])
            .collect();
        for &y in stations.iter().rev() {
            verts.push([-self.half_width(y), y]);
        }
        let mut p = Polygon::new(verts);
        p.ensure_ccw();
        p
    }
}

/// Build and validate a wire profile.
pub fn build_wire_profile(
    v: &WireDesignVector,
    wire_length: f64,
    junction_width: f64,
) -> Result<WireProfile> {
    if !(wire_length > 0.0) {
        return Err(CoreError::Usage(format!(
            "wire length must be positive, got {wire_length}"
        )));
    }
    if !(junction_width > 0.0) {
        return Err(CoreError::Usage(format!(
            "junction width must be positive, got {junction_width}"
        )));
    }
    let jhw = 0.5 * junction_width;
    let mut ctrl_x = [jhw, 0.0, 0.0, 0.0, 0.0];
    ctrl_x[1..].copy_from_slice(&v.half_widths);
    if ctrl_x.iter().any(|&x| !x.is_finite() || x <= 0.0) {
        // Convex-hull property: positive control half-widths guarantee
        // r(y) > 0 over the whole span, so this check is exact.
        return Err(CoreError::InfeasibleGeometry(
            "wire half-width control value not strictly positive".into(),
        ));
    }

    // Probe curve to obtain the Greville stations of the 5-point cubic.
    let probe = SplineCurve::clamped_uniform(
        ctrl_x
            .iter()
            .map(|&x| ControlPoint::new(x, 0.0))
            .collect(),
        3,
    )?;
    let greville = probe.greville_abscissae();
    let ctrl: Vec<ControlPoint> = ctrl_x
        .iter()
        .zip(greville.iter())
        .map(|(&x, &g)| ControlPoint::new(x, g * wire_length))
        .collect();
    let curve = SplineCurve::clamped_uniform(ctrl, 3)?;

    Ok(WireProfile {
        design_vector: *v,
        wire_length,
        junction_half_width: jhw,
        curve,
    })
}

/// Straight wire: constant half-width w/2.
pub fn straight_wire(width: f64, wire_length: f64) -> Result<WireProfile> {
    let h = 0.5 * width;
    build_wire_profile(&WireDesignVector { half_widths: [h; 4] }, wire_length, width)
}

/// Linear taper r(y) = w/2 + slope · y, realized exactly by placing control
/// values on the line at the Greville stations.
pub fn linear_taper_wire(width: f64, wire_length: f64, slope: f64) -> Result<WireProfile> {
    let h = 0.5 * width;
    // Greville abscissae for the 5-point cubic: 0, 1/6, 1/2, 5/6, 1.
    let g = [1.0 / 6.0, 0.5, 5.0 / 6.0, 1.0];
    let half_widths = g.map(|gi| h + slope * gi * wire_length);
    build_wire_profile(&WireDesignVector { half_widths }, wire_length, width)
}

/// Wire solver model: each lead plus a pad stub at its far end, as two
/// conductors (upper at +y, lower mirrored).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WireModelConfig {
    /// Tip-to-tip junction gap straddling y = 0, µm.
    pub junction_gap: f64,
    /// Pad stub extent beyond the wire end along y, µm.
    pub stub_extent: f64,
    /// Pad stub half-width, µm.
    pub stub_half_width: f64,
}

impl Default for WireModelConfig {
    fn default() -> Self {
        Self {
            junction_gap: 1.0,
            stub_extent: 20.0,
            stub_half_width: 20.0,
        }
    }
}

/// Metal span of the upper lead: [gap/2, wire_length].
pub fn lead_span(profile: &WireProfile, cfg: &WireModelConfig) -> (f64, f64) {
    (0.5 * cfg.junction_gap, profile.wire_length)
}

/// Build the upper-lead ribbon region and its stub for solving; the lower
/// conductor is the mirror image. `stations` controls the ribbon faceting.
pub fn wire_regions(
    profile: &WireProfile,
    cfg: &WireModelConfig,
    stations: &[f64],
) -> (Vec<Region>, Vec<Region>) {
    let ribbon = profile.ribbon(stations);
    let l = profile.wire_length;
    let stub = Polygon::rectangle(
        -cfg.stub_half_width,
        l,
        cfg.stub_half_width,
        l + cfg.stub_extent,
    );
    let upper = vec![
        Region::from_polygon(ribbon),
        Region::from_polygon(stub),
    ];
    let lower = upper
        .iter()
        .map(crate::geometry::pad::mirror_region_y)
        .collect();
    (upper, lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn straight_wire_is_constant() {
        let w = straight_wire(1.0, 81.0).unwrap();
        for k in 0..=20 {
            let y = 81.0 * k as f64 / 20.0;
            assert_relative_eq!(w.half_width(y), 0.5, epsilon = 1e-12);
        }
    }

    #[test]
    fn linear_taper_matches_line() {
        let w = linear_taper_wire(1.0, 40.5, 0.4).unwrap();
        for k in 0..=40 {
            let y = 40.5 * k as f64 / 40.0;
            assert_relative_eq!(w.half_width(y), 0.5 + 0.4 * y, epsilon = 1e-9);
        }
    }

    #[test]
    fn junction_half_width_is_pinned() {
        let v = WireDesignVector {
            half_widths: [2.0, 7.0, 3.0, 10.0],
        };
        let w = build_wire_profile(&v, 40.0, 1.0).unwrap();
        assert_relative_eq!(w.half_width(0.0), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn profile_matches_independent_spline_oracle() {
        // Cox–de Boor style oracle: evaluate the same control polygon through
        // the generic curve engine and compare x(t) against r(y(t)).
        let v = WireDesignVector {
            half_widths: [1.5, 6.0, 2.5, 9.0],
        };
        let w = build_wire_profile(&v, 50.0, 1.0).unwrap();
        let curve = SplineCurve::clamped_uniform(w.control_points().to_vec(), 3).unwrap();
        for k in 0..=100 {
            let t = k as f64 / 100.0;
            let p = curve.evaluate(t).unwrap();
            assert_relative_eq!(w.half_width(p.y), p.x, epsilon = 1e-9, max_relative = 1e-9);
        }
    }

    #[test]
    fn nonpositive_half_width_is_infeasible() {
        let v = WireDesignVector {
            half_widths: [1.0, -0.1, 1.0, 1.0],
        };
        let e = build_wire_profile(&v, 40.0, 1.0);
        assert!(matches!(e, Err(CoreError::InfeasibleGeometry(_))));
    }

    #[test]
    fn wire_regions_mirror_and_clear_junction() {
        let w = straight_wire(1.0, 40.0).unwrap();
        let cfg = WireModelConfig::default();
        let stations: Vec<f64> = (0..=40).map(|i| 0.5 + 39.5 * i as f64 / 40.0).collect();
        let (upper, lower) = wire_regions(&w, &cfg, &stations);
        assert_eq!(upper.len(), 2);
        let (ulo, _) = upper[0].bounding_box();
        assert!(ulo[1] >= 0.5 - 1e-9);
        let (_, lhi) = lower[0].bounding_box();
        assert!(lhi[1] <= -0.5 + 1e-9);
        assert_relative_eq!(upper[0].area(), lower[0].area(), max_relative = 1e-12);
    }
}
